// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinvqd/optimizer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "spinvqd/errors.hpp"

namespace spinvqd {

namespace {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kC1 = 1e-3;
constexpr double kC2 = 0.9;

struct Memory {
  std::deque<Vec> s, y;
  double theta = 1.0;
  Mat w; // [Y, theta S]
  Mat m; // middle matrix

  bool empty() const { return s.empty(); }
  void clear() {
    s.clear();
    y.clear();
    theta = 1.0;
    w.resize(0, 0);
    m.resize(0, 0);
  }

  void push(const Vec& sk, const Vec& yk, int limit) {
    s.push_back(sk);
    y.push_back(yk);
    if (static_cast<int>(s.size()) > limit) {
      s.pop_front();
      y.pop_front();
    }
    theta = yk.squaredNorm() / yk.dot(sk);
    rebuild();
  }

  void rebuild() {
    const auto k = static_cast<Eigen::Index>(s.size());
    const auto n = s.front().size();
    Mat S(n, k), Y(n, k);
    for (Eigen::Index j = 0; j < k; ++j) {
      S.col(j) = s[j];
      Y.col(j) = y[j];
    }
    w.resize(n, 2 * k);
    w << Y, theta * S;
    const Mat sy = S.transpose() * Y;
    Mat mid = Mat::Zero(2 * k, 2 * k);
    for (Eigen::Index i = 0; i < k; ++i) {
      mid(i, i) = -sy(i, i);
      for (Eigen::Index j = 0; j < i; ++j) {
        mid(k + i, j) = sy(i, j); // L
        mid(j, k + i) = sy(i, j); // L^T
      }
    }
    mid.bottomRightCorner(k, k) = theta * (S.transpose() * S);
    m = mid.fullPivLu().inverse();
  }
};

Vec clamp(const Vec& x, double lo, double hi) { return x.cwiseMax(lo).cwiseMin(hi); }

double projected_gradient_norm(const Vec& x, const Vec& g, double lo, double hi) {
  return (clamp(x - g, lo, hi) - x).cwiseAbs().maxCoeff();
}

// Generalized Cauchy point followed by direct primal subspace minimization.
Vec search_target(const Vec& x, const Vec& g, const Memory& mem, double lo, double hi) {
  const auto n = x.size();
  const double theta = mem.theta;
  const bool has_mem = !mem.empty();

  Vec t(n), d(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (g[i] < 0)
      t[i] = (x[i] - hi) / g[i];
    else if (g[i] > 0)
      t[i] = (x[i] - lo) / g[i];
    else
      t[i] = kInf;
    d[i] = t[i] > 0 ? -g[i] : 0.0;
  }
  std::vector<Eigen::Index> order;
  for (Eigen::Index i = 0; i < n; ++i)
    if (t[i] > 0 && t[i] < kInf)
      order.push_back(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return t[a] < t[b]; });

  Vec xcp = x;
  Vec p = has_mem ? Vec(mem.w.transpose() * d) : Vec();
  Vec c = has_mem ? Vec::Zero(mem.w.cols()) : Vec();
  double fp = -d.squaredNorm();
  double fpp = -theta * fp;
  if (has_mem)
    fpp -= p.dot(mem.m * p);
  fpp = std::max(fpp, std::numeric_limits<double>::epsilon() * std::abs(fp));
  double dt_min = fpp > 0 ? -fp / fpp : 0.0;
  double t_old = 0.0;
  std::size_t next = 0;

  while (next < order.size()) {
    const Eigen::Index b = order[next];
    const double dt = t[b] - t_old;
    if (dt_min < dt)
      break;
    const double gb = g[b];
    const double xb = d[b] > 0 ? hi : lo;
    const double zb = xb - x[b];
    xcp[b] = xb;
    if (has_mem)
      c += dt * p;
    fp += dt * fpp + gb * gb + theta * gb * zb;
    fpp -= theta * gb * gb;
    if (has_mem) {
      const Vec wb = mem.w.row(b).transpose();
      fp -= gb * wb.dot(mem.m * c);
      fpp -= 2.0 * gb * wb.dot(mem.m * p) + gb * gb * wb.dot(mem.m * wb);
      p += gb * wb;
    }
    d[b] = 0.0;
    t_old = t[b];
    ++next;
    if (fpp <= 0.0)
      fpp = std::numeric_limits<double>::epsilon() * std::max(std::abs(fp), 1.0);
    dt_min = -fp / fpp;
  }
  dt_min = std::max(dt_min, 0.0);
  t_old += dt_min;
  for (Eigen::Index i = 0; i < n; ++i)
    if (d[i] != 0.0)
      xcp[i] = std::clamp(x[i] + t_old * d[i], lo, hi);

  // Free variables at the Cauchy point.
  std::vector<Eigen::Index> free;
  for (Eigen::Index i = 0; i < n; ++i)
    if (xcp[i] > lo && xcp[i] < hi)
      free.push_back(i);
  if (free.empty())
    return xcp;

  const Vec step = xcp - x;
  Vec r = g + theta * step;
  if (has_mem)
    r -= mem.w * (mem.m * (mem.w.transpose() * step));
  const auto nf = static_cast<Eigen::Index>(free.size());
  Vec rz(nf);
  Mat bz = Mat::Identity(nf, nf) * theta;
  Mat wz;
  if (has_mem) {
    wz.resize(nf, mem.w.cols());
    for (Eigen::Index a = 0; a < nf; ++a)
      wz.row(a) = mem.w.row(free[a]);
    bz -= wz * mem.m * wz.transpose();
  }
  for (Eigen::Index a = 0; a < nf; ++a)
    rz[a] = r[free[a]];
  Eigen::LDLT<Mat> ldlt(bz);
  Vec du = ldlt.solve(-rz);
  if (ldlt.info() != Eigen::Success || !du.allFinite())
    return xcp;

  double alpha = 1.0;
  for (Eigen::Index a = 0; a < nf; ++a) {
    const double xi = xcp[free[a]];
    if (du[a] > 0)
      alpha = std::min(alpha, (hi - xi) / du[a]);
    else if (du[a] < 0)
      alpha = std::min(alpha, (lo - xi) / du[a]);
  }
  Vec xbar = xcp;
  for (Eigen::Index a = 0; a < nf; ++a)
    xbar[free[a]] = std::clamp(xcp[free[a]] + alpha * du[a], lo, hi);
  return xbar;
}

struct Trial {
  double alpha = 0.0;
  double f = 0.0;
  double slope = 0.0;
  Vec x, g;
};

class Evaluator {
public:
  Evaluator(const Objective& f, std::size_t n) : f_(f), g_(n) {}

  Trial eval(const Vec& x0, const Vec& d, double alpha, double lo, double hi) {
    Trial t;
    t.alpha = alpha;
    t.x = clamp(x0 + alpha * d, lo, hi);
    t.f = (*this)(t.x, t.g);
    t.slope = t.g.dot(d);
    return t;
  }

  double operator()(const Vec& x, Vec& g) {
    std::vector<double> xs(x.data(), x.data() + x.size());
    const double v = f_(xs, g_);
    g = Eigen::Map<const Vec>(g_.data(), static_cast<Eigen::Index>(g_.size()));
    ++count;
    if (!std::isfinite(v) || !g.allFinite())
      throw DomainError("objective returned a non-finite value");
    if (v < best_f) {
      best_f = v;
      best_x = x;
      best_g = g;
    }
    return v;
  }

  int count = 0;
  double best_f = kInf;
  Vec best_x, best_g;

private:
  const Objective& f_;
  std::vector<double> g_;
};

double cubic_min(const Trial& a, const Trial& b) {
  const double d1 = a.slope + b.slope - 3.0 * (a.f - b.f) / (a.alpha - b.alpha);
  const double disc = d1 * d1 - a.slope * b.slope;
  const double mid = 0.5 * (a.alpha + b.alpha);
  if (disc < 0)
    return mid;
  const double d2 = std::copysign(std::sqrt(disc), b.alpha - a.alpha);
  const double den = b.slope - a.slope + 2.0 * d2;
  if (den == 0.0)
    return mid;
  const double v = b.alpha - (b.alpha - a.alpha) * (b.slope + d2 - d1) / den;
  return std::isfinite(v) ? v : mid;
}

// Strong-Wolfe search on [0, stpmax]. Returns false if no acceptable point.
bool line_search(Evaluator& ev, const Vec& x, double f0, const Vec& g0, const Vec& d,
                 double init, double stpmax, int max_evals, double lo, double hi, Trial& out) {
  const double slope0 = g0.dot(d);
  Trial prev{0.0, f0, slope0, x, g0};
  double alpha = std::min(init, stpmax);
  int evals = 0;

  auto armijo = [&](const Trial& t) { return t.f <= f0 + kC1 * t.alpha * slope0; };
  auto curvature = [&](const Trial& t) { return std::abs(t.slope) <= -kC2 * slope0; };

  auto zoom = [&](Trial lo_t, Trial hi_t) {
    while (evals < max_evals) {
      const double a = lo_t.alpha, b = hi_t.alpha;
      const double lo_a = std::min(a, b), hi_a = std::max(a, b);
      const double width = hi_a - lo_a;
      double trial = cubic_min(lo_t, hi_t);
      trial = std::clamp(trial, lo_a + 0.1 * width, hi_a - 0.1 * width);
      Trial t = ev.eval(x, d, trial, lo, hi);
      ++evals;
      if (!armijo(t) || t.f >= lo_t.f) {
        hi_t = t;
      } else {
        if (curvature(t)) {
          out = t;
          return true;
        }
        if (t.slope * (hi_t.alpha - lo_t.alpha) >= 0)
          hi_t = lo_t;
        lo_t = t;
      }
      if (width < 1e-14 * std::max(1.0, hi_a))
        break;
    }
    if (lo_t.alpha > 0.0 && lo_t.f < f0) {
      out = lo_t;
      return true;
    }
    return false;
  };

  while (evals < max_evals) {
    Trial t = ev.eval(x, d, alpha, lo, hi);
    ++evals;
    if (!armijo(t) || (prev.alpha > 0 && t.f >= prev.f))
      return zoom(prev, t);
    if (curvature(t)) {
      out = t;
      return true;
    }
    if (t.slope >= 0)
      return zoom(t, prev);
    if (alpha >= stpmax) {
      out = t;
      return true;
    }
    prev = t;
    alpha = std::min(2.5 * alpha, stpmax);
  }
  if (prev.alpha > 0.0) {
    out = prev;
    return true;
  }
  return false;
}

} // namespace

void OptimizerConfig::validate() const {
  if (!(pgtol > 0))
    throw DomainError("optimizer pgtol must be positive");
  if (max_iter < 1)
    throw DomainError("optimizer max_iter must be at least 1");
  if (memory < 1)
    throw DomainError("optimizer memory must be at least 1");
  if (!(lower < upper))
    throw DomainError("optimizer bounds are empty");
  if (ftol < 0)
    throw DomainError("optimizer ftol must be non-negative");
  if (max_linesearch < 1)
    throw DomainError("optimizer max_linesearch must be at least 1");
}

std::string status_name(OptimizerStatus s) {
  switch (s) {
  case OptimizerStatus::Converged:
    return "converged";
  case OptimizerStatus::FunctionTolerance:
    return "ftol";
  case OptimizerStatus::MaxIterations:
    return "max_iter";
  case OptimizerStatus::LineSearchFailed:
    return "linesearch_failed";
  }
  return "unknown";
}

OptimizeResult minimize(const Objective& f, std::vector<double> x0, const OptimizerConfig& cfg) {
  cfg.validate();
  const double lo = cfg.lower, hi = cfg.upper;
  for (double v : x0)
    if (!(v >= lo && v <= hi))
      throw DomainError("initial point lies outside the optimizer bounds");

  const auto n = static_cast<Eigen::Index>(x0.size());
  Evaluator ev(f, x0.size());
  Vec x = Eigen::Map<const Vec>(x0.data(), n);
  Vec g(n);
  double fx = ev(x, g);

  OptimizeResult res;
  Memory mem;
  bool retried = false;
  res.status = OptimizerStatus::MaxIterations;

  while (true) {
    if (n == 0 || projected_gradient_norm(x, g, lo, hi) <= cfg.pgtol) {
      res.status = OptimizerStatus::Converged;
      break;
    }
    if (res.iterations >= cfg.max_iter) {
      res.status = OptimizerStatus::MaxIterations;
      break;
    }
    const Vec d = search_target(x, g, mem, lo, hi) - x;
    const double dnorm = d.norm();
    bool ok = dnorm > 0 && g.dot(d) < 0;
    Trial next;
    if (ok) {
      double stpmax = kInf;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (d[i] > 0)
          stpmax = std::min(stpmax, (hi - x[i]) / d[i]);
        else if (d[i] < 0)
          stpmax = std::min(stpmax, (lo - x[i]) / d[i]);
      }
      const double init = (res.iterations == 0 && mem.empty()) ? std::min(1.0 / dnorm, 1.0) : 1.0;
      ok = line_search(ev, x, fx, g, d, init, stpmax, cfg.max_linesearch, lo, hi, next);
    }
    if (!ok) {
      if (!mem.empty() && !retried) {
        mem.clear();
        retried = true;
        continue;
      }
      res.status = OptimizerStatus::LineSearchFailed;
      break;
    }
    retried = false;
    const Vec s = next.x - x;
    const Vec y = next.g - g;
    const double f_old = fx;
    x = next.x;
    g = next.g;
    fx = next.f;
    ++res.iterations;
    if (s.dot(y) > std::numeric_limits<double>::epsilon() * y.squaredNorm())
      mem.push(s, y, cfg.memory);
    if (cfg.ftol > 0 &&
        (f_old - fx) <= cfg.ftol * std::max({std::abs(f_old), std::abs(fx), 1.0})) {
      if (projected_gradient_norm(x, g, lo, hi) <= cfg.pgtol)
        res.status = OptimizerStatus::Converged;
      else
        res.status = OptimizerStatus::FunctionTolerance;
      break;
    }
  }

  res.x.assign(ev.best_x.data(), ev.best_x.data() + ev.best_x.size());
  res.value = ev.best_f;
  res.gradient.assign(ev.best_g.data(), ev.best_g.data() + ev.best_g.size());
  res.evaluations = ev.count;
  res.projected_gradient = n == 0 ? 0.0 : projected_gradient_norm(ev.best_x, ev.best_g, lo, hi);
  return res;
}

} // namespace spinvqd
