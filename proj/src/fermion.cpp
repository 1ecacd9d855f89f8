// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinvqd/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "spinvqd/errors.hpp"

namespace spinvqd {

void FermionOperator::add_term(const LadderString& f, cplx c) {
  auto [it, inserted] = terms_.try_emplace(f, c);
  if (!inserted)
    it->second += c;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& o) {
  for (const auto& [f, c] : o.terms_)
    add_term(f, c);
  return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& o) {
  for (const auto& [f, c] : o.terms_)
    add_term(f, -c);
  return *this;
}

FermionOperator& FermionOperator::operator*=(cplx s) {
  for (auto& [f, c] : terms_)
    c *= s;
  return *this;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  FermionOperator out;
  for (const auto& [fa, ca] : a.terms_)
    for (const auto& [fb, cb] : b.terms_) {
      LadderString f = fa;
      f.insert(f.end(), fb.begin(), fb.end());
      out.add_term(f, ca * cb);
    }
  return out;
}

LadderString adjoint(const LadderString& f) {
  LadderString out(f.rbegin(), f.rend());
  for (auto& op : out)
    op.dagger = !op.dagger;
  return out;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out;
  for (const auto& [f, c] : terms_)
    out.add_term(spinvqd::adjoint(f), std::conj(c));
  return out;
}

namespace {

void normal_order_term(LadderString term, cplx coefficient, FermionOperator& out) {
  for (std::size_t i = 1; i < term.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      const LadderOp right = term[j], left = term[j - 1];
      if (right.dagger && !left.dagger) {
        term[j - 1] = right;
        term[j] = left;
        coefficient = -coefficient;
        // a_k a+_k = 1 - a+_k a_k
        if (right.mode == left.mode) {
          LadderString contracted(term.begin(), term.begin() + static_cast<std::ptrdiff_t>(j - 1));
          contracted.insert(contracted.end(), term.begin() + static_cast<std::ptrdiff_t>(j + 1),
                            term.end());
          normal_order_term(std::move(contracted), -coefficient, out);
        }
      } else if (right.dagger == left.dagger) {
        if (right.mode == left.mode)
          return;
        if (right.mode > left.mode) {
          term[j - 1] = right;
          term[j] = left;
          coefficient = -coefficient;
        }
      }
    }
  }
  out.add_term(term, coefficient);
}

} // namespace

FermionOperator normal_ordered(const FermionOperator& op, double tol) {
  FermionOperator raw;
  for (const auto& [f, c] : op.terms())
    normal_order_term(f, c, raw);
  FermionOperator out;
  for (const auto& [f, c] : raw.terms())
    if (std::abs(c) >= tol)
      out.add_term(f, c);
  return out;
}

bool is_anti_hermitian(const FermionOperator& op, double tol) {
  return normal_ordered(op + op.adjoint(), tol).empty();
}

// ---- Jordan-Wigner ----

namespace {

QubitOperator jw_ladder(const LadderOp& op) {
  const std::uint64_t below = (std::uint64_t{1} << op.mode) - 1;
  const std::uint64_t bit = std::uint64_t{1} << op.mode;
  QubitOperator q;
  q.add_term(PauliString::from_masks(bit, below), 0.5);
  q.add_term(PauliString::from_masks(bit, below | bit), op.dagger ? cplx{0, -0.5} : cplx{0, 0.5});
  return q;
}

} // namespace

QubitOperator jw_transform(const FermionTerm& t) {
  QubitOperator acc = QubitOperator::identity(t.coefficient);
  for (const auto& op : t.factors) {
    if (op.mode < 0 || op.mode >= PauliString::kMaxQubits)
      throw RangeError("jw_transform: mode index out of range");
    acc *= jw_ladder(op);
  }
  return acc;
}

QubitOperator jw_transform(const FermionOperator& op) {
  QubitOperator out;
  for (const auto& [f, c] : op.terms())
    out += jw_transform(FermionTerm{f, c});
  out.compress();
  return out;
}

// ---- Hamiltonian and spin operators ----

FermionOperator build_fermion_hamiltonian(const MolecularIntegrals& m) {
  m.validate();
  const int n = m.n_orb();
  FermionOperator h;
  if (m.e_nuc() != 0.0)
    h.add_term({}, m.e_nuc());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const double v = m.h1(p, q);
      if (v == 0.0)
        continue;
      for (int s = 0; s < 2; ++s)
        h.add_term({{spin_orbital(p, s), true}, {spin_orbital(q, s), false}}, v);
    }
  // 1/2 sum (ps|qr) a+_{p,s} a+_{q,t} a_{r,t} a_{s,s}
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double v = m.h2(p, s, q, r);
          if (v == 0.0)
            continue;
          for (int sg = 0; sg < 2; ++sg)
            for (int tg = 0; tg < 2; ++tg) {
              const int a = spin_orbital(p, sg), b = spin_orbital(q, tg);
              const int c = spin_orbital(r, tg), d = spin_orbital(s, sg);
              if (a == b || c == d)
                continue;
              h.add_term({{a, true}, {b, true}, {c, false}, {d, false}}, 0.5 * v);
            }
        }
  return h;
}

QubitOperator build_hamiltonian(const MolecularIntegrals& m) {
  return jw_transform(normal_ordered(build_fermion_hamiltonian(m)));
}

QubitOperator build_number(int n_modes) {
  FermionOperator n;
  for (int k = 0; k < n_modes; ++k)
    n.add_term({{k, true}, {k, false}}, 1.0);
  return jw_transform(n);
}

namespace {

FermionOperator fermion_sz(int n_orb) {
  FermionOperator sz;
  for (int p = 0; p < n_orb; ++p) {
    sz.add_term({{spin_orbital(p, kAlpha), true}, {spin_orbital(p, kAlpha), false}}, 0.5);
    sz.add_term({{spin_orbital(p, kBeta), true}, {spin_orbital(p, kBeta), false}}, -0.5);
  }
  return sz;
}

} // namespace

QubitOperator build_sz(int n_orb) { return jw_transform(fermion_sz(n_orb)); }

QubitOperator build_s2(int n_orb) {
  FermionOperator splus;
  for (int p = 0; p < n_orb; ++p)
    splus.add_term({{spin_orbital(p, kAlpha), true}, {spin_orbital(p, kBeta), false}}, 1.0);
  const FermionOperator sminus = splus.adjoint();
  const FermionOperator sz = fermion_sz(n_orb);
  FermionOperator one;
  one.add_term({}, 1.0);
  const FermionOperator s2 = sminus * splus + sz * (sz + one);
  return jw_transform(normal_ordered(s2));
}

// ---- excitation generators ----

std::string kind_name(ExcitationKind k) {
  switch (k) {
  case ExcitationKind::GeneralizedSingle: return "single";
  case ExcitationKind::GeneralizedDouble: return "double";
  case ExcitationKind::PairedDouble: return "pair";
  }
  return "?";
}

std::string ExcitationGenerator::label() const {
  std::string s = kind_name(kind_) + "(";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0)
      s += (kind_ == ExcitationKind::GeneralizedDouble && i == 2) ? ";" : ",";
    s += std::to_string(indices_[i]);
  }
  return s + ")";
}

namespace {

// Sorts creators and annihilators (each descending); returns the permutation
// sign, or 0 when a mode repeats within either group.
int canonicalize_tau(LadderString& tau) {
  int sign = 1;
  const auto n_create = static_cast<std::size_t>(
      std::partition_point(tau.begin(), tau.end(), [](const LadderOp& o) { return o.dagger; }) -
      tau.begin());
  auto sort_group = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i)
      for (std::size_t j = first; j + 1 < last - (i - first); ++j) {
        if (tau[j].mode < tau[j + 1].mode) {
          std::swap(tau[j], tau[j + 1]);
          sign = -sign;
        }
      }
    for (std::size_t j = first; j + 1 < last; ++j)
      if (tau[j].mode == tau[j + 1].mode)
        sign = 0;
  };
  sort_group(0, n_create);
  sort_group(n_create, tau.size());
  return sign;
}

std::uint64_t support_mask(const LadderString& tau) {
  std::uint64_t m = 0;
  for (const auto& op : tau)
    m |= std::uint64_t{1} << op.mode;
  return m;
}

void check_spatial(const std::vector<int>& idx, int n_orb) {
  for (int i : idx)
    if (i < 0 || i >= n_orb)
      throw DomainError("make_generator: spatial index " + std::to_string(i) +
                        " outside [0, " + std::to_string(n_orb) + ")");
}

} // namespace

ExcitationGenerator make_generator(ExcitationKind kind, const std::vector<int>& indices,
                                   int n_orb) {
  if (n_orb < 1 || 2 * n_orb > PauliString::kMaxQubits)
    throw DomainError("make_generator: unsupported orbital count");
  ExcitationGenerator g;
  g.kind_ = kind;
  g.indices_ = indices;
  g.n_orb_ = n_orb;

  std::vector<RotationTerm> raw;
  switch (kind) {
  case ExcitationKind::GeneralizedSingle: {
    if (indices.size() != 2)
      throw DomainError("make_generator: single excitation needs (p, r)");
    check_spatial(indices, n_orb);
    const int p = indices[0], r = indices[1];
    if (!(p < r))
      throw DomainError("make_generator: single excitation requires p < r");
    for (int s = 0; s < 2; ++s)
      raw.push_back({{{spin_orbital(p, s), true}, {spin_orbital(r, s), false}}, 1.0});
    break;
  }
  case ExcitationKind::PairedDouble: {
    if (indices.size() != 2)
      throw DomainError("make_generator: paired double needs (p, r)");
    check_spatial(indices, n_orb);
    const int p = indices[0], r = indices[1];
    if (!(p < r))
      throw DomainError("make_generator: paired double requires p < r");
    raw.push_back({{{spin_orbital(r, kAlpha), true},
                    {spin_orbital(r, kBeta), true},
                    {spin_orbital(p, kAlpha), false},
                    {spin_orbital(p, kBeta), false}},
                   1.0});
    break;
  }
  case ExcitationKind::GeneralizedDouble: {
    if (indices.size() != 4)
      throw DomainError("make_generator: generalized double needs (p, q, r, s)");
    check_spatial(indices, n_orb);
    const int p = indices[0], q = indices[1], r = indices[2], s = indices[3];
    if (!(p <= q && r <= s && std::pair{p, q} < std::pair{r, s}))
      throw DomainError("make_generator: generalized double requires p<=q, r<=s, (p,q)<(r,s)");
    for (int sg = 0; sg < 2; ++sg)
      for (int tg = 0; tg < 2; ++tg)
        raw.push_back({{{spin_orbital(p, sg), true},
                        {spin_orbital(q, tg), true},
                        {spin_orbital(r, tg), false},
                        {spin_orbital(s, sg), false}},
                       1.0});
    break;
  }
  }

  // Canonical orientation: each rotation is stored as c (tau - tau^+) with
  // tau ordered before its adjoint; identical taus are merged.
  std::map<LadderString, double> merged;
  for (auto& term : raw) {
    LadderString tau = term.tau;
    const int sign = canonicalize_tau(tau);
    if (sign == 0)
      continue;
    double c = sign * term.coefficient;
    LadderString dag = adjoint(tau);
    canonicalize_tau(dag);  // equal-size groups: reversal sign is always +1
    if (dag == tau)
      continue;  // pure number-operator product: tau - tau^+ vanishes
    if (dag < tau) {
      tau = dag;
      c = -c;
    }
    merged[tau] += c;
  }
  for (const auto& [tau, c] : merged)
    if (std::abs(c) > 1e-14)
      g.rotations_.push_back({tau, c});
  if (g.rotations_.empty())
    throw DomainError("make_generator: " + g.label() + " vanishes identically");

  std::uint64_t used = 0;
  for (const auto& rt : g.rotations_) {
    const auto m = support_mask(rt.tau);
    if (used & m)
      g.rotations_commute_ = false;
    used |= m;
  }

  FermionOperator f;
  for (const auto& rt : g.rotations_) {
    f.add_term(rt.tau, rt.coefficient);
    f.add_term(adjoint(rt.tau), -rt.coefficient);
  }
  g.fermion_ = normal_ordered(f);
  g.qubit_ = jw_transform(g.fermion_);
  return g;
}

} // namespace spinvqd
