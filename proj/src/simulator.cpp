// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinvqd/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "spinvqd/errors.hpp"

namespace spinvqd {

namespace {

void check_register(int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxStatevectorQubits)
    throw ResourceError("statevector register of " + std::to_string(n_qubits) +
                        " qubits is outside [0, " + std::to_string(kMaxStatevectorQubits) + "]");
}

void check_same_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw DomainError("statevector dimensions differ: " + std::to_string(a) + " vs " +
                      std::to_string(b));
}

// Applies a ladder product (right to left) to a basis determinant.
// Returns false if the result vanishes.
bool apply_ladder(const LadderString& f, std::uint64_t& state, double& sign) {
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    const std::uint64_t bit = std::uint64_t{1} << it->mode;
    const bool occupied = (state & bit) != 0;
    if (occupied == it->dagger)
      return false;
    if (std::popcount(state & (bit - 1)) & 1)
      sign = -sign;
    state ^= bit;
  }
  return true;
}

// Taylor series for exp(t A) v with scaling; |A| <= bound.
template <class Apply>
void taylor_exp(std::span<cplx> v, double t, double bound, Apply&& apply) {
  if (t == 0.0 || bound == 0.0)
    return;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(t) * bound / 0.5)));
  const double dt = t / steps;
  std::vector<cplx> term(v.size()), next(v.size());
  for (int s = 0; s < steps; ++s) {
    std::copy(v.begin(), v.end(), term.begin());
    double vnorm = 0.0;
    for (const auto& a : v)
      vnorm += std::norm(a);
    vnorm = std::sqrt(vnorm);
    for (int k = 1; k < 64; ++k) {
      apply(std::span<const cplx>(term), std::span<cplx>(next));
      const double f = dt / k;
      double tn = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        term[i] = next[i] * f;
        v[i] += term[i];
        tn += std::norm(term[i]);
      }
      if (std::sqrt(tn) <= 1e-17 * std::max(vnorm, 1.0))
        break;
    }
  }
}

} // namespace

// ---- Statevector ----

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  check_register(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, cplx{});
  amps_[0] = 1.0;
}

Statevector Statevector::basis(int n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dim())
    throw RangeError("basis index " + std::to_string(index) + " outside register");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double Statevector::norm() const {
  double n = 0.0;
  for (const auto& a : amps_)
    n += std::norm(a);
  return std::sqrt(n);
}

void Statevector::normalize() {
  const double n = norm();
  if (n == 0.0)
    throw DomainError("cannot normalize the zero vector");
  for (auto& a : amps_)
    a /= n;
}

cplx inner(const Statevector& a, const Statevector& b) {
  check_same_dim(a.dim(), b.dim());
  cplx acc{};
  for (std::size_t i = 0; i < a.dim(); ++i)
    acc += std::conj(a[i]) * b[i];
  return acc;
}

double overlap(const Statevector& a, const Statevector& b) { return std::norm(inner(a, b)); }

// ---- references ----

const char* reference_name(ReferenceKind k) {
  return k == ReferenceKind::ClosedShellSinglet ? "singlet" : "triplet";
}

std::uint64_t reference_occupation(ReferenceKind kind, int n_qubits, int n_elec) {
  if (n_elec < 0 || n_elec > n_qubits)
    throw DomainError("cannot place " + std::to_string(n_elec) + " electrons in " +
                      std::to_string(n_qubits) + " spin orbitals");
  if (n_elec % 2 != 0)
    throw UnsupportedError("odd electron counts are not supported");
  std::uint64_t occ = (std::uint64_t{1} << n_elec) - 1;
  if (kind == ReferenceKind::OpenShellTriplet) {
    if (n_elec == 0 || n_elec >= n_qubits)
      throw DomainError("triplet reference needs an occupied and a virtual orbital");
    occ ^= std::uint64_t{1} << (n_elec - 1);
    occ |= std::uint64_t{1} << n_elec;
  }
  return occ;
}

Statevector prepare_reference(ReferenceKind kind, int n_qubits, int n_elec) {
  check_register(n_qubits);
  return Statevector::basis(n_qubits, reference_occupation(kind, n_qubits, n_elec));
}

// ---- CompiledOperator ----

CompiledOperator::CompiledOperator(const QubitOperator& op, int n_qubits) : n_qubits_(n_qubits) {
  check_register(n_qubits);
  if (op.min_qubits() > n_qubits)
    throw DomainError("operator acts on " + std::to_string(op.min_qubits()) +
                      " qubits, register has " + std::to_string(n_qubits));
  hermitian_ = op.is_hermitian();

  struct Group {
    std::uint64_t x;
    std::vector<std::pair<PauliString, cplx>> terms;
  };
  std::vector<Group> groups;
  std::unordered_map<std::uint64_t, std::size_t> where;
  for (const auto& [p, c] : op.terms()) {
    auto [it, fresh] = where.try_emplace(p.x_mask(), groups.size());
    if (fresh)
      groups.push_back({p.x_mask(), {}});
    groups[it->second].terms.emplace_back(p, c);
  }

  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  col_start_.reserve(dim + 1);
  col_start_.push_back(0);
  for (std::uint64_t i = 0; i < dim; ++i) {
    for (const auto& g : groups) {
      cplx v{};
      for (const auto& [p, c] : g.terms)
        v += c * apply_to_basis(p, i).second;
      if (std::abs(v) > 1e-14) {
        rows_.push_back(static_cast<std::uint32_t>(i ^ g.x));
        values_.push_back(v);
      }
    }
    col_start_.push_back(static_cast<std::uint32_t>(rows_.size()));
  }
}

void CompiledOperator::apply(std::span<const cplx> in, std::span<cplx> out) const {
  check_same_dim(in.size(), std::size_t{1} << n_qubits_);
  check_same_dim(out.size(), in.size());
  std::fill(out.begin(), out.end(), cplx{});
  for (std::size_t i = 0; i < in.size(); ++i) {
    const cplx a = in[i];
    if (a == cplx{})
      continue;
    for (std::uint32_t k = col_start_[i]; k < col_start_[i + 1]; ++k)
      out[rows_[k]] += values_[k] * a;
  }
}

cplx CompiledOperator::expectation(std::span<const cplx> s) const {
  check_same_dim(s.size(), std::size_t{1} << n_qubits_);
  cplx acc{};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const cplx a = s[i];
    if (a == cplx{})
      continue;
    cplx col{};
    for (std::uint32_t k = col_start_[i]; k < col_start_[i + 1]; ++k)
      col += std::conj(s[rows_[k]]) * values_[k];
    acc += col * a;
  }
  return acc;
}

// ---- CompiledGenerator ----

CompiledGenerator::CompiledGenerator(const ExcitationGenerator& g, int n_qubits)
    : n_qubits_(n_qubits), commuting_(g.rotations_commute()) {
  check_register(n_qubits);
  if (2 * g.n_orb() > n_qubits)
    throw DomainError("generator " + g.label() + " needs " + std::to_string(2 * g.n_orb()) +
                      " qubits");
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (const auto& rt : g.rotations()) {
    Rotation r{rt.coefficient, {}};
    for (std::uint64_t j = 0; j < dim; ++j) {
      std::uint64_t state = j;
      double sign = 1.0;
      if (apply_ladder(rt.tau, state, sign))
        r.links.push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(state), sign});
    }
    norm_bound_ += std::abs(rt.coefficient);
    rotations_.push_back(std::move(r));
  }
}

void CompiledGenerator::apply(std::span<const cplx> in, std::span<cplx> out) const {
  check_same_dim(in.size(), std::size_t{1} << n_qubits_);
  check_same_dim(out.size(), in.size());
  std::fill(out.begin(), out.end(), cplx{});
  for (const auto& r : rotations_)
    for (const auto& l : r.links) {
      const double cs = r.coefficient * l.sign;
      out[l.to] += cs * in[l.from];
      out[l.from] -= cs * in[l.to];
    }
}

cplx CompiledGenerator::matrix_element(std::span<const cplx> bra,
                                       std::span<const cplx> ket) const {
  check_same_dim(bra.size(), ket.size());
  check_same_dim(ket.size(), std::size_t{1} << n_qubits_);
  cplx acc{};
  for (const auto& r : rotations_) {
    cplx part{};
    for (const auto& l : r.links)
      part += l.sign * (std::conj(bra[l.to]) * ket[l.from] - std::conj(bra[l.from]) * ket[l.to]);
    acc += r.coefficient * part;
  }
  return acc;
}

void CompiledGenerator::apply_exp(std::span<cplx> amps, double theta) const {
  check_same_dim(amps.size(), std::size_t{1} << n_qubits_);
  if (theta == 0.0)
    return;
  if (!commuting_) {
    taylor_exp(amps, theta, norm_bound_,
               [this](std::span<const cplx> in, std::span<cplx> out) { apply(in, out); });
    return;
  }
  for (const auto& r : rotations_) {
    const double phi = theta * r.coefficient;
    const double c = std::cos(phi), s = std::sin(phi);
    for (const auto& l : r.links) {
      const cplx aj = amps[l.from], ai = amps[l.to];
      amps[l.from] = c * aj - l.sign * s * ai;
      amps[l.to] = c * ai + l.sign * s * aj;
    }
  }
}

// ---- free functions ----

void apply_exp_generator(Statevector& s, const ExcitationGenerator& g, double theta) {
  CompiledGenerator(g, s.n_qubits()).apply_exp(s.amps(), theta);
}

void apply_exp(Statevector& s, const QubitOperator& op, double theta) {
  if (!op.is_anti_hermitian())
    throw ContractViolation("exponent operator is not anti-Hermitian");
  double bound = 0.0;
  for (const auto& [p, c] : op.terms())
    bound += std::abs(c);
  const CompiledOperator compiled(op, s.n_qubits());
  taylor_exp(s.amps(), theta, bound,
             [&](std::span<const cplx> in, std::span<cplx> out) { compiled.apply(in, out); });
}

double expectation(const Statevector& s, const QubitOperator& op) {
  if (!op.is_hermitian())
    throw ContractViolation("observable is not Hermitian");
  return expectation(s, CompiledOperator(op, s.n_qubits()));
}

double expectation(const Statevector& s, const CompiledOperator& op) {
  if (!op.hermitian())
    throw ContractViolation("observable is not Hermitian");
  if (op.n_qubits() != s.n_qubits())
    throw DomainError("observable and state registers differ");
  return op.expectation(s.amps()).real();
}

Statevector prepare_state(const Statevector& ref, std::span<const CompiledGenerator* const> gens,
                          std::span<const double> thetas) {
  if (gens.size() != thetas.size())
    throw DomainError("expected " + std::to_string(gens.size()) + " parameters, got " +
                      std::to_string(thetas.size()));
  Statevector psi = ref;
  for (std::size_t k = 0; k < gens.size(); ++k)
    gens[k]->apply_exp(psi.amps(), thetas[k]);
  return psi;
}

SweepResult adjoint_sweep(const Statevector& ref, std::span<const CompiledGenerator* const> gens,
                          std::span<const double> thetas, const CompiledOperator& h,
                          std::span<const RankOnePenalty> penalties, bool want_gradient) {
  if (h.n_qubits() != ref.n_qubits())
    throw DomainError("Hamiltonian and reference registers differ");
  SweepResult out;
  out.state = prepare_state(ref, gens, thetas);
  const Statevector& psi = out.state;

  Statevector lambda = psi;
  h.apply(psi.amps(), lambda.amps());
  out.energy = inner(psi, lambda).real();
  out.value = out.energy;
  for (const auto& pen : penalties) {
    const cplx ov = inner(*pen.state, psi);
    out.value += pen.beta * std::norm(ov);
    const cplx w = pen.beta * ov;
    for (std::size_t i = 0; i < psi.dim(); ++i)
      lambda[i] += w * (*pen.state)[i];
  }
  if (!want_gradient)
    return out;

  out.gradient.assign(gens.size(), 0.0);
  Statevector phi = psi;
  for (std::size_t k = gens.size(); k-- > 0;) {
    out.gradient[k] = 2.0 * gens[k]->matrix_element(lambda.amps(), phi.amps()).real();
    if (k > 0) {
      gens[k]->apply_exp(phi.amps(), -thetas[k]);
      gens[k]->apply_exp(lambda.amps(), -thetas[k]);
    }
  }
  return out;
}

std::pair<double, std::vector<double>>
energy_and_gradient(const Statevector& ref, std::span<const ExcitationGenerator> gens,
                    std::span<const double> thetas, const QubitOperator& h) {
  if (!h.is_hermitian())
    throw ContractViolation("Hamiltonian is not Hermitian");
  std::vector<CompiledGenerator> compiled;
  compiled.reserve(gens.size());
  for (const auto& g : gens)
    compiled.emplace_back(g, ref.n_qubits());
  std::vector<const CompiledGenerator*> ptrs;
  for (const auto& c : compiled)
    ptrs.push_back(&c);
  const CompiledOperator hc(h, ref.n_qubits());
  auto r = adjoint_sweep(ref, ptrs, thetas, hc, {}, true);
  return {r.energy, std::move(r.gradient)};
}

} // namespace spinvqd
