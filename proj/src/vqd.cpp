// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinvqd/vqd.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "spinvqd/errors.hpp"
#include "spinvqd/fermion.hpp"
#include "spinvqd/pools.hpp"

namespace spinvqd {

std::string MethodSpec::name() const {
  switch (method) {
  case Method::UCCGSD:
    return "UCCGSD";
  case Method::kUpCCGSD:
    return std::to_string(k) + "-UpCCGSD";
  case Method::ADAPT:
    return "ADAPT";
  }
  return "unknown";
}

MethodSpec parse_method(const std::string& s) {
  std::string t;
  for (char c : s)
    t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "UCCGSD")
    return {Method::UCCGSD, 1};
  if (t == "ADAPT")
    return {Method::ADAPT, 1};
  const auto dash = t.find("-UPCCGSD");
  if (dash != std::string::npos && dash > 0 && dash + 8 == t.size()) {
    const std::string digits = t.substr(0, dash);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); })) {
      const int k = std::stoi(digits);
      if (k >= 1)
        return {Method::kUpCCGSD, k};
    }
  }
  throw DomainError("unknown method '" + s + "'");
}

void VqdConfig::validate() const {
  if (!(beta > 0))
    throw DomainError("deflation beta must be positive");
  if (n_states < 1)
    throw DomainError("n_states must be at least 1");
  optimizer.validate();
}

std::pair<double, std::vector<double>>
deflated_objective(const Statevector& ref, std::span<const CompiledGenerator* const> gens,
                   std::span<const double> theta, const CompiledOperator& h,
                   std::span<const RankOnePenalty> deflation) {
  auto r = adjoint_sweep(ref, gens, theta, h, deflation, true);
  return {r.value, std::move(r.gradient)};
}

std::uint64_t state_seed(std::uint64_t seed, ReferenceKind spin, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(spin), static_cast<std::uint32_t>(index)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<VqdOutcome> vqd_sweep(const MolecularIntegrals& m, ReferenceKind spin,
                                  const MethodSpec& method, const VqdConfig& cfg,
                                  const AdaptConfig& adapt) {
  cfg.validate();
  const int n_qubits = 2 * m.n_orb();
  const Statevector ref = prepare_reference(spin, n_qubits, m.n_elec());
  const CompiledOperator h(build_hamiltonian(m), n_qubits);
  const CompiledOperator s2(build_s2(m.n_orb()), n_qubits);
  const OperatorPool pool = build_pool(
      method.method == Method::UCCGSD ? PoolFlavor::sUCCGSD : PoolFlavor::sUpCCGSD, m.n_orb());
  const BoundPool bound(pool, n_qubits);

  AdaptConfig acfg = adapt;
  acfg.beta = cfg.beta;

  std::vector<VqdOutcome> out;
  std::vector<RankOnePenalty> deflation;
  for (int j = 0; j < cfg.n_states; ++j) {
    VqdOutcome o;
    o.index = j;
    if (method.method == Method::ADAPT) {
      AdaptResult r = adapt_grow(ref, bound, h, deflation, acfg, cfg.optimizer);
      o.ansatz = std::move(r.ansatz);
      o.energy = r.energy;
      o.value = r.value;
      o.iterations = r.optimizer_iterations;
      o.converged = r.converged;
      o.status = r.converged ? "converged" : "max_ops";
      o.growth = std::move(r.trace);
      o.state = std::move(r.state);
    } else {
      const int layers = method.method == Method::UCCGSD ? 1 : method.k;
      o.ansatz = build_layered_ansatz(pool, layers, state_seed(cfg.seed, spin, j), spin);
      const auto gens = o.ansatz.generators(bound);
      OptimizeResult r = minimize(
          [&](std::span<const double> x, std::span<double> g) {
            auto [v, grad] = deflated_objective(ref, gens, x, h, deflation);
            std::copy(grad.begin(), grad.end(), g.begin());
            return v;
          },
          o.ansatz.parameters(), cfg.optimizer);
      o.ansatz.set_parameters(r.x);
      const auto sweep = adjoint_sweep(ref, gens, r.x, h, deflation, false);
      o.energy = sweep.energy;
      o.value = sweep.value;
      o.iterations = r.iterations;
      o.converged = r.converged();
      o.status = status_name(r.status);
      o.state = sweep.state;
    }
    o.ansatz.reference = spin;
    o.parameters = o.ansatz.parameters();
    o.operator_count = static_cast<int>(o.ansatz.size());
    o.s2 = expectation(o.state, s2);
    for (const auto& prev : out)
      o.overlaps.push_back(overlap(prev.state, o.state));
    out.push_back(std::move(o));
    // Rebuilt after every push since out may reallocate.
    deflation.clear();
    for (const auto& prev : out)
      deflation.push_back({&prev.state, cfg.beta});
  }
  return out;
}

double npe(std::span<const double> errors) {
  if (errors.empty())
    throw DomainError("NPE of an empty error list");
  const auto [lo, hi] = std::minmax_element(errors.begin(), errors.end());
  return *hi - *lo;
}

} // namespace spinvqd
