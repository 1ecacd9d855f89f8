// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinvqd/ansatz.hpp"

#include <cmath>
#include <random>

#include "spinvqd/errors.hpp"
#include "spinvqd/vqd.hpp"

namespace spinvqd {

BoundPool::BoundPool(const OperatorPool& pool, int n_qubits) : pool_(&pool), n_qubits_(n_qubits) {
  compiled_.reserve(pool.size());
  for (const auto& g : pool.generators)
    compiled_.emplace_back(g, n_qubits);
}

std::vector<double> AnsatzState::parameters() const {
  std::vector<double> out;
  out.reserve(slots.size());
  for (const auto& s : slots)
    out.push_back(s.theta);
  return out;
}

void AnsatzState::set_parameters(std::span<const double> theta) {
  if (theta.size() != slots.size())
    throw DomainError("ansatz has " + std::to_string(slots.size()) + " slots, got " +
                      std::to_string(theta.size()) + " parameters");
  for (std::size_t i = 0; i < slots.size(); ++i)
    slots[i].theta = theta[i];
}

std::vector<const CompiledGenerator*> AnsatzState::generators(const BoundPool& pool) const {
  std::vector<const CompiledGenerator*> out;
  out.reserve(slots.size());
  for (const auto& s : slots)
    out.push_back(&pool[s.pool_index]);
  return out;
}

Statevector prepare_state(const Statevector& ref, const AnsatzState& a, const BoundPool& pool) {
  const auto gens = a.generators(pool);
  const auto theta = a.parameters();
  return prepare_state(ref, gens, theta);
}

std::vector<double> initial_parameters(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(count);
  // Explicit 53-bit mapping keeps draws identical across standard libraries.
  for (auto& v : out)
    v = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 0.1;
  return out;
}

AnsatzState build_layered_ansatz(const OperatorPool& pool, int k, std::uint64_t seed,
                                 ReferenceKind ref) {
  if (k < 1)
    throw DomainError("layer count must be at least 1");
  AnsatzState a;
  a.reference = ref;
  a.provenance = Provenance::FixedK;
  const auto theta = initial_parameters(pool.size() * static_cast<std::size_t>(k), seed);
  for (int layer = 0; layer < k; ++layer)
    for (std::size_t i = 0; i < pool.size(); ++i)
      a.slots.push_back({i, theta[a.slots.size()], layer});
  return a;
}

AnsatzState build_k_upccgsd(const OperatorPool& pool, int k, std::uint64_t seed,
                            ReferenceKind ref) {
  if (pool.flavor != PoolFlavor::sUpCCGSD)
    throw DomainError("k-UpCCGSD needs an sUpCCGSD pool");
  return build_layered_ansatz(pool, k, seed, ref);
}

void AdaptConfig::validate() const {
  if (!(epsilon > 0))
    throw DomainError("ADAPT epsilon must be positive");
  if (max_ops < 1)
    throw DomainError("ADAPT max_ops must be at least 1");
  if (!(beta > 0))
    throw DomainError("deflation beta must be positive");
}

AdaptScores adapt_gradients(const Statevector& psi, const BoundPool& pool,
                            const CompiledOperator& h, std::span<const RankOnePenalty> deflation,
                            ScoreRule rule) {
  Statevector hpsi = psi;
  h.apply(psi.amps(), hpsi.amps());
  std::vector<cplx> phi_psi;
  for (const auto& d : deflation)
    phi_psi.push_back(inner(*d.state, psi));

  AdaptScores out;
  out.scores.resize(pool.size());
  double sq = 0.0;
  for (std::size_t m = 0; m < pool.size(); ++m) {
    const double energy = 2.0 * pool[m].matrix_element(hpsi.amps(), psi.amps()).real();
    double signed_sum = energy;
    double abs_sum = std::abs(energy);
    for (std::size_t i = 0; i < deflation.size(); ++i) {
      // <psi|A|phi><phi|psi> = -conj(<phi|A|psi>) <phi|psi> for anti-Hermitian A
      const cplx a = pool[m].matrix_element(psi.amps(), deflation[i].state->amps());
      const double ov = 2.0 * deflation[i].beta * (a * phi_psi[i]).real();
      signed_sum -= ov;
      abs_sum += std::abs(ov);
    }
    const double s = rule == ScoreRule::EffectiveGradient ? std::abs(signed_sum) : abs_sum;
    out.scores[m] = s;
    sq += s * s;
    if (s > out.scores[out.argmax])
      out.argmax = m;
  }
  out.norm = std::sqrt(sq);
  return out;
}

AdaptScores adapt_gradients(const Statevector& ref, const AnsatzState& current,
                            const BoundPool& pool, const CompiledOperator& h,
                            std::span<const RankOnePenalty> deflation, ScoreRule rule) {
  return adapt_gradients(prepare_state(ref, current, pool), pool, h, deflation, rule);
}

AdaptResult adapt_grow(const Statevector& ref, const BoundPool& pool, const CompiledOperator& h,
                       std::span<const RankOnePenalty> deflation, const AdaptConfig& cfg,
                       const OptimizerConfig& opt) {
  cfg.validate();
  if (pool.size() == 0)
    throw DomainError("ADAPT needs a non-empty pool");
  AdaptResult res;
  res.ansatz.provenance = Provenance::Adaptive;
  res.state = ref;
  {
    const auto sweep = adjoint_sweep(ref, {}, {}, h, deflation, false);
    res.value = sweep.value;
    res.energy = sweep.energy;
  }

  for (int iter = 1;; ++iter) {
    const AdaptScores sc = adapt_gradients(res.state, pool, h, deflation, cfg.rule);
    res.final_epsilon = sc.norm;
    if (sc.norm < cfg.epsilon) {
      res.converged = true;
      res.trace.push_back({iter, "", 0, sc.norm, res.value, res.energy, 0});
      break;
    }
    if (static_cast<int>(res.ansatz.size()) >= cfg.max_ops)
      break;

    res.ansatz.slots.push_back({sc.argmax, 0.0, static_cast<int>(res.ansatz.size())});
    const auto gens = res.ansatz.generators(pool);
    OptimizeResult o;
    try {
      o = minimize(
          [&](std::span<const double> x, std::span<double> g) {
            auto [v, grad] = deflated_objective(ref, gens, x, h, deflation);
            std::copy(grad.begin(), grad.end(), g.begin());
            return v;
          },
          res.ansatz.parameters(), opt);
    } catch (const std::exception& e) {
      throw OptimizationError("ADAPT iteration " + std::to_string(iter) + " (" +
                              pool.pool().generators[sc.argmax].label() + "): " + e.what());
    }
    res.ansatz.set_parameters(o.x);
    res.optimizer_iterations += o.iterations;
    const auto sweep = adjoint_sweep(ref, gens, o.x, h, deflation, false);
    res.state = sweep.state;
    res.value = sweep.value;
    res.energy = sweep.energy;
    res.trace.push_back({iter, pool.pool().generators[sc.argmax].label(), sc.argmax, sc.norm,
                         res.value, res.energy, o.iterations});
  }
  return res;
}

} // namespace spinvqd
