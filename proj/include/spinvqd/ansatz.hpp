// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spinvqd/optimizer.hpp"
#include "spinvqd/pools.hpp"
#include "spinvqd/simulator.hpp"

namespace spinvqd {

/// A pool with every generator compiled for one register.
class BoundPool {
public:
  BoundPool(const OperatorPool& pool, int n_qubits);

  const OperatorPool& pool() const noexcept { return *pool_; }
  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return compiled_.size(); }
  const CompiledGenerator& operator[](std::size_t i) const { return compiled_.at(i); }

private:
  const OperatorPool* pool_;
  int n_qubits_;
  std::vector<CompiledGenerator> compiled_;
};

enum class Provenance { FixedK, Adaptive };

struct AnsatzSlot {
  std::size_t pool_index = 0;
  double theta = 0.0;
  /// Circuit layer the slot is emitted in (resource counting only).
  int block = 0;
};

/// |psi> = exp(theta_N G_N) ... exp(theta_1 G_1) |ref>, slot 0 applied first.
struct AnsatzState {
  ReferenceKind reference = ReferenceKind::ClosedShellSinglet;
  Provenance provenance = Provenance::FixedK;
  std::vector<AnsatzSlot> slots;

  std::size_t size() const noexcept { return slots.size(); }
  std::vector<double> parameters() const;
  /// Throws DomainError on a length mismatch.
  void set_parameters(std::span<const double> theta);
  std::vector<const CompiledGenerator*> generators(const BoundPool& pool) const;
};

Statevector prepare_state(const Statevector& ref, const AnsatzState& a, const BoundPool& pool);

/// Uniform draws in [0, 0.1) from a 64-bit Mersenne twister.
std::vector<double> initial_parameters(std::size_t count, std::uint64_t seed);

/// k consecutive copies of the whole pool with seeded initial parameters.
/// Throws DomainError for k < 1.
AnsatzState build_layered_ansatz(const OperatorPool& pool, int k, std::uint64_t seed,
                                 ReferenceKind ref = ReferenceKind::ClosedShellSinglet);
/// Layered ansatz over an sUpCCGSD pool; other flavors throw DomainError.
AnsatzState build_k_upccgsd(const OperatorPool& pool, int k, std::uint64_t seed,
                            ReferenceKind ref = ReferenceKind::ClosedShellSinglet);

/// How energy and overlap gradients combine into a selection score.
///  - EffectiveGradient: |2 Re <H psi|A psi> + sum_i 2 beta_i Re(<phi_i|A psi><psi|phi_i>)|,
///    the derivative of the deflated objective (gradient against H + sum beta |phi><phi|).
///  - AbsoluteSum: |energy term| + sum_i |overlap term i|, which can stay large at a
///    stationary point of the deflated objective where the two parts cancel.
enum class ScoreRule { EffectiveGradient, AbsoluteSum };

struct AdaptConfig {
  ScoreRule rule = ScoreRule::EffectiveGradient;
  double epsilon = 0.01;
  int max_ops = 60;
  double beta = 3.0;

  void validate() const;
};

struct AdaptScores {
  std::vector<double> scores;
  double norm = 0.0;
  std::size_t argmax = 0; ///< lowest index among the maxima
};

/// Per-generator scores for appending A_m at theta = 0; see ScoreRule.
AdaptScores adapt_gradients(const Statevector& psi, const BoundPool& pool,
                            const CompiledOperator& h, std::span<const RankOnePenalty> deflation,
                            ScoreRule rule = ScoreRule::EffectiveGradient);
AdaptScores adapt_gradients(const Statevector& ref, const AnsatzState& current,
                            const BoundPool& pool, const CompiledOperator& h,
                            std::span<const RankOnePenalty> deflation,
                            ScoreRule rule = ScoreRule::EffectiveGradient);

struct GrowthStep {
  int iteration = 0;
  /// Selected pool member; empty label on the closing (converged) row.
  std::string label;
  std::size_t pool_index = 0;
  double epsilon = 0.0;   ///< gradient norm before the selection
  double value = 0.0;     ///< optimized deflated objective
  double energy = 0.0;    ///< optimized <H>
  int iterations = 0;     ///< optimizer iterations for this step
};

struct AdaptResult {
  AnsatzState ansatz;
  bool converged = false;
  double final_epsilon = 0.0;
  double value = 0.0;
  double energy = 0.0;
  int optimizer_iterations = 0;
  std::vector<GrowthStep> trace;
  Statevector state;
};

/// ADAPT growth: select, append with theta = 0, re-optimize all parameters of
/// the deflated objective from the previous optimum, until the score norm is
/// below epsilon or max_ops operators are present.
AdaptResult adapt_grow(const Statevector& ref, const BoundPool& pool, const CompiledOperator& h,
                       std::span<const RankOnePenalty> deflation, const AdaptConfig& cfg,
                       const OptimizerConfig& opt);

} // namespace spinvqd
