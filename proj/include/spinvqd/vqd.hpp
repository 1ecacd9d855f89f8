// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spinvqd/ansatz.hpp"
#include "spinvqd/integrals.hpp"
#include "spinvqd/optimizer.hpp"
#include "spinvqd/simulator.hpp"

namespace spinvqd {

enum class Method { UCCGSD, kUpCCGSD, ADAPT };

struct MethodSpec {
  Method method = Method::ADAPT;
  int k = 2; ///< layers, kUpCCGSD only

  /// "UCCGSD", "2-UpCCGSD", "ADAPT".
  std::string name() const;
};

/// Accepts "UCCGSD", "ADAPT", "k-UpCCGSD" with a positive integer k.
MethodSpec parse_method(const std::string& s);

struct VqdConfig {
  double beta = 3.0;
  int n_states = 2;
  OptimizerConfig optimizer;
  std::uint64_t seed = 0;

  void validate() const;
};

struct VqdOutcome {
  int index = 0;              ///< position within the spin manifold sweep
  double energy = 0.0;        ///< <H>, Hartree
  double value = 0.0;         ///< deflated objective at the optimum
  std::vector<double> parameters;
  double s2 = 0.0;
  std::vector<double> overlaps; ///< |<phi_i|psi>|^2 with each lower state
  int operator_count = 0;
  int iterations = 0;
  bool converged = false;
  std::string status;
  AnsatzState ansatz;
  std::vector<GrowthStep> growth; ///< ADAPT only
  Statevector state;
};

/// F = <psi|H|psi> + sum_i beta_i |<phi_i|psi>|^2 and dF/dtheta.
std::pair<double, std::vector<double>>
deflated_objective(const Statevector& ref, std::span<const CompiledGenerator* const> gens,
                   std::span<const double> theta, const CompiledOperator& h,
                   std::span<const RankOnePenalty> deflation);

/// Finds cfg.n_states states of one spin manifold in order, each deflated
/// against all earlier ones. Fixed ansaetze start each state from its own
/// seeded draw; ADAPT grows a fresh ansatz per state.
std::vector<VqdOutcome> vqd_sweep(const MolecularIntegrals& m, ReferenceKind spin,
                                  const MethodSpec& method, const VqdConfig& cfg,
                                  const AdaptConfig& adapt = {});

/// Seed used for state `index` of a sweep.
std::uint64_t state_seed(std::uint64_t seed, ReferenceKind spin, int index);

/// Nonparallelity error: max - min. Throws DomainError on an empty list.
double npe(std::span<const double> errors);

} // namespace spinvqd
