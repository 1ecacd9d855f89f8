// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinvqd/integrals.hpp"
#include "spinvqd/pauli.hpp"

namespace spinvqd {

/// Largest matrix the dense eigensolver accepts.
inline constexpr int kMaxOracleDimension = 4096;

struct SectorFilter {
  std::optional<int> n_elec;  ///< particle-number sector (all states if empty)
  std::optional<double> s2;   ///< keep only levels with this <S^2> (within 1e-6)
};

/// One energy level. Spin multiplets (2S+1 M_S components) count once, so a
/// spatially degenerate triplet pair has degeneracy 2.
struct SpectrumEntry {
  double energy = 0.0;
  double s2 = 0.0;
  int n_particles = 0;
  int degeneracy = 1;
};

/// Lowest levels of the Jordan-Wigner Hamiltonian of m. The particle sector
/// defaults to m.n_elec(). n_lowest <= 0 returns every level.
/// Throws ResourceError for more than 14 spin orbitals.
std::vector<SpectrumEntry> fci_spectrum(const MolecularIntegrals& m, int n_lowest,
                                        SectorFilter filter = {});

/// Same for an arbitrary Hermitian qubit operator. s2_op labels the levels;
/// without it every level reports s2 = 0 and degeneracy = eigenvalue count.
std::vector<SpectrumEntry> operator_spectrum(const QubitOperator& h, int n_qubits, int n_lowest,
                                             const SectorFilter& filter,
                                             const QubitOperator* s2_op = nullptr);

/// Spin quantum number S with S(S+1) = s2.
double spin_from_s2(double s2);

/// "S0, S1, ..." for singlets, "T1, T2, ..." for triplets, "Q1..." for
/// quintets, "D1..."/"X1..." otherwise; one label per entry.
std::vector<std::string> level_labels(const std::vector<SpectrumEntry>& levels);

} // namespace spinvqd
