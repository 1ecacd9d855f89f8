// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinvqd/fermion.hpp"
#include "spinvqd/pauli.hpp"

namespace spinvqd {

/// Largest register the statevector engine accepts.
inline constexpr int kMaxStatevectorQubits = 20;

/// Dense 2^n amplitude vector; qubit q is bit q of the basis index.
class Statevector {
public:
  Statevector() = default;
  /// |0...0>
  explicit Statevector(int n_qubits);
  static Statevector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }

  std::span<cplx> amps() noexcept { return amps_; }
  std::span<const cplx> amps() const noexcept { return amps_; }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();

  friend bool operator==(const Statevector&, const Statevector&) = default;

private:
  int n_qubits_ = 0;
  std::vector<cplx> amps_;
};

/// <a|b>; throws DomainError on dimension mismatch.
cplx inner(const Statevector& a, const Statevector& b);

enum class ReferenceKind { ClosedShellSinglet, OpenShellTriplet };

const char* reference_name(ReferenceKind k);

/// Occupation bitstring of the reference determinant.
///   singlet: lowest n_elec spin orbitals        (|1100> for 4 qubits, 2 electrons)
///   triplet: HOMO-beta promoted to LUMO-alpha   (|1010>)
/// Throws UnsupportedError for odd n_elec, DomainError if it does not fit.
std::uint64_t reference_occupation(ReferenceKind kind, int n_qubits, int n_elec);
Statevector prepare_reference(ReferenceKind kind, int n_qubits, int n_elec);

/// Sparse column-compressed action of a qubit operator on a fixed register.
class CompiledOperator {
public:
  CompiledOperator() = default;
  CompiledOperator(const QubitOperator& op, int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  bool hermitian() const noexcept { return hermitian_; }
  std::size_t nnz() const noexcept { return rows_.size(); }

  /// out = Op * in (out is overwritten).
  void apply(std::span<const cplx> in, std::span<cplx> out) const;
  /// <s|Op|s>
  cplx expectation(std::span<const cplx> s) const;

private:
  int n_qubits_ = 0;
  bool hermitian_ = false;
  std::vector<std::uint32_t> col_start_;
  std::vector<std::uint32_t> rows_;
  std::vector<cplx> values_;
};

/// An excitation generator bound to a register: every rotation c(tau - tau^+)
/// stored as links tau|from> = sign |to>.
class CompiledGenerator {
public:
  struct Link {
    std::uint32_t from;
    std::uint32_t to;
    double sign;
  };
  struct Rotation {
    double coefficient;
    std::vector<Link> links;
  };

  CompiledGenerator() = default;
  CompiledGenerator(const ExcitationGenerator& g, int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Rotation>& rotations() const noexcept { return rotations_; }

  /// amps <- exp(theta G) amps, exact.
  void apply_exp(std::span<cplx> amps, double theta) const;
  /// out = G * in (out is overwritten).
  void apply(std::span<const cplx> in, std::span<cplx> out) const;
  /// <bra| G |ket>
  cplx matrix_element(std::span<const cplx> bra, std::span<const cplx> ket) const;

private:
  int n_qubits_ = 0;
  bool commuting_ = true;
  double norm_bound_ = 0.0;
  std::vector<Rotation> rotations_;
};

/// s <- exp(theta G) s with G the generator's (anti-Hermitian) qubit form.
void apply_exp_generator(Statevector& s, const ExcitationGenerator& g, double theta);
/// Generic exponential of an anti-Hermitian qubit operator (Taylor series with
/// scaling). Throws ContractViolation if op is not anti-Hermitian.
void apply_exp(Statevector& s, const QubitOperator& op, double theta);

/// <s|op|s> for Hermitian op; throws ContractViolation otherwise.
double expectation(const Statevector& s, const QubitOperator& op);
double expectation(const Statevector& s, const CompiledOperator& op);

/// |<a|b>|^2; throws DomainError on dimension mismatch.
double overlap(const Statevector& a, const Statevector& b);

/// beta |phi><phi| penalty term of an effective Hamiltonian.
struct RankOnePenalty {
  const Statevector* state = nullptr;
  double beta = 0.0;
};

struct SweepResult {
  double value = 0.0;        ///< <H> + sum beta |<phi|psi>|^2
  double energy = 0.0;       ///< <H>
  std::vector<double> gradient;
  Statevector state;         ///< final |psi(theta)>
};

/// Forward pass through exp(theta_N G_N) ... exp(theta_1 G_1)|ref> followed by
/// an adjoint (reverse) sweep for d value / d theta_k. Generators are applied
/// in list order.
SweepResult adjoint_sweep(const Statevector& ref, std::span<const CompiledGenerator* const> gens,
                          std::span<const double> thetas, const CompiledOperator& h,
                          std::span<const RankOnePenalty> penalties, bool want_gradient = true);

/// Prepares exp(theta_N G_N) ... exp(theta_1 G_1)|ref>.
Statevector prepare_state(const Statevector& ref, std::span<const CompiledGenerator* const> gens,
                          std::span<const double> thetas);

/// Energy and its gradient for an ansatz given as ordered generators.
std::pair<double, std::vector<double>>
energy_and_gradient(const Statevector& ref, std::span<const ExcitationGenerator> gens,
                    std::span<const double> thetas, const QubitOperator& h);

} // namespace spinvqd
