// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinvqd/integrals.hpp"
#include "spinvqd/pauli.hpp"

namespace spinvqd {

/// Spin orbitals are interleaved: 2p is p-alpha, 2p+1 is p-beta.
constexpr int spin_orbital(int spatial, int spin) noexcept { return 2 * spatial + spin; }
inline constexpr int kAlpha = 0;
inline constexpr int kBeta = 1;

struct LadderOp {
  int mode = 0;
  bool dagger = false;

  friend auto operator<=>(const LadderOp&, const LadderOp&) = default;
};

using LadderString = std::vector<LadderOp>;

/// Hermitian conjugate of a ladder product (reversed, daggers flipped).
LadderString adjoint(const LadderString& f);

/// coefficient * (product of ladder operators, applied right to left).
struct FermionTerm {
  LadderString factors;
  cplx coefficient{1.0, 0.0};
};

/// Sum of ladder-operator products.
class FermionOperator {
public:
  using TermMap = std::map<LadderString, cplx>;

  FermionOperator() = default;
  FermionOperator(const FermionTerm& t) { add_term(t.factors, t.coefficient); }

  const TermMap& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  void add_term(const LadderString& f, cplx c);

  FermionOperator& operator+=(const FermionOperator& o);
  FermionOperator& operator-=(const FermionOperator& o);
  FermionOperator& operator*=(cplx s);
  friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }
  friend FermionOperator operator-(FermionOperator a, const FermionOperator& b) { return a -= b; }
  friend FermionOperator operator*(FermionOperator a, cplx s) { return a *= s; }
  friend FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

  FermionOperator adjoint() const;

private:
  TermMap terms_;
};

/// Canonical form: creators left in descending mode order, annihilators right
/// in descending mode order; vanishing and sub-tolerance terms are removed.
FermionOperator normal_ordered(const FermionOperator& op, double tol = 1e-12);

bool is_anti_hermitian(const FermionOperator& op, double tol = 1e-12);

QubitOperator jw_transform(const FermionTerm& t);
QubitOperator jw_transform(const FermionOperator& op);

/// Second-quantized electronic Hamiltonian over 2*n_orb interleaved spin
/// orbitals, Jordan-Wigner mapped and compressed.
QubitOperator build_hamiltonian(const MolecularIntegrals& m);
FermionOperator build_fermion_hamiltonian(const MolecularIntegrals& m);

/// S_z = 1/2 sum_p (n_pa - n_pb).
QubitOperator build_sz(int n_orb);
/// S^2 = S_- S_+ + S_z (S_z + 1) with S_+ = sum_p a+_pa a_pb.
QubitOperator build_s2(int n_orb);
/// Total particle number over n_modes spin orbitals.
QubitOperator build_number(int n_modes);

enum class ExcitationKind { GeneralizedSingle, GeneralizedDouble, PairedDouble };

std::string kind_name(ExcitationKind k);

/// One rotation c * (tau - tau^dagger) of an excitation generator. tau is a
/// product of distinct creators followed by distinct annihilators.
struct RotationTerm {
  LadderString tau;
  double coefficient = 1.0;
};

/// Anti-Hermitian spin-adapted excitation operator.
///
///  - GeneralizedSingle (p, r), p < r:   E_p^r - E_r^p, E_p^r = sum_s a+_ps a_rs
///  - PairedDouble (p, r), p < r:        a+_ra a+_rb a_pa a_pb - h.c.
///  - GeneralizedDouble (p, q, r, s):    E_pq^rs - E_rs^pq with
///        E_pq^rs = sum_{s,t} a+_ps a+_qt a_rt a_ss,
///    requiring p <= q, r <= s, (p, q) < (r, s) and a nonzero result.
class ExcitationGenerator {
public:
  ExcitationKind kind() const noexcept { return kind_; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  int n_orb() const noexcept { return n_orb_; }

  const FermionOperator& fermion() const noexcept { return fermion_; }
  const QubitOperator& qubit() const noexcept { return qubit_; }
  const std::vector<RotationTerm>& rotations() const noexcept { return rotations_; }

  /// True when the rotation terms act on pairwise disjoint spin orbitals, so
  /// the exponential factorizes exactly into per-term rotations.
  bool rotations_commute() const noexcept { return rotations_commute_; }

  /// e.g. "single(0,1)", "pair(0,2)", "double(0,1;2,3)".
  std::string label() const;

  friend ExcitationGenerator make_generator(ExcitationKind, const std::vector<int>&, int);

private:
  ExcitationKind kind_ = ExcitationKind::GeneralizedSingle;
  std::vector<int> indices_;
  int n_orb_ = 0;
  FermionOperator fermion_;
  QubitOperator qubit_;
  std::vector<RotationTerm> rotations_;
  bool rotations_commute_ = true;
};

/// Throws DomainError on out-of-range or non-canonical indices, or when the
/// requested operator vanishes identically.
ExcitationGenerator make_generator(ExcitationKind kind, const std::vector<int>& indices,
                                   int n_orb);

} // namespace spinvqd
