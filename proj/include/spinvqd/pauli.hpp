// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace spinvqd {

using cplx = std::complex<double>;

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

char axis_char(Axis a);

/// Tensor product of single-qubit Pauli matrices; identity on unlisted qubits.
///
/// Stored as a pair of bit masks (x-part, z-part): X=(1,0), Y=(1,1), Z=(0,1).
/// Qubit q is bit q, so registers are limited to 64 qubits.
class PauliString {
public:
  static constexpr int kMaxQubits = 64;

  PauliString() = default;
  PauliString(std::initializer_list<std::pair<int, Axis>> ops);
  explicit PauliString(const std::vector<std::pair<int, Axis>>& ops);

  static PauliString from_masks(std::uint64_t x, std::uint64_t z) {
    PauliString p;
    p.x_ = x;
    p.z_ = z;
    return p;
  }

  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }
  std::uint64_t support() const noexcept { return x_ | z_; }

  bool is_identity() const noexcept { return (x_ | z_) == 0; }
  int weight() const noexcept;
  /// Highest qubit index acted upon, or -1 for the identity.
  int max_qubit() const noexcept;
  int y_count() const noexcept;

  /// Returns the axis on qubit q; false when q carries the identity.
  bool axis_at(int q, Axis& out) const noexcept;
  void set(int q, Axis a);

  /// Non-identity factors in ascending qubit order.
  std::vector<std::pair<int, Axis>> ops() const;

  /// "X0 Z3 Y5"; "I" for the identity.
  std::string to_string() const;

  friend bool operator==(const PauliString& a, const PauliString& b) noexcept {
    return a.x_ == b.x_ && a.z_ == b.z_;
  }
  /// Lexicographic on the (qubit, axis) factor sequence.
  friend bool operator<(const PauliString& a, const PauliString& b) noexcept;

private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// a*b = phase * c with phase in {+1, -1, +i, -i}.
std::pair<PauliString, cplx> multiply(const PauliString& a, const PauliString& b);

/// Linear combination of Pauli strings with complex coefficients.
class QubitOperator {
public:
  using TermMap = std::map<PauliString, cplx>;
  static constexpr double kDropTolerance = 1e-12;

  QubitOperator() = default;
  QubitOperator(const PauliString& p, cplx c = 1.0);
  static QubitOperator identity(cplx c = 1.0) { return QubitOperator(PauliString{}, c); }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of p (zero if absent).
  cplx coefficient(const PauliString& p) const;
  void add_term(const PauliString& p, cplx c);

  QubitOperator& operator+=(const QubitOperator& o);
  QubitOperator& operator-=(const QubitOperator& o);
  QubitOperator& operator*=(cplx s);
  QubitOperator& operator*=(const QubitOperator& o);

  friend QubitOperator operator+(QubitOperator a, const QubitOperator& b) { return a += b; }
  friend QubitOperator operator-(QubitOperator a, const QubitOperator& b) { return a -= b; }
  friend QubitOperator operator*(QubitOperator a, cplx s) { return a *= s; }
  friend QubitOperator operator*(cplx s, QubitOperator a) { return a *= s; }
  friend QubitOperator operator*(const QubitOperator& a, const QubitOperator& b);

  /// Drops terms with |c| < tol and zeroes real/imaginary parts below tol.
  QubitOperator& compress(double tol = kDropTolerance);

  QubitOperator adjoint() const;
  bool is_hermitian(double tol = 1e-10) const;
  bool is_anti_hermitian(double tol = 1e-10) const;

  /// Number of qubits needed to hold every term (max index + 1).
  int min_qubits() const noexcept;

  /// One "c · X0 Z3" line per term, in term order.
  std::string to_string() const;

private:
  TermMap terms_;
};

QubitOperator op_add(const QubitOperator& a, const QubitOperator& b);
QubitOperator op_mul(const QubitOperator& a, const QubitOperator& b);
QubitOperator op_scale(const QubitOperator& a, cplx s);
QubitOperator compress(QubitOperator a, double tol = QubitOperator::kDropTolerance);

/// Action of a single Pauli string on basis state |index>: P|i> = phase |j>.
inline std::pair<std::uint64_t, cplx> apply_to_basis(const PauliString& p, std::uint64_t index);

/// Sparse 2^n x 2^n matrix; qubit 0 is the least-significant index bit.
/// Throws ResourceError for n > 14 or if n is below the operator's support.
Eigen::SparseMatrix<cplx> to_sparse_matrix(const QubitOperator& op, int n_qubits);
/// Dense variant, limited to n <= 10.
Eigen::MatrixXcd to_matrix(const QubitOperator& op, int n_qubits);

// ---- inline ----

inline std::pair<std::uint64_t, cplx> apply_to_basis(const PauliString& p, std::uint64_t index) {
  static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int k = p.y_count();
  if (std::popcount(index & p.z_mask()) & 1)
    k += 2;
  return {index ^ p.x_mask(), kIPow[k & 3]};
}

} // namespace spinvqd
