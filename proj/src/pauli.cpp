// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinvqd/pauli.hpp"

#include <bit>
#include <cstdio>
#include <sstream>

#include "spinvqd/errors.hpp"

namespace spinvqd {

char axis_char(Axis a) {
  switch (a) {
  case Axis::X: return 'X';
  case Axis::Y: return 'Y';
  case Axis::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::initializer_list<std::pair<int, Axis>> ops) {
  for (auto [q, a] : ops)
    set(q, a);
}

PauliString::PauliString(const std::vector<std::pair<int, Axis>>& ops) {
  for (auto [q, a] : ops)
    set(q, a);
}

int PauliString::weight() const noexcept { return std::popcount(x_ | z_); }

int PauliString::max_qubit() const noexcept {
  const auto s = x_ | z_;
  return s == 0 ? -1 : 63 - std::countl_zero(s);
}

int PauliString::y_count() const noexcept { return std::popcount(x_ & z_); }

bool PauliString::axis_at(int q, Axis& out) const noexcept {
  const bool x = (x_ >> q) & 1U, z = (z_ >> q) & 1U;
  if (!x && !z)
    return false;
  out = x ? (z ? Axis::Y : Axis::X) : Axis::Z;
  return true;
}

void PauliString::set(int q, Axis a) {
  if (q < 0 || q >= kMaxQubits)
    throw RangeError("PauliString: qubit index " + std::to_string(q) + " out of range");
  const std::uint64_t bit = std::uint64_t{1} << q;
  x_ &= ~bit;
  z_ &= ~bit;
  if (a != Axis::Z)
    x_ |= bit;
  if (a != Axis::X)
    z_ |= bit;
}

std::vector<std::pair<int, Axis>> PauliString::ops() const {
  std::vector<std::pair<int, Axis>> out;
  for (auto s = support(); s != 0; s &= s - 1) {
    const int q = std::countr_zero(s);
    Axis a;
    axis_at(q, a);
    out.emplace_back(q, a);
  }
  return out;
}

std::string PauliString::to_string() const {
  if (is_identity())
    return "I";
  std::string out;
  for (auto [q, a] : ops()) {
    if (!out.empty())
      out += ' ';
    out += axis_char(a);
    out += std::to_string(q);
  }
  return out;
}

bool operator<(const PauliString& a, const PauliString& b) noexcept {
  const std::uint64_t diff = (a.x_ ^ b.x_) | (a.z_ ^ b.z_);
  if (diff == 0)
    return false;
  const int d = std::countr_zero(diff);
  Axis aa, ab;
  const bool has_a = a.axis_at(d, aa), has_b = b.axis_at(d, ab);
  // Shorter prefix sorts first; otherwise the factor at d decides.
  const std::uint64_t above = d == 63 ? 0 : ~((std::uint64_t{1} << (d + 1)) - 1);
  if (!has_a)
    return (a.support() & above) == 0;
  if (!has_b)
    return (b.support() & above) != 0;
  return aa < ab;
}

std::pair<PauliString, cplx> multiply(const PauliString& a, const PauliString& b) {
  static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::uint64_t x3 = a.x_mask() ^ b.x_mask(), z3 = a.z_mask() ^ b.z_mask();
  // P(x,z) = i^{xz} X^x Z^z; moving Z^{z1} past X^{x2} costs (-1)^{z1 x2}.
  const int k = std::popcount(a.x_mask() & a.z_mask()) + std::popcount(b.x_mask() & b.z_mask()) +
                2 * std::popcount(a.z_mask() & b.x_mask()) - std::popcount(x3 & z3);
  return {PauliString::from_masks(x3, z3), kIPow[((k % 4) + 4) % 4]};
}

// ---- QubitOperator ----

QubitOperator::QubitOperator(const PauliString& p, cplx c) { add_term(p, c); }

cplx QubitOperator::coefficient(const PauliString& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? cplx{} : it->second;
}

void QubitOperator::add_term(const PauliString& p, cplx c) {
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted)
    it->second += c;
}

QubitOperator& QubitOperator::operator+=(const QubitOperator& o) {
  for (const auto& [p, c] : o.terms_)
    add_term(p, c);
  return *this;
}

QubitOperator& QubitOperator::operator-=(const QubitOperator& o) {
  for (const auto& [p, c] : o.terms_)
    add_term(p, -c);
  return *this;
}

QubitOperator& QubitOperator::operator*=(cplx s) {
  for (auto& [p, c] : terms_)
    c *= s;
  return *this;
}

QubitOperator operator*(const QubitOperator& a, const QubitOperator& b) {
  QubitOperator out;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) {
      auto [pc, phase] = multiply(pa, pb);
      out.add_term(pc, phase * ca * cb);
    }
  return out;
}

QubitOperator& QubitOperator::operator*=(const QubitOperator& o) {
  *this = *this * o;
  return *this;
}

QubitOperator& QubitOperator::compress(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    cplx& c = it->second;
    if (std::abs(c.real()) < tol)
      c.real(0.0);
    if (std::abs(c.imag()) < tol)
      c.imag(0.0);
    if (std::abs(c) < tol)
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

QubitOperator QubitOperator::adjoint() const {
  QubitOperator out;
  for (const auto& [p, c] : terms_)
    out.terms_.emplace(p, std::conj(c));
  return out;
}

bool QubitOperator::is_hermitian(double tol) const {
  for (const auto& [p, c] : terms_)
    if (std::abs(c.imag()) > tol)
      return false;
  return true;
}

bool QubitOperator::is_anti_hermitian(double tol) const {
  for (const auto& [p, c] : terms_)
    if (std::abs(c.real()) > tol)
      return false;
  return true;
}

int QubitOperator::min_qubits() const noexcept {
  int n = 0;
  for (const auto& [p, c] : terms_)
    n = std::max(n, p.max_qubit() + 1);
  return n;
}

namespace {
std::string format_coefficient(cplx c) {
  char buf[96];
  if (c.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.12g", c.real());
  else if (c.real() == 0.0)
    std::snprintf(buf, sizeof buf, "%.12gi", c.imag());
  else
    std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real(), c.imag());
  return buf;
}
} // namespace

std::string QubitOperator::to_string() const {
  std::ostringstream out;
  for (const auto& [p, c] : terms_)
    out << format_coefficient(c) << " · " << p.to_string() << '\n';
  return out.str();
}

QubitOperator op_add(const QubitOperator& a, const QubitOperator& b) { return a + b; }
QubitOperator op_mul(const QubitOperator& a, const QubitOperator& b) { return a * b; }
QubitOperator op_scale(const QubitOperator& a, cplx s) { return a * s; }
QubitOperator compress(QubitOperator a, double tol) { return std::move(a.compress(tol)); }

namespace {
void check_register(const QubitOperator& op, int n_qubits, int limit) {
  if (n_qubits > limit)
    throw ResourceError("to_matrix: " + std::to_string(n_qubits) +
                        " qubits exceeds the limit of " + std::to_string(limit));
  if (n_qubits < op.min_qubits())
    throw DomainError("to_matrix: register of " + std::to_string(n_qubits) +
                      " qubits is smaller than the operator support");
}
} // namespace

Eigen::SparseMatrix<cplx> to_sparse_matrix(const QubitOperator& op, int n_qubits) {
  check_register(op, n_qubits, 14);
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(op.size() * dim);
  for (const auto& [p, c] : op.terms())
    for (std::uint64_t i = 0; i < dim; ++i) {
      const auto [j, phase] = apply_to_basis(p, i);
      trips.emplace_back(static_cast<int>(j), static_cast<int>(i), c * phase);
    }
  Eigen::SparseMatrix<cplx> m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(trips.begin(), trips.end());
  m.prune(cplx{0.0, 0.0});
  return m;
}

Eigen::MatrixXcd to_matrix(const QubitOperator& op, int n_qubits) {
  check_register(op, n_qubits, 10);
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const auto& [p, c] : op.terms())
    for (std::uint64_t i = 0; i < dim; ++i) {
      const auto [j, phase] = apply_to_basis(p, i);
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += c * phase;
    }
  return m;
}

} // namespace spinvqd
