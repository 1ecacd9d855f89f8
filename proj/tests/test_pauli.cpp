// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "spinvqd/errors.hpp"
#include "spinvqd/pauli.hpp"
#include "support.hpp"

using namespace spinvqd;

namespace {

const cplx kI{0, 1};

PauliString P(std::initializer_list<std::pair<int, Axis>> ops) { return PauliString(ops); }

} // namespace

TEST_CASE("single-qubit products") {
  auto [c1, f1] = multiply(P({{0, Axis::X}}), P({{0, Axis::X}}));
  CHECK(c1.is_identity());
  CHECK(f1 == cplx(1));

  auto [c2, f2] = multiply(P({{0, Axis::X}}), P({{0, Axis::Y}}));
  CHECK(c2 == P({{0, Axis::Z}}));
  CHECK(f2 == kI);

  auto [c3, f3] = multiply(P({{0, Axis::Y}}), P({{0, Axis::X}}));
  CHECK(c3 == P({{0, Axis::Z}}));
  CHECK(f3 == -kI);
}

TEST_CASE("two-qubit product agrees with matrices") {
  const auto a = P({{0, Axis::X}, {1, Axis::Z}});
  const auto b = P({{0, Axis::Y}, {1, Axis::Z}});
  auto [c, f] = multiply(a, b);
  CHECK(c == P({{0, Axis::Z}}));
  CHECK(f == kI);
  const Eigen::MatrixXcd lhs = to_matrix(QubitOperator(a), 2) * to_matrix(QubitOperator(b), 2);
  const Eigen::MatrixXcd rhs = f * to_matrix(QubitOperator(c), 2);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("product with the adjoint gives identity") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = testing::random_string(6, rng);
    const auto b = testing::random_string(6, rng);
    auto [c, f] = multiply(a, b);
    // (ab)^dagger = b a for Hermitian strings; (ab)(ab)^dagger = I
    auto [d, g] = multiply(b, a);
    auto [e, h] = multiply(c, d);
    CHECK(e.is_identity());
    CHECK(std::abs(f * h * g - cplx(1)) < 1e-15);
    CHECK(std::abs(g - std::conj(f)) < 1e-15);
  }
}

TEST_CASE("operator algebra") {
  std::mt19937_64 rng(5);
  const QubitOperator a = testing::random_operator(3, 6, rng);
  CHECK(compress(a + a * cplx(-1)).empty());
  CHECK(compress(op_add(a, op_scale(a, -1.0))).empty());

  const QubitOperator z0(P({{0, Axis::Z}}));
  const QubitOperator id = op_mul(z0, z0);
  REQUIRE(id.size() == 1);
  CHECK(id.coefficient(PauliString{}) == cplx(1));

  const QubitOperator h = QubitOperator(P({{0, Axis::X}}), 0.5) + QubitOperator(P({{0, Axis::Y}}), 0.5);
  const QubitOperator sq = compress(h * h);
  REQUIRE(sq.size() == 1);
  CHECK(std::abs(sq.coefficient(PauliString{}) - cplx(0.5)) < 1e-15);
  const Eigen::MatrixXcd hm = to_matrix(h, 1);
  CHECK(((hm * hm) - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("compress drops small terms") {
  QubitOperator op;
  op.add_term(P({{0, Axis::X}}), 1e-13);
  op.add_term(P({{1, Axis::Z}}), cplx(1.0, 1e-14));
  op.compress();
  CHECK(op.size() == 1);
  CHECK(op.coefficient(P({{1, Axis::Z}})) == cplx(1.0, 0.0));
}

TEST_CASE("matrices") {
  const Eigen::MatrixXcd z = to_matrix(QubitOperator(P({{0, Axis::Z}})), 1);
  CHECK(z(0, 0) == cplx(1));
  CHECK(z(1, 1) == cplx(-1));
  CHECK(z(0, 1) == cplx(0));

  const Eigen::MatrixXcd x = to_matrix(QubitOperator(P({{0, Axis::X}})), 2);
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
  expect(0, 1) = expect(1, 0) = expect(2, 3) = expect(3, 2) = 1.0;
  CHECK((x - expect).cwiseAbs().maxCoeff() == 0.0);

  const Eigen::SparseMatrix<cplx> xs = to_sparse_matrix(QubitOperator(P({{0, Axis::X}})), 2);
  CHECK((Eigen::MatrixXcd(xs) - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("matrix map is a homomorphism") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto a = testing::random_operator(3, 5, rng);
    const auto b = testing::random_operator(3, 5, rng);
    const Eigen::MatrixXcd lhs = to_matrix(a * b, 3);
    const Eigen::MatrixXcd rhs = to_matrix(a, 3) * to_matrix(b, 3);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("every string is Hermitian and unitary") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const Eigen::MatrixXcd m = to_matrix(QubitOperator(testing::random_string(3, rng)), 3);
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((m * m - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("register size limits") {
  const QubitOperator z5(P({{5, Axis::Z}}));
  CHECK_THROWS_AS(to_matrix(z5, 3), DomainError);
  CHECK_THROWS_AS(to_matrix(QubitOperator(P({{0, Axis::Z}})), 11), ResourceError);
  CHECK_THROWS_AS(to_sparse_matrix(QubitOperator(P({{0, Axis::Z}})), 15), ResourceError);
}

TEST_CASE("text rendering and ordering") {
  const auto p = P({{5, Axis::Y}, {0, Axis::X}, {3, Axis::Z}});
  CHECK(p.to_string() == "X0 Z3 Y5");
  CHECK(PauliString{}.to_string() == "I");
  CHECK(P({{0, Axis::X}}) < P({{0, Axis::Y}}));
  CHECK(P({{0, Axis::Z}}) < P({{1, Axis::X}}));
  CHECK(P({{0, Axis::X}, {1, Axis::X}}) < P({{0, Axis::X}, {2, Axis::X}}));
  CHECK(PauliString{} < P({{0, Axis::X}}));
  QubitOperator op;
  op.add_term(P({{0, Axis::X}, {3, Axis::Z}}), 0.5);
  CHECK(op.to_string().find("X0 Z3") != std::string::npos);
}

TEST_CASE("hermiticity flags") {
  QubitOperator h(P({{0, Axis::X}}), 2.0);
  CHECK(h.is_hermitian());
  CHECK_FALSE(h.is_anti_hermitian());
  QubitOperator g(P({{0, Axis::X}, {1, Axis::Y}}), cplx(0, 0.5));
  CHECK(g.is_anti_hermitian());
  CHECK_FALSE(g.is_hermitian());
}
