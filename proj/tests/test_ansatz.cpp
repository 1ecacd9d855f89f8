// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "spinvqd/ansatz.hpp"
#include "spinvqd/errors.hpp"
#include "spinvqd/oracle.hpp"
#include "support.hpp"

using namespace spinvqd;
using testing::to_eigen;

namespace {

// |2 Re <psi|H A|psi>| from dense matrices.
std::vector<double> dense_scores(const Statevector& psi, const OperatorPool& pool, const QubitOperator& h,
                                 int nq) {
  const Eigen::VectorXcd v = to_eigen(psi);
  const Eigen::MatrixXcd hm = to_matrix(h, nq);
  std::vector<double> out;
  for (const auto& g : pool.generators)
    out.push_back(std::abs(2.0 * v.dot(hm * to_matrix(g.qubit(), nq) * v).real()));
  return out;
}

Statevector from_eigen(const Eigen::VectorXcd& v, int nq) {
  Statevector s(nq);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    s[static_cast<std::size_t>(i)] = v[i];
  return s;
}

} // namespace

TEST_CASE("layered ansatz construction") {
  const auto pool = build_pool(PoolFlavor::sUpCCGSD, 6);
  const auto one = build_k_upccgsd(pool, 1, 5);
  const auto two = build_k_upccgsd(pool, 2, 5);
  CHECK(one.size() == 30);
  CHECK(two.size() == 60);
  CHECK(two.slots[29].block == 0);
  CHECK(two.slots[30].block == 1);
  CHECK(two.slots[30].pool_index == 0);
  CHECK(two.provenance == Provenance::FixedK);
  for (double t : two.parameters()) {
    CHECK(t >= 0.0);
    CHECK(t < 0.1);
  }
  CHECK(build_k_upccgsd(pool, 2, 5).parameters() == two.parameters());
  CHECK(build_k_upccgsd(pool, 2, 6).parameters() != two.parameters());
  CHECK(initial_parameters(4, 11) == initial_parameters(4, 11));

  CHECK_THROWS_AS(build_k_upccgsd(build_pool(PoolFlavor::sUCCGSD, 6), 1, 0), DomainError);
  CHECK_THROWS_AS(build_k_upccgsd(pool, 0, 0), DomainError);
  auto a = one;
  CHECK_THROWS_AS(a.set_parameters(std::vector<double>(3)), DomainError);
}

TEST_CASE("scores without deflation are energy gradients") {
  const auto m = testing::load("h2_0.7414.fcidump");
  const auto hq = build_hamiltonian(m);
  const CompiledOperator h(hq, 4);
  const auto pool = build_pool(PoolFlavor::sUCCGSD, 2);
  const BoundPool bound(pool, 4);
  const auto ref = prepare_reference(ReferenceKind::ClosedShellSinglet, 4, 2);

  const auto s = adapt_gradients(ref, bound, h, {});
  const auto a = adapt_gradients(ref, bound, h, {}, ScoreRule::AbsoluteSum);
  const auto d = dense_scores(ref, pool, hq, 4);
  for (std::size_t k = 0; k < pool.size(); ++k) {
    CHECK(std::abs(s.scores[k] - d[k]) < 1e-12);
    CHECK(std::abs(a.scores[k] - d[k]) < 1e-12);
  }
  CHECK(pool.generators[s.argmax].label() == "pair(0,1)");
  CHECK(s.scores[0] < 1e-12);

  // all scores vanish for the identity; ties go to the lowest index
  const CompiledOperator id(QubitOperator(PauliString{}), 4);
  CHECK(adapt_gradients(ref, bound, id, {}).argmax == 0);

  // random states over a larger pool
  std::mt19937_64 rng(17);
  const auto pool3 = build_pool(PoolFlavor::sUCCGSD, 3);
  const BoundPool bound3(pool3, 6);
  std::mt19937_64 rng2(1);
  const auto hq3 = testing::random_hermitian(6, 20, rng2);
  const CompiledOperator h3(hq3, 6);
  for (int trial = 0; trial < 3; ++trial) {
    const auto psi = testing::random_state(6, rng);
    const auto r = adapt_gradients(psi, bound3, h3, {});
    const auto dd = dense_scores(psi, pool3, hq3, 6);
    double norm = 0.0;
    for (std::size_t k = 0; k < pool3.size(); ++k) {
      CHECK(std::abs(r.scores[k] - dd[k]) < 1e-10);
      norm += dd[k] * dd[k];
    }
    CHECK(r.norm == doctest::Approx(std::sqrt(norm)));
    CHECK(r.argmax == static_cast<std::size_t>(std::max_element(dd.begin(), dd.end()) - dd.begin()));
  }
}

TEST_CASE("eigenstates have vanishing scores") {
  const auto m = testing::load("h2_0.7414.fcidump");
  const auto hq = build_hamiltonian(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_matrix(hq, 4));
  const auto pool = build_pool(PoolFlavor::sUCCGSD, 2);
  const BoundPool bound(pool, 4);
  const CompiledOperator h(hq, 4);
  for (int k = 0; k < 16; ++k) {
    const auto psi = from_eigen(es.eigenvectors().col(k), 4);
    CHECK(adapt_gradients(psi, bound, h, {}).norm < 1e-8);
  }
}

TEST_CASE("score invariances") {
  const auto m = testing::load("lih_1.80.fcidump");
  const auto hq = build_hamiltonian(m);
  const CompiledOperator h(hq, 12);
  const CompiledOperator h2(hq * cplx(2.0), 12);
  const auto pool = build_pool(PoolFlavor::sUpCCGSD, 6);
  const BoundPool bound(pool, 12);
  auto psi = prepare_state(prepare_reference(ReferenceKind::ClosedShellSinglet, 12, 4),
                           build_k_upccgsd(pool, 1, 3), bound);
  const auto base = adapt_gradients(psi, bound, h, {});

  Statevector rotated = psi;
  for (auto& a : rotated.amps())
    a *= std::polar(1.0, 0.7);
  const auto phased = adapt_gradients(rotated, bound, h, {});
  const auto doubled = adapt_gradients(psi, bound, h2, {});
  for (std::size_t k = 0; k < pool.size(); ++k) {
    CHECK(std::abs(phased.scores[k] - base.scores[k]) < 1e-12);
    CHECK(std::abs(doubled.scores[k] - 2.0 * base.scores[k]) < 1e-11);
  }
}

TEST_CASE("effective score is the derivative of the deflated objective") {
  const auto m = testing::load("lih_1.80.fcidump");
  const CompiledOperator h(build_hamiltonian(m), 12);
  const auto pool = build_pool(PoolFlavor::sUpCCGSD, 6);
  const BoundPool bound(pool, 12);
  const auto ref = prepare_reference(ReferenceKind::ClosedShellSinglet, 12, 4);
  const auto phi = prepare_state(ref, build_k_upccgsd(pool, 1, 9), bound);
  const std::vector<RankOnePenalty> defl{{&phi, 3.0}};

  AnsatzState a;
  a.provenance = Provenance::Adaptive;
  a.slots = {{3, 0.05, 0}, {17, -0.08, 0}};
  const auto psi = prepare_state(ref, a, bound);
  const auto s = adapt_gradients(psi, bound, h, defl);
  for (std::size_t k : {0u, 5u, 15u, 22u}) {
    auto gens = a.generators(bound);
    gens.push_back(&bound[k]);
    auto params = a.parameters();
    params.push_back(0.0);
    const auto r = adjoint_sweep(ref, gens, params, h, defl, true);
    CHECK(std::abs(s.scores[k] - std::abs(r.gradient.back())) < 1e-10);
  }
}

TEST_CASE("ADAPT on H2 reaches the exact ground state") {
  const auto m = testing::load("h2_0.7414.fcidump");
  const CompiledOperator h(build_hamiltonian(m), 4);
  const auto pool = build_pool(PoolFlavor::sUpCCGSD, 2);
  const BoundPool bound(pool, 4);
  const auto ref = prepare_reference(ReferenceKind::ClosedShellSinglet, 4, 2);
  const auto r = adapt_grow(ref, bound, h, {}, {}, {});
  CHECK(r.converged);
  CHECK(r.ansatz.size() <= 3);
  CHECK(r.ansatz.size() >= 1);
  CHECK(r.ansatz.provenance == Provenance::Adaptive);
  CHECK(std::abs(r.energy - fci_spectrum(m, 1)[0].energy) < 1e-6);
  CHECK(r.trace.back().label.empty());
  CHECK(r.final_epsilon < 0.01);
}

TEST_CASE("ADAPT objective decreases monotonically") {
  const auto m = testing::load("lih_1.80.fcidump");
  const CompiledOperator h(build_hamiltonian(m), 12);
  const auto pool = build_pool(PoolFlavor::sUpCCGSD, 6);
  const BoundPool bound(pool, 12);
  for (auto kind : {ReferenceKind::ClosedShellSinglet, ReferenceKind::OpenShellTriplet}) {
    const auto ref = prepare_reference(kind, 12, 4);
    const auto r = adapt_grow(ref, bound, h, {}, {}, {});
    double last = expectation(ref, h);
    for (const auto& step : r.trace) {
      CHECK(step.value <= last + 1e-10);
      last = step.value;
    }
    CHECK(r.ansatz.size() < 30);
  }
}

TEST_CASE("large threshold gives an empty ansatz") {
  const auto m = testing::load("lih_1.80.fcidump");
  const CompiledOperator h(build_hamiltonian(m), 12);
  const auto pool = build_pool(PoolFlavor::sUpCCGSD, 6);
  const BoundPool bound(pool, 12);
  const auto ref = prepare_reference(ReferenceKind::ClosedShellSinglet, 12, 4);
  AdaptConfig cfg;
  cfg.epsilon = 10.0;
  const auto r = adapt_grow(ref, bound, h, {}, cfg, {});
  CHECK(r.ansatz.size() == 0);
  CHECK(r.converged);
  CHECK(r.energy == doctest::Approx(expectation(ref, h)).epsilon(1e-13));
}

TEST_CASE("ADAPT configuration errors") {
  AdaptConfig c;
  c.epsilon = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  AdaptConfig d;
  d.max_ops = 0;
  CHECK_THROWS_AS(d.validate(), DomainError);
}
