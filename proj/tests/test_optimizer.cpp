// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinvqd/errors.hpp"
#include "spinvqd/fermion.hpp"
#include "spinvqd/optimizer.hpp"
#include "spinvqd/oracle.hpp"
#include "spinvqd/simulator.hpp"
#include "support.hpp"

using namespace spinvqd;

namespace {

double rosenbrock(std::span<const double> x, std::span<double> g) {
  double f = 0.0;
  std::fill(g.begin(), g.end(), 0.0);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    f += 100.0 * a * a + b * b;
    g[i] += -400.0 * x[i] * a - 2.0 * b;
    g[i + 1] += 200.0 * a;
  }
  return f;
}

} // namespace

TEST_CASE("one-dimensional quadratic") {
  auto f = [](std::span<const double> x, std::span<double> g) {
    g[0] = 2.0 * (x[0] - 0.3);
    return (x[0] - 0.3) * (x[0] - 0.3);
  };
  OptimizerConfig cfg;
  cfg.lower = -std::numbers::pi;
  cfg.upper = std::numbers::pi;
  const auto r = minimize(f, {0.0}, cfg);
  CHECK(r.converged());
  CHECK(std::abs(r.x[0] - 0.3) < 1e-6);
  CHECK(r.value < 1e-12);
}

TEST_CASE("Rosenbrock") {
  OptimizerConfig cfg;
  cfg.max_iter = 200;
  cfg.ftol = 0.0;
  cfg.pgtol = 1e-8;
  for (std::size_t n : {2u, 4u}) {
    std::vector<double> x0(n, -1.2);
    x0[1] = 1.0;
    const auto r = minimize(rosenbrock, x0, cfg);
    for (double xi : r.x)
      CHECK(std::abs(xi - 1.0) < 1e-4);
  }
}

TEST_CASE("bounds are respected") {
  auto f = [](std::span<const double> x, std::span<double> g) {
    g[0] = 2.0 * (x[0] - 5.0);
    g[1] = 2.0 * (x[1] + 5.0);
    return (x[0] - 5.0) * (x[0] - 5.0) + (x[1] + 5.0) * (x[1] + 5.0);
  };
  OptimizerConfig cfg;
  cfg.lower = -1.0;
  cfg.upper = 1.0;
  const auto r = minimize(f, {0.0, 0.0}, cfg);
  CHECK(r.x[0] == 1.0);
  CHECK(r.x[1] == -1.0);
  CHECK(r.status == OptimizerStatus::Converged);

  CHECK_THROWS_AS(minimize(f, {2.0, 0.0}, cfg), DomainError);
}

TEST_CASE("configuration and objective errors") {
  OptimizerConfig bad;
  bad.lower = 1.0;
  bad.upper = -1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  OptimizerConfig mem;
  mem.memory = 0;
  CHECK_THROWS_AS(mem.validate(), DomainError);
  auto nan = [](std::span<const double>, std::span<double> g) {
    g[0] = 0.0;
    return std::nan("");
  };
  CHECK_THROWS_AS(minimize(nan, {0.0}, {}), DomainError);
}

TEST_CASE("iteration budget") {
  OptimizerConfig cfg;
  cfg.max_iter = 3;
  cfg.ftol = 0.0;
  const auto r = minimize(rosenbrock, {-1.2, 1.0}, cfg);
  CHECK(r.iterations <= 3);
  CHECK(r.status == OptimizerStatus::MaxIterations);
  CHECK_FALSE(r.converged());
  CHECK(status_name(r.status) == "max_iter");
}

TEST_CASE("single-parameter VQE for H2 reaches the exact ground state") {
  const auto m = testing::load("h2_0.7414.fcidump");
  const auto h = build_hamiltonian(m);
  const auto ref = prepare_reference(ReferenceKind::ClosedShellSinglet, 4, 2);
  const std::vector<ExcitationGenerator> gens{make_generator(ExcitationKind::PairedDouble, {0, 1}, 2)};
  auto f = [&](std::span<const double> x, std::span<double> g) {
    auto [e, grad] = energy_and_gradient(ref, gens, x, h);
    std::copy(grad.begin(), grad.end(), g.begin());
    return e;
  };
  const auto r = minimize(f, {0.0}, {});
  const double exact = fci_spectrum(m, 1)[0].energy;
  CHECK(r.converged());
  CHECK(std::abs(r.value - exact) < 1e-7);
}
