// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "spinvqd/errors.hpp"
#include "spinvqd/oracle.hpp"
#include "spinvqd/vqd.hpp"
#include "support.hpp"

using namespace spinvqd;

namespace {

std::vector<double> singlet_levels(const MolecularIntegrals& m) {
  std::vector<double> out;
  for (const auto& l : fci_spectrum(m, 0, {.n_elec = m.n_elec(), .s2 = 0.0}))
    for (int k = 0; k < l.degeneracy; ++k)
      out.push_back(l.energy);
  return out;
}

} // namespace

TEST_CASE("deflated objective limits") {
  const auto m = testing::load("h2_0.7414.fcidump");
  const CompiledOperator h(build_hamiltonian(m), 4);
  const auto pool = build_pool(PoolFlavor::sUpCCGSD, 2);
  const BoundPool bound(pool, 4);
  const auto ref = prepare_reference(ReferenceKind::ClosedShellSinglet, 4, 2);
  const std::vector<const CompiledGenerator*> gens{&bound[0], &bound[1]};
  const std::vector<double> theta{0.2, -0.4};

  const auto psi = prepare_state(ref, gens, theta);
  const double e = expectation(psi, h);
  CHECK(deflated_objective(ref, gens, theta, h, {}).first == doctest::Approx(e).epsilon(1e-14));

  const std::vector<RankOnePenalty> same{{&psi, 3.0}};
  CHECK(deflated_objective(ref, gens, theta, h, same).first ==
        doctest::Approx(e + 3.0).epsilon(1e-12));
}

TEST_CASE("deflated gradient agrees with finite differences") {
  const auto m = testing::load("h2_0.7414.fcidump");
  const CompiledOperator h(build_hamiltonian(m), 4);
  const auto pool = build_pool(PoolFlavor::sUpCCGSD, 2);
  const BoundPool bound(pool, 4);
  const auto ref = prepare_reference(ReferenceKind::ClosedShellSinglet, 4, 2);
  const std::vector<const CompiledGenerator*> gens{&bound[0], &bound[1], &bound[0]};
  std::mt19937_64 rng(23);
  const auto phi = testing::random_state(4, rng);
  const std::vector<RankOnePenalty> defl{{&phi, 3.0}};
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<double> theta{angle(rng), angle(rng), angle(rng)};
    const auto [f, g] = deflated_objective(ref, gens, theta, h, defl);
    auto fn = [&](const std::vector<double>& x) { return deflated_objective(ref, gens, x, h, defl).first; };
    for (std::size_t k = 0; k < 3; ++k) {
      const double fd = testing::central_difference(fn, theta, k, 1e-5);
      CHECK(std::abs(g[k] - fd) <= std::max(1e-6 * std::abs(fd), 1e-9));
    }
  }
}

TEST_CASE("H2 singlet sweep finds the two lowest singlets") {
  const auto m = testing::load("h2_0.7414.fcidump");
  const auto exact = singlet_levels(m);
  REQUIRE(exact.size() == 3);
  VqdConfig cfg;
  cfg.optimizer.max_iter = 200;
  cfg.seed = 4;
  const auto out = vqd_sweep(m, ReferenceKind::ClosedShellSinglet, parse_method("2-UpCCGSD"), cfg);
  REQUIRE(out.size() == 2);
  CHECK(std::abs(out[0].energy - exact[0]) < 1e-5);
  CHECK(std::abs(out[1].energy - exact[1]) < 1e-5);
  REQUIRE(out[1].overlaps.size() == 1);
  CHECK(out[1].overlaps[0] < 1e-6);
  CHECK(std::abs(out[0].s2) < 1e-6);
  CHECK(std::abs(out[1].s2) < 1e-6);
  CHECK(std::norm(inner(out[0].state, out[1].state)) < 1e-4);
}

TEST_CASE("H2 singlet sweeps with restricted ansaetze") {
  const auto m = testing::load("h2_0.7414.fcidump");
  const auto exact = singlet_levels(m);
  VqdConfig cfg;
  cfg.optimizer.max_iter = 200;
  cfg.seed = 4;

  // The orbital rotation has no gradient from the gerade reference, so the
  // grown ansatz stays gerade and its second state is the doubly excited one.
  const auto adapt = vqd_sweep(m, ReferenceKind::ClosedShellSinglet, parse_method("ADAPT"), cfg);
  CHECK(std::abs(adapt[0].energy - exact[0]) < 1e-5);
  CHECK(std::abs(adapt[1].energy - exact[2]) < 1e-5);
  for (const auto& step : adapt[1].growth)
    CHECK(step.label.rfind("single", 0) != 0);

  // exp(P) exp(S)|ref> puts at most half its weight on the open-shell singlet.
  for (std::string name : {"1-UpCCGSD", "UCCGSD"}) {
    CAPTURE(name);
    const auto out = vqd_sweep(m, ReferenceKind::ClosedShellSinglet, parse_method(name), cfg);
    CHECK(std::abs(out[0].energy - exact[0]) < 1e-5);
    CHECK(out[1].energy > exact[1] + 0.1);
    CHECK(std::abs(out[1].energy - 0.5 * (exact[1] + exact[2])) < 1e-5);
  }
}

TEST_CASE("doubling the penalty leaves a separated sweep unchanged") {
  const auto m = testing::load("h2_0.7414.fcidump");
  VqdConfig a;
  a.optimizer.max_iter = 200;
  VqdConfig b = a;
  b.beta = 6.0;
  const auto method = parse_method("ADAPT");
  const auto ra = vqd_sweep(m, ReferenceKind::ClosedShellSinglet, method, a);
  const auto rb = vqd_sweep(m, ReferenceKind::ClosedShellSinglet, method, b);
  for (std::size_t i = 0; i < ra.size(); ++i)
    CHECK(std::abs(ra[i].energy - rb[i].energy) < 1e-6);
}

TEST_CASE("LiH ADAPT sweeps at 1.80") {
  const auto m = testing::load("lih_1.80.fcidump");
  VqdConfig cfg;
  const auto method = parse_method("ADAPT");

  const auto s = vqd_sweep(m, ReferenceKind::ClosedShellSinglet, method, cfg);
  REQUIRE(s.size() == 2);
  CHECK(std::abs(s[0].energy - -7.87438) < 2e-3);
  CHECK(std::abs(s[1].energy - -7.75321) < 2e-3);

  const auto t = vqd_sweep(m, ReferenceKind::OpenShellTriplet, method, cfg);
  REQUIRE(t.size() == 2);
  CHECK(std::abs(t[0].energy - -7.77321) < 2e-3);
  CHECK(std::abs(t[1].energy - -7.53866) < 2e-3);
  CHECK(std::abs(t[1].energy - -7.71859) > 0.1);

  // variational bound for the lowest state of each manifold
  const double s0 = fci_spectrum(m, 1, {.n_elec = 4, .s2 = 0.0})[0].energy;
  const double t1 = fci_spectrum(m, 1, {.n_elec = 4, .s2 = 2.0})[0].energy;
  CHECK(s[0].energy >= s0 - 1e-9);
  CHECK(t[0].energy >= t1 - 1e-9);
  for (const auto& o : s)
    CHECK(std::abs(o.s2) < 1e-6);
  for (const auto& o : t)
    CHECK(std::abs(o.s2 - 2.0) < 1e-6);
  CHECK(s[1].overlaps[0] < 1e-4);
  CHECK(t[1].overlaps[0] < 1e-4);
  CHECK(s[0].growth.size() == static_cast<std::size_t>(s[0].operator_count) + 1);
}

TEST_CASE("nonparallelity error") {
  CHECK(npe(std::vector<double>{1.0, 0.5, 0.2}) == doctest::Approx(0.8));
  CHECK(npe(std::vector<double>{0.4}) == 0.0);
  CHECK_THROWS_AS(npe(std::vector<double>{}), DomainError);

  // first excited singlet of the two-layer paired ansatz, errors in mHa
  const std::vector<double> fci{-7.59780, -7.64450, -7.75366, -7.75275, -7.72531};
  const std::vector<double> vqd{-7.59767, -7.64435, -7.75341, -7.75264, -7.72526};
  std::vector<double> err;
  for (std::size_t i = 0; i < fci.size(); ++i)
    err.push_back((vqd[i] - fci[i]) * 1000.0);
  CHECK(std::abs(npe(err) - 0.21) <= 0.1);
}

TEST_CASE("method parsing and configuration") {
  CHECK(parse_method("2-UpCCGSD").method == Method::kUpCCGSD);
  CHECK(parse_method("2-UpCCGSD").k == 2);
  CHECK(parse_method("2-UpCCGSD").name() == "2-UpCCGSD");
  CHECK(parse_method("UCCGSD").method == Method::UCCGSD);
  CHECK(parse_method("ADAPT").name() == "ADAPT");
  CHECK_THROWS_AS(parse_method("0-UpCCGSD"), DomainError);
  CHECK_THROWS_AS(parse_method("UpCCGSD"), DomainError);
  CHECK_THROWS_AS(parse_method("VQE"), DomainError);

  VqdConfig c;
  c.beta = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  VqdConfig d;
  d.n_states = 0;
  CHECK_THROWS_AS(d.validate(), DomainError);

  CHECK(state_seed(1, ReferenceKind::ClosedShellSinglet, 0) ==
        state_seed(1, ReferenceKind::ClosedShellSinglet, 0));
  CHECK(state_seed(1, ReferenceKind::ClosedShellSinglet, 0) !=
        state_seed(1, ReferenceKind::OpenShellTriplet, 0));
  CHECK(state_seed(1, ReferenceKind::ClosedShellSinglet, 0) !=
        state_seed(1, ReferenceKind::ClosedShellSinglet, 1));
}
