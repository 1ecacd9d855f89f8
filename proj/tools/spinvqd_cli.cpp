// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

// Batch driver for bond-length scans plus a few inspection commands.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "spinvqd/oracle.hpp"
#include "spinvqd/pools.hpp"
#include "spinvqd/scan.hpp"

int main(int argc, char** argv) {
  using namespace spinvqd;
  CLI::App app{"spinvqd: spin-restricted VQE/VQD emulator"};
  app.require_subcommand(1);

  std::string config;
  std::string out_dir;
  int workers = 1;
  std::uint64_t seed = 0;
  auto* run = app.add_subcommand("run", "execute a scan described by a JSON run config");
  run->add_option("-c,--config", config, "run config (JSON)")->required()->check(CLI::ExistingFile);
  auto* out_opt = run->add_option("-o,--output-dir", out_dir, "override the config's output_dir");
  run->add_option("-j,--workers", workers, "geometries evaluated in parallel")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = run->add_option("--seed", seed, "override the config's seed");
  auto* verbose = run->add_flag("-v,--verbose", "progress on stderr (repeat for more)");

  std::string flavor = "sUpCCGSD";
  int n_orb = 6;
  auto* pool = app.add_subcommand("pool", "print a pool listing");
  pool->add_option("--flavor", flavor, "sUCCGSD or sUpCCGSD");
  pool->add_option("--n-orb", n_orb, "spatial orbitals");

  std::string method = "UCCGSD";
  auto* res = app.add_subcommand("resources", "uncompiled resource counts of a fixed ansatz");
  res->add_option("--method", method, "UCCGSD or <k>-UpCCGSD");
  res->add_option("--n-orb", n_orb, "spatial orbitals");

  std::string fcidump;
  int n_levels = 10;
  auto* spec = app.add_subcommand("spectrum", "exact low-lying levels of an FCIDUMP");
  spec->add_option("fcidump", fcidump, "integral file")->required()->check(CLI::ExistingFile);
  spec->add_option("-n,--levels", n_levels, "levels to print");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      ScanOptions opt;
      opt.workers = workers;
      opt.verbosity = static_cast<int>(verbose->count());
      if (*seed_opt)
        opt.seed = seed;
      if (*out_opt)
        opt.output_dir = out_dir;
      return run_scan(RunConfig::load(config), opt);
    }
    if (*pool) {
      std::cout << build_pool(parse_flavor(flavor), n_orb).listing();
      return 0;
    }
    if (*res) {
      const ResourceRow r = report_resources(parse_method(method), n_orb);
      std::cout << "method,operators,gadgets,naive_cx,note\n"
                << r.method << ',' << r.operators << ',' << r.gadgets << ',' << r.naive_cx
                << ",uncompiled\n";
      return 0;
    }
    if (*spec) {
      const auto m = read_fcidump(fcidump);
      const auto levels = fci_spectrum(m, n_levels);
      const auto labels = level_labels(levels);
      std::printf("%-5s %18s %10s %4s\n", "label", "energy_ha", "s2", "deg");
      for (std::size_t i = 0; i < levels.size(); ++i)
        std::printf("%-5s %18.10f %10.6f %4d\n", labels[i].c_str(), levels[i].energy,
                    levels[i].s2, levels[i].degeneracy);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "spinvqd: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
