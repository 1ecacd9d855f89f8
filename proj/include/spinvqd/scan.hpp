// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spinvqd/ansatz.hpp"
#include "spinvqd/vqd.hpp"

namespace spinvqd {

struct GeometryEntry {
  double bond_length = 0.0; ///< Angstrom
  std::filesystem::path fcidump;
};

/// Batch-run description, read from JSON:
///
///   {
///     "geometries": [{"bond_length": 1.8, "fcidump": "../data/lih_1.80.fcidump"}],
///     "method": "ADAPT",            // "UCCGSD", "ADAPT" or "<k>-UpCCGSD"
///     "spins": ["singlet", "triplet"],
///     "n_states": 2,
///     "beta": 3.0,
///     "adapt": {"epsilon": 0.01, "max_ops": 60,
///               "score_rule": "effective_gradient"},   // or "absolute_sum"
///     "optimizer": {"pgtol": 1e-5, "max_iter": 30, "memory": 10,
///                   "lower": -6.283185307179586, "upper": 6.283185307179586,
///                   "ftol": 2.220446049250313e-09, "max_linesearch": 20},
///     "seed": 7,
///     "output_dir": "out/lih_adapt"
///   }
///
/// Relative paths resolve against the config file's directory. Only
/// "geometries" and "method" are required.
struct RunConfig {
  std::vector<GeometryEntry> geometries;
  MethodSpec method;
  std::vector<ReferenceKind> spins{ReferenceKind::ClosedShellSinglet};
  VqdConfig vqd;
  AdaptConfig adapt;
  std::filesystem::path output_dir = "out";

  /// Throws DomainError (bad values, non-increasing geometries) or
  /// FormatError (malformed JSON, wrong types).
  static RunConfig from_json(const std::string& text, const std::filesystem::path& base = {});
  static RunConfig load(const std::filesystem::path& path);
  void validate() const;
};

struct ResourceRow {
  std::string method;
  int operators = 0;
  std::size_t gadgets = 0;
  std::size_t naive_cx = 0;
};

/// Operator count, distinct-Pauli gadget count summed over circuit layers and
/// the naive CX estimate. Values are for the uncompiled circuit.
ResourceRow report_resources(const AnsatzState& a, const OperatorPool& pool,
                             const std::string& method);
/// Fixed ansaetze straight from the method: UCCGSD or k-UpCCGSD.
ResourceRow report_resources(const MethodSpec& method, int n_orb);

struct ScanOptions {
  int workers = 1;
  int verbosity = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> output_dir;
};

struct StateRow {
  double bond_length = 0.0;
  ReferenceKind spin = ReferenceKind::ClosedShellSinglet;
  VqdOutcome outcome;
  std::string label;       ///< nearest exact level of the same spin
  double fci_energy = 0.0; ///< that level's energy
};

struct GeometryResult {
  GeometryEntry geometry;
  bool ok = false;
  std::string error;
  std::vector<StateRow> rows;
};

struct ScanResult {
  std::vector<GeometryResult> geometries;
  int failures = 0;
};

/// Runs every geometry (in parallel over workers) without writing files.
ScanResult execute_scan(const RunConfig& cfg, const ScanOptions& opt = {});

/// CSV writers; column lists are fixed.
void write_energies_csv(std::ostream& os, const RunConfig& cfg, const ScanResult& r);
void write_npe_csv(std::ostream& os, const RunConfig& cfg, const ScanResult& r);
void write_resources_csv(std::ostream& os, const RunConfig& cfg, const ScanResult& r);
void write_growth_csv(std::ostream& os, const ScanResult& r);

/// execute_scan plus energies.csv, npe.csv, resources.csv and, for ADAPT,
/// growth_trace.csv in the output directory. Returns 0 iff nothing failed.
int run_scan(const RunConfig& cfg, const ScanOptions& opt = {});

} // namespace spinvqd
