// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace spinvqd {

/// Spatial-orbital electronic integrals of a molecule.
///
/// Two-electron integrals are kept in chemists' notation (pq|rs). All values
/// are in Hartree.
class MolecularIntegrals {
public:
  MolecularIntegrals() = default;
  MolecularIntegrals(int n_orb, int n_elec, int ms2);

  int n_orb() const noexcept { return n_orb_; }
  int n_elec() const noexcept { return n_elec_; }
  int ms2() const noexcept { return ms2_; }

  double e_nuc() const noexcept { return e_nuc_; }
  void set_e_nuc(double e) noexcept { e_nuc_ = e; }

  double h1(int p, int q) const { return h1_[index2(p, q)]; }
  double h2(int p, int q, int r, int s) const { return h2_[index4(p, q, r, s)]; }

  /// Sets h1[p][q] and h1[q][p].
  void set_h1(int p, int q, double v);
  /// Sets (pq|rs) and its seven real-orbital symmetry images.
  void set_h2(int p, int q, int r, int s, double v);

  /// Throws ConsistencyError if the symmetry invariants are violated.
  void validate(double tol = 1e-10) const;

private:
  std::size_t index2(int p, int q) const;
  std::size_t index4(int p, int q, int r, int s) const;

  int n_orb_ = 0;
  int n_elec_ = 0;
  int ms2_ = 0;
  double e_nuc_ = 0.0;
  std::vector<double> h1_;
  std::vector<double> h2_;
};

/// Parses FCIDUMP text.
///
/// The namelist header may use commas or whitespace as separators; keys are
/// case-insensitive and unknown keys (ORBSYM, ISYM, ...) are ignored. Repeated
/// entries must agree within 1e-10.
///
/// Throws FormatError, RangeError or ConsistencyError.
MolecularIntegrals parse_fcidump(std::istream& in);
MolecularIntegrals read_fcidump(const std::string& path);

/// Writes the unique (symmetry-reduced) nonzero entries in FCIDUMP form.
void write_fcidump(std::ostream& out, const MolecularIntegrals& m);

} // namespace spinvqd
