// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spinvqd/fermion.hpp"

namespace spinvqd {

enum class PoolFlavor { sUCCGSD, sUpCCGSD };

std::string flavor_name(PoolFlavor f);
/// Accepts "sUCCGSD"/"sUpCCGSD" (case-insensitive); throws DomainError otherwise.
PoolFlavor parse_flavor(const std::string& s);

struct OperatorPool {
  PoolFlavor flavor = PoolFlavor::sUpCCGSD;
  int n_orb = 0;
  std::vector<ExcitationGenerator> generators;

  std::size_t size() const noexcept { return generators.size(); }
  /// Header line, then one line per generator: "<index> <label> <n_pauli>".
  std::string listing() const;
};

/// Canonical enumeration. Singles (p < r) come first, then doubles ordered by
/// the index tuple (p, q, r, s); a paired double p -> r sorts as (p, p, r, r).
///
/// sUpCCGSD: singles + paired doubles.
/// sUCCGSD:  singles + paired doubles + generalized doubles with p < q, r < s
///           and (p, q) < (r, s). Mixed coincidences (p == q, r < s) are not
///           enumerated; at n_orb = 6 this gives 15 + 15 + 105 = 135.
///
/// Throws DomainError for n_orb < 2.
OperatorPool build_pool(PoolFlavor flavor, int n_orb);

/// Distinct Pauli strings across the generators' qubit forms; each is one
/// exponentiated-Pauli circuit block when the set is emitted as one layer.
std::size_t gadget_count(std::span<const ExcitationGenerator* const> layer);

/// Sum over distinct strings of 2 (weight - 1) CX gates (uncompiled ladder).
std::size_t naive_cx_count(std::span<const ExcitationGenerator* const> layer);

} // namespace spinvqd
