// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinvqd/pools.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

#include "spinvqd/errors.hpp"

namespace spinvqd {

namespace {

std::set<PauliString> distinct_strings(std::span<const ExcitationGenerator* const> layer) {
  std::set<PauliString> out;
  for (const auto* g : layer)
    for (const auto& [p, c] : g->qubit().terms())
      out.insert(p);
  return out;
}

} // namespace

std::string flavor_name(PoolFlavor f) { return f == PoolFlavor::sUCCGSD ? "sUCCGSD" : "sUpCCGSD"; }

PoolFlavor parse_flavor(const std::string& s) {
  std::string t;
  for (char c : s)
    t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "succgsd" || t == "uccgsd")
    return PoolFlavor::sUCCGSD;
  if (t == "supccgsd" || t == "upccgsd")
    return PoolFlavor::sUpCCGSD;
  throw DomainError("unknown pool flavor '" + s + "'");
}

std::string OperatorPool::listing() const {
  std::ostringstream os;
  os << "# " << flavor_name(flavor) << " n_orb=" << n_orb << " size=" << generators.size() << '\n';
  for (std::size_t i = 0; i < generators.size(); ++i)
    os << i << ' ' << generators[i].label() << ' ' << generators[i].qubit().size() << '\n';
  return os.str();
}

OperatorPool build_pool(PoolFlavor flavor, int n_orb) {
  if (n_orb < 2)
    throw DomainError("operator pools need at least 2 spatial orbitals");
  OperatorPool pool{flavor, n_orb, {}};

  for (int p = 0; p < n_orb; ++p)
    for (int r = p + 1; r < n_orb; ++r)
      pool.generators.push_back(make_generator(ExcitationKind::GeneralizedSingle, {p, r}, n_orb));

  struct Double {
    std::array<int, 4> key;
    ExcitationKind kind;
  };
  std::vector<Double> doubles;
  for (int p = 0; p < n_orb; ++p)
    for (int r = p + 1; r < n_orb; ++r)
      doubles.push_back({{p, p, r, r}, ExcitationKind::PairedDouble});
  if (flavor == PoolFlavor::sUCCGSD) {
    std::vector<std::array<int, 2>> pairs;
    for (int p = 0; p < n_orb; ++p)
      for (int q = p + 1; q < n_orb; ++q)
        pairs.push_back({p, q});
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = a + 1; b < pairs.size(); ++b)
        doubles.push_back({{pairs[a][0], pairs[a][1], pairs[b][0], pairs[b][1]},
                           ExcitationKind::GeneralizedDouble});
  }
  std::sort(doubles.begin(), doubles.end(),
            [](const Double& a, const Double& b) { return a.key < b.key; });
  for (const auto& d : doubles) {
    if (d.kind == ExcitationKind::PairedDouble)
      pool.generators.push_back(make_generator(d.kind, {d.key[0], d.key[2]}, n_orb));
    else
      pool.generators.push_back(
          make_generator(d.kind, {d.key[0], d.key[1], d.key[2], d.key[3]}, n_orb));
  }
  return pool;
}

std::size_t gadget_count(std::span<const ExcitationGenerator* const> layer) {
  return distinct_strings(layer).size();
}

std::size_t naive_cx_count(std::span<const ExcitationGenerator* const> layer) {
  std::size_t cx = 0;
  for (const auto& p : distinct_strings(layer))
    cx += 2 * static_cast<std::size_t>(std::max(p.weight() - 1, 0));
  return cx;
}

} // namespace spinvqd
