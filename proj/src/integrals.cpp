// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinvqd/integrals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "spinvqd/errors.hpp"

namespace spinvqd {

MolecularIntegrals::MolecularIntegrals(int n_orb, int n_elec, int ms2)
    : n_orb_(n_orb), n_elec_(n_elec), ms2_(ms2) {
  if (n_orb < 1)
    throw RangeError("MolecularIntegrals: NORB must be positive");
  if (n_elec < 0 || n_elec > 2 * n_orb)
    throw RangeError("MolecularIntegrals: NELEC must lie in [0, 2*NORB]");
  const auto n = static_cast<std::size_t>(n_orb);
  h1_.assign(n * n, 0.0);
  h2_.assign(n * n * n * n, 0.0);
}

std::size_t MolecularIntegrals::index2(int p, int q) const {
  return static_cast<std::size_t>(p) * n_orb_ + q;
}

std::size_t MolecularIntegrals::index4(int p, int q, int r, int s) const {
  const auto n = static_cast<std::size_t>(n_orb_);
  return ((p * n + q) * n + r) * n + s;
}

void MolecularIntegrals::set_h1(int p, int q, double v) {
  h1_[index2(p, q)] = v;
  h1_[index2(q, p)] = v;
}

void MolecularIntegrals::set_h2(int p, int q, int r, int s, double v) {
  for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
    for (auto [c, d] : {std::pair{r, s}, std::pair{s, r}}) {
      h2_[index4(a, b, c, d)] = v;
      h2_[index4(c, d, a, b)] = v;
    }
  }
}

void MolecularIntegrals::validate(double tol) const {
  const int n = n_orb_;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (std::abs(h1(p, q) - h1(q, p)) > tol)
        throw ConsistencyError("h1 is not symmetric");
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double v = h2(p, q, r, s);
          if (std::abs(v - h2(q, p, r, s)) > tol ||
              std::abs(v - h2(p, q, s, r)) > tol ||
              std::abs(v - h2(r, s, p, q)) > tol)
            throw ConsistencyError("h2 violates 8-fold permutational symmetry");
        }
}

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size())
      throw FormatError("FCIDUMP: bad integer for " + key + ": '" + value + "'");
    return v;
  } catch (const std::logic_error&) {
    throw FormatError("FCIDUMP: bad integer for " + key + ": '" + value + "'");
  }
}

// Splits the namelist block into KEY -> list of raw values.
std::map<std::string, std::vector<std::string>> parse_namelist(const std::string& block) {
  std::string cleaned = block;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  // Allow "KEY = VALUE" by gluing the '=' onto the key token.
  std::string spaced;
  for (char c : cleaned) {
    if (c == '=')
      spaced += " = ";
    else
      spaced += c;
  }
  std::istringstream tokens(spaced);
  std::vector<std::string> toks;
  for (std::string t; tokens >> t;)
    toks.push_back(t);

  std::map<std::string, std::vector<std::string>> out;
  std::string current;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i + 1 < toks.size() && toks[i + 1] == "=") {
      current = upper(toks[i]);
      out[current];
      ++i;
    } else if (toks[i] == "=") {
      throw FormatError("FCIDUMP: dangling '=' in header");
    } else {
      if (current.empty())
        throw FormatError("FCIDUMP: value '" + toks[i] + "' before any key");
      out[current].push_back(toks[i]);
    }
  }
  return out;
}

using Key4 = std::tuple<int, int, int, int>;

Key4 canonical4(int p, int q, int r, int s) {
  if (p < q) std::swap(p, q);
  if (r < s) std::swap(r, s);
  if (std::pair{p, q} < std::pair{r, s}) {
    std::swap(p, r);
    std::swap(q, s);
  }
  return {p, q, r, s};
}

} // namespace

MolecularIntegrals parse_fcidump(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  const std::string up = upper(text);
  const auto first = up.find_first_not_of(" \t\r\n");
  if (first == std::string::npos ||
      (up.compare(first, 4, "&FCI") != 0 && up.compare(first, 4, "$FCI") != 0))
    throw FormatError("FCIDUMP: missing '&FCI' namelist header");

  // The namelist ends at "&END", "$END" or a lone '/'.
  std::size_t end = std::string::npos, body = std::string::npos;
  for (const std::string term : {"&END", "$END"}) {
    const auto pos = up.find(term, first);
    if (pos != std::string::npos && pos < end) {
      end = pos;
      body = pos + term.size();
    }
  }
  if (end == std::string::npos) {
    const auto slash = up.find('/', first);
    if (slash != std::string::npos) {
      end = slash;
      body = slash + 1;
    }
  }
  if (end == std::string::npos)
    throw FormatError("FCIDUMP: unterminated namelist header");

  const auto header = parse_namelist(text.substr(first + 4, end - first - 4));
  auto scalar = [&](const std::string& key, std::optional<int> fallback) {
    const auto it = header.find(key);
    if (it == header.end()) {
      if (fallback)
        return *fallback;
      throw FormatError("FCIDUMP: header lacks " + key);
    }
    if (it->second.size() != 1)
      throw FormatError("FCIDUMP: " + key + " must have exactly one value");
    return parse_int(key, it->second.front());
  };
  const int norb = scalar("NORB", std::nullopt);
  const int nelec = scalar("NELEC", std::nullopt);
  const int ms2 = scalar("MS2", 0);

  MolecularIntegrals m(norb, nelec, ms2);

  std::map<Key4, double> seen2;
  std::map<std::pair<int, int>, double> seen1;
  std::optional<double> seen_nuc;
  auto check = [](auto& seen, const auto& key, double v, const char* what) {
    const auto [it, inserted] = seen.emplace(key, v);
    if (!inserted) {
      if (std::abs(it->second - v) > 1e-10)
        throw ConsistencyError(std::string("FCIDUMP: conflicting duplicate ") + what + " entry");
      it->second = v;
    }
  };

  std::istringstream lines(text.substr(body));
  std::size_t lineno = 0;
  for (std::string line; std::getline(lines, line);) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    std::istringstream ls(line);
    double v;
    long long idx[4];
    if (!(ls >> v >> idx[0] >> idx[1] >> idx[2] >> idx[3]))
      throw FormatError("FCIDUMP: malformed body line " + std::to_string(lineno) + ": '" +
                        line + "'");
    for (long long x : idx)
      if (x < 0 || x > norb)
        throw RangeError("FCIDUMP: orbital index " + std::to_string(x) + " outside [0, " +
                         std::to_string(norb) + "] on body line " + std::to_string(lineno));
    const int i = static_cast<int>(idx[0]) - 1, j = static_cast<int>(idx[1]) - 1;
    const int k = static_cast<int>(idx[2]) - 1, l = static_cast<int>(idx[3]) - 1;

    if (i >= 0 && j >= 0 && k >= 0 && l >= 0) {
      check(seen2, canonical4(i, j, k, l), v, "two-electron");
      m.set_h2(i, j, k, l, v);
    } else if (i >= 0 && j >= 0 && k < 0 && l < 0) {
      check(seen1, std::pair{std::max(i, j), std::min(i, j)}, v, "one-electron");
      m.set_h1(i, j, v);
    } else if (i < 0 && j < 0 && k < 0 && l < 0) {
      if (seen_nuc && std::abs(*seen_nuc - v) > 1e-10)
        throw ConsistencyError("FCIDUMP: conflicting duplicate core-energy entry");
      seen_nuc = v;
      m.set_e_nuc(v);
    } else if (i >= 0 && j < 0 && k < 0 && l < 0) {
      // Orbital-energy lines "e i 0 0 0" carry no Hamiltonian information.
      continue;
    } else {
      throw FormatError("FCIDUMP: unsupported index pattern on body line " +
                        std::to_string(lineno));
    }
  }
  m.validate();
  return m;
}

MolecularIntegrals read_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open FCIDUMP file '" + path + "'");
  return parse_fcidump(in);
}

void write_fcidump(std::ostream& out, const MolecularIntegrals& m) {
  const int n = m.n_orb();
  out << " &FCI NORB=" << n << ",NELEC=" << m.n_elec() << ",MS2=" << m.ms2() << ",\n &END\n";
  out << std::scientific << std::setprecision(17);
  auto line = [&](double v, int i, int j, int k, int l) {
    out << ' ' << v << ' ' << i << ' ' << j << ' ' << k << ' ' << l << '\n';
  };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (std::pair{p, q} < std::pair{r, s})
            continue;
          const double v = m.h2(p, q, r, s);
          if (v != 0.0)
            line(v, p + 1, q + 1, r + 1, s + 1);
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      if (m.h1(p, q) != 0.0)
        line(m.h1(p, q), p + 1, q + 1, 0, 0);
  line(m.e_nuc(), 0, 0, 0, 0);
}

} // namespace spinvqd
