// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

// Shared helpers for the unit tests: fixture paths, random operators and
// states, and dense-matrix oracles.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <fstream>
#include <random>
#include <string>

#include "spinvqd/fermion.hpp"
#include "spinvqd/integrals.hpp"
#include "spinvqd/pauli.hpp"
#include "spinvqd/simulator.hpp"

namespace spinvqd::testing {

inline std::string data_path(const std::string& name) {
  return std::string(SPINVQD_DATA_DIR) + "/" + name;
}

inline MolecularIntegrals load(const std::string& name) { return read_fcidump(data_path(name)); }

/// Value stored under `key` in a fixture's .meta sidecar.
inline double meta_value(const std::string& name, const std::string& key) {
  std::ifstream in(data_path(name));
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos || line[0] == '#')
      continue;
    std::string k = line.substr(0, eq);
    while (!k.empty() && k.back() == ' ')
      k.pop_back();
    if (k == key)
      return std::stod(line.substr(eq + 1));
  }
  throw std::runtime_error("no key " + key + " in " + name);
}

inline PauliString random_string(int n_qubits, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> axis(0, 3);
  PauliString p;
  for (int q = 0; q < n_qubits; ++q) {
    const int a = axis(rng);
    if (a > 0)
      p.set(q, static_cast<Axis>(a - 1));
  }
  return p;
}

inline QubitOperator random_operator(int n_qubits, int n_terms, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  QubitOperator op;
  for (int t = 0; t < n_terms; ++t)
    op.add_term(random_string(n_qubits, rng), cplx(nd(rng), nd(rng)));
  return op;
}

inline QubitOperator random_hermitian(int n_qubits, int n_terms, std::mt19937_64& rng) {
  const QubitOperator a = random_operator(n_qubits, n_terms, rng);
  return compress((a + a.adjoint()) * cplx(0.5));
}

inline Statevector random_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Statevector s(n_qubits);
  for (auto& a : s.amps())
    a = cplx(nd(rng), nd(rng));
  s.normalize();
  return s;
}

inline Eigen::VectorXcd to_eigen(const Statevector& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i)
    v[static_cast<Eigen::Index>(i)] = s[i];
  return v;
}

inline double max_abs_diff(const Statevector& a, const Eigen::VectorXcd& b) {
  return (to_eigen(a) - b).cwiseAbs().maxCoeff();
}

inline Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) { return m.exp(); }

inline double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a * b - b * a).cwiseAbs().maxCoeff();
}

/// Central finite difference of f along coordinate k.
template <class F> double central_difference(F&& f, std::vector<double> x, std::size_t k, double h) {
  x[k] += h;
  const double fp = f(x);
  x[k] -= 2 * h;
  const double fm = f(x);
  return (fp - fm) / (2 * h);
}

} // namespace spinvqd::testing
