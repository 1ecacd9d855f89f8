// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinvqd/oracle.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <map>
#include <unordered_map>

#include "spinvqd/errors.hpp"
#include "spinvqd/fermion.hpp"

namespace spinvqd {

namespace {

constexpr double kLevelTol = 1e-8;
constexpr double kSpinTol = 1e-6;

Eigen::MatrixXcd sector_matrix(const QubitOperator& op, const std::vector<std::uint64_t>& basis,
                               const std::unordered_map<std::uint64_t, Eigen::Index>& index) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col)
    for (const auto& [p, c] : op.terms()) {
      const auto [row_state, phase] = apply_to_basis(p, basis[col]);
      const auto it = index.find(row_state);
      if (it != index.end())
        mat(it->second, col) += c * phase;
    }
  return mat;
}

} // namespace

double spin_from_s2(double s2) { return 0.5 * (std::sqrt(1.0 + 4.0 * std::max(s2, 0.0)) - 1.0); }

std::vector<SpectrumEntry> operator_spectrum(const QubitOperator& h, int n_qubits, int n_lowest,
                                             const SectorFilter& filter,
                                             const QubitOperator* s2_op) {
  if (n_qubits > 14)
    throw ResourceError("exact diagonalization is limited to 14 qubits");
  if (n_qubits < h.min_qubits())
    throw DomainError("register smaller than the operator support");
  if (!h.is_hermitian())
    throw ContractViolation("Hamiltonian is not Hermitian");

  std::vector<std::uint64_t> basis;
  const std::uint64_t full = std::uint64_t{1} << n_qubits;
  for (std::uint64_t i = 0; i < full; ++i)
    if (!filter.n_elec || std::popcount(i) == *filter.n_elec)
      basis.push_back(i);
  if (basis.size() > static_cast<std::size_t>(kMaxOracleDimension))
    throw ResourceError("sector dimension " + std::to_string(basis.size()) +
                        " exceeds the dense eigensolver limit");
  if (basis.empty())
    return {};
  std::unordered_map<std::uint64_t, Eigen::Index> index;
  for (std::size_t k = 0; k < basis.size(); ++k)
    index.emplace(basis[k], static_cast<Eigen::Index>(k));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sector_matrix(h, basis, index));
  if (es.info() != Eigen::Success)
    throw DomainError("eigensolver failed");
  const Eigen::VectorXd& evals = es.eigenvalues();
  const Eigen::MatrixXcd& evecs = es.eigenvectors();

  Eigen::MatrixXcd s2mat;
  Eigen::VectorXd nvec(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    nvec[static_cast<Eigen::Index>(k)] = std::popcount(basis[k]);
  if (s2_op)
    s2mat = sector_matrix(*s2_op, basis, index);

  std::vector<SpectrumEntry> out;
  const Eigen::Index dim = evals.size();
  for (Eigen::Index start = 0; start < dim;) {
    Eigen::Index end = start + 1;
    while (end < dim && evals[end] - evals[start] <= kLevelTol)
      ++end;
    const Eigen::MatrixXcd block = evecs.middleCols(start, end - start);
    const double energy = evals.segment(start, end - start).mean();
    const int particles = static_cast<int>(
        std::lround((block.cwiseAbs2().transpose() * nvec).sum() / static_cast<double>(end - start)));

    if (!s2_op) {
      out.push_back({energy, 0.0, particles, static_cast<int>(end - start)});
    } else {
      const Eigen::MatrixXcd proj = block.adjoint() * s2mat * block;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ss(proj, Eigen::EigenvaluesOnly);
      const Eigen::VectorXd& sv = ss.eigenvalues();
      for (Eigen::Index a = 0; a < sv.size();) {
        Eigen::Index b = a + 1;
        while (b < sv.size() && sv[b] - sv[a] <= kSpinTol)
          ++b;
        const double s2 = sv.segment(a, b - a).mean();
        const double mult = 2.0 * spin_from_s2(s2) + 1.0;
        const int deg = std::max(1, static_cast<int>(std::lround(static_cast<double>(b - a) / mult)));
        out.push_back({energy, std::abs(s2) < kSpinTol ? 0.0 : s2, particles, deg});
        a = b;
      }
    }
    start = end;
  }

  std::vector<SpectrumEntry> kept;
  for (const auto& e : out) {
    if (filter.s2 && std::abs(e.s2 - *filter.s2) > kSpinTol)
      continue;
    kept.push_back(e);
    if (n_lowest > 0 && static_cast<int>(kept.size()) == n_lowest)
      break;
  }
  return kept;
}

std::vector<SpectrumEntry> fci_spectrum(const MolecularIntegrals& m, int n_lowest,
                                        SectorFilter filter) {
  const int n_qubits = 2 * m.n_orb();
  if (n_qubits > 14)
    throw ResourceError("exact diagonalization is limited to 7 spatial orbitals");
  if (!filter.n_elec)
    filter.n_elec = m.n_elec();
  const QubitOperator h = build_hamiltonian(m);
  const QubitOperator s2 = build_s2(m.n_orb());
  return operator_spectrum(h, n_qubits, n_lowest, filter, &s2);
}

std::vector<std::string> level_labels(const std::vector<SpectrumEntry>& levels) {
  std::map<long, int> seen;
  std::vector<std::string> out;
  for (const auto& e : levels) {
    const long twice_s = std::lround(2.0 * spin_from_s2(e.s2));
    char letter = 'X';
    int first = 1;
    switch (twice_s) {
    case 0:
      letter = 'S';
      first = 0;
      break;
    case 1:
      letter = 'D';
      break;
    case 2:
      letter = 'T';
      break;
    case 4:
      letter = 'Q';
      break;
    default:
      break;
    }
    auto [it, fresh] = seen.try_emplace(twice_s, first);
    out.push_back(letter + std::to_string(it->second));
    ++it->second;
  }
  return out;
}

} // namespace spinvqd
