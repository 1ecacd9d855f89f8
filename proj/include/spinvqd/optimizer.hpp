// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace spinvqd {

struct OptimizerConfig {
  double pgtol = 1e-5;       ///< stop when max |projected gradient| <= pgtol
  int max_iter = 30;
  int memory = 10;
  double lower = -2.0 * std::numbers::pi;
  double upper = 2.0 * std::numbers::pi;
  /// Relative reduction stop: (f_k - f_{k+1}) / max(|f_k|, |f_{k+1}|, 1) <= ftol.
  /// Zero disables it.
  double ftol = 2.220446049250313e-09;
  int max_linesearch = 20;

  /// Throws DomainError when the settings are inconsistent.
  void validate() const;
};

enum class OptimizerStatus { Converged, FunctionTolerance, MaxIterations, LineSearchFailed };

std::string status_name(OptimizerStatus s);

struct OptimizeResult {
  std::vector<double> x;
  double value = 0.0;
  std::vector<double> gradient;
  int iterations = 0;
  int evaluations = 0;
  OptimizerStatus status = OptimizerStatus::MaxIterations;
  /// Max-norm of the projected gradient at x.
  double projected_gradient = 0.0;

  bool converged() const noexcept {
    return status == OptimizerStatus::Converged || status == OptimizerStatus::FunctionTolerance;
  }
};

/// f(x) with the gradient written into grad.
using Objective = std::function<double(std::span<const double> x, std::span<double> grad)>;

/// Box-constrained limited-memory BFGS (generalized Cauchy point, subspace
/// minimization, strong-Wolfe line search). Returns the best point seen.
/// Throws DomainError if x0 lies outside the bounds.
OptimizeResult minimize(const Objective& f, std::vector<double> x0, const OptimizerConfig& cfg);

} // namespace spinvqd
