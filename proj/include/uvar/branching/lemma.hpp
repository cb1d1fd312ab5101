// Copyright 2026 The uvar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <span>
#include <utility>

#include <Eigen/Dense>

namespace uvar::branching {

inline constexpr double kHypothesisTol = 1e-10;
inline constexpr double kConclusionTol = 1e-9;

struct EigenBranchReport {
  /// M v = E v for v = e^{i theta} x + e^{i phi} y at every phase pair.
  bool hypothesis = false;
  /// M x = E x and M y = E y.
  bool conclusion = false;
  double hypothesis_residual = 0;
  double x_residual = 0;
  double y_residual = 0;

  bool implication_holds() const { return !hypothesis || conclusion; }
};

/// Residuals are max-abs entries of M v - E v. Throws DegeneratePhases when
/// fewer than two pairs are given or every pair has the same relative phase
/// phi - theta (mod 2 pi), and std::invalid_argument on shape mismatch.
EigenBranchReport eigen_branch_check(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& x,
                                     const Eigen::VectorXcd& y, std::complex<double> e,
                                     std::span<const std::pair<double, double>> phases);

}  // namespace uvar::branching
