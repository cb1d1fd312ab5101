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

#include "uvar/branching/lemma.hpp"

#include <algorithm>
#include <stdexcept>

#include "uvar/errors.hpp"

namespace uvar::branching {

namespace {

using C = std::complex<double>;

// Relative phases closer than this on the unit circle count as equal.
constexpr double kPhaseSeparation = 1e-6;

double residual(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& v, C e) {
  Eigen::VectorXcd r = m * v - e * v;
  return r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace

EigenBranchReport eigen_branch_check(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& x,
                                     const Eigen::VectorXcd& y, C e,
                                     std::span<const std::pair<double, double>> phases) {
  if (m.rows() != m.cols() || x.size() != m.rows() || y.size() != m.rows()) {
    throw std::invalid_argument("eigen_branch_check: shape mismatch");
  }
  if (phases.size() < 2) throw DegeneratePhases("need at least two phase pairs");
  const C first = std::polar(1.0, phases[0].second - phases[0].first);
  bool distinct = false;
  for (const auto& [t, p] : phases) {
    distinct = distinct || std::abs(std::polar(1.0, p - t) - first) > kPhaseSeparation;
  }
  if (!distinct) throw DegeneratePhases("all phase pairs share one relative phase");

  EigenBranchReport r;
  for (const auto& [t, p] : phases) {
    Eigen::VectorXcd v = std::polar(1.0, t) * x + std::polar(1.0, p) * y;
    r.hypothesis_residual = std::max(r.hypothesis_residual, residual(m, v, e));
  }
  r.x_residual = residual(m, x, e);
  r.y_residual = residual(m, y, e);
  r.hypothesis = r.hypothesis_residual <= kHypothesisTol;
  r.conclusion = r.x_residual <= kConclusionTol && r.y_residual <= kConclusionTol;
  return r;
}

}  // namespace uvar::branching
