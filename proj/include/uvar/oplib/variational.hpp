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

#include <Eigen/Dense>

namespace uvar::oplib {

struct VariationalResult {
  bool gradient_zero = false;
  bool residual_zero = false;
  double gradient_norm = 0;
  double residual_norm = 0;
};

/// Compares the stationarity of <psi|O|psi> under variations of <psi| with
/// O psi = 0. The gradient is taken by central differences over the real and
/// imaginary parts of psi with step `step`. Throws NotHermitian if O differs
/// from its adjoint by more than tol (max-abs), std::invalid_argument if psi
/// is zero or the shapes disagree.
VariationalResult variational_equivalence_check(const Eigen::MatrixXcd& o,
                                                const Eigen::VectorXcd& psi, double tol,
                                                double step = 1e-5);

}  // namespace uvar::oplib
