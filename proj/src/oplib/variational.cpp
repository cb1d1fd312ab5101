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

#include "uvar/oplib/variational.hpp"

#include <complex>
#include <stdexcept>

#include "uvar/errors.hpp"

namespace uvar::oplib {

VariationalResult variational_equivalence_check(const Eigen::MatrixXcd& o,
                                                const Eigen::VectorXcd& psi, double tol,
                                                double step) {
  if (o.rows() != o.cols() || o.rows() != psi.size()) {
    throw std::invalid_argument("variational check: shape mismatch");
  }
  if (psi.norm() == 0) throw std::invalid_argument("variational check: psi is zero");
  if ((o - o.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw NotHermitian("operator is not hermitian within tolerance");
  }

  auto energy = [&](const Eigen::VectorXcd& p) { return p.dot(o * p).real(); };

  // For E = <psi|O|psi>, dE/dRe + i dE/dIm = 2 O psi; the derivative with
  // respect to <psi| alone is half of that.
  Eigen::VectorXcd grad(psi.size());
  for (Eigen::Index k = 0; k < psi.size(); ++k) {
    Eigen::VectorXcd p = psi, m = psi;
    p[k] += step;
    m[k] -= step;
    double g_re = (energy(p) - energy(m)) / (2 * step);
    p = psi;
    m = psi;
    p[k] += std::complex<double>(0, step);
    m[k] -= std::complex<double>(0, step);
    double g_im = (energy(p) - energy(m)) / (2 * step);
    grad[k] = 0.5 * std::complex<double>(g_re, g_im);
  }

  VariationalResult r;
  r.gradient_norm = grad.norm();
  r.residual_norm = (o * psi).norm();
  r.gradient_zero = r.gradient_norm <= tol;
  r.residual_zero = r.residual_norm <= tol;
  return r;
}

}  // namespace uvar::oplib
