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

// Hermitian matrices with a prescribed degenerate eigenspace.

#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

namespace uvar::testing {

struct SpectralInstance {
  Eigen::MatrixXcd m;
  Eigen::VectorXcd x, y;  // in the E eigenspace
  Eigen::VectorXcd other;  // eigenvector for a different eigenvalue
  double e = 0;
  double other_e = 0;
};

/// M = Q D Q^dagger with Q unitary (QR of a Gaussian matrix) and the first
/// `mult` eigenvalues equal to E; the rest sit at least 1 above it, so
/// mult < dim. x, y are random combinations of the first `mult` columns.
inline SpectralInstance spectral_instance(std::mt19937_64& rng, int dim, int mult) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> ev(-3.0, 3.0);
  Eigen::MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = {g(rng), g(rng)};
  }
  Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
  SpectralInstance s;
  s.e = ev(rng);
  Eigen::VectorXd d(dim);
  for (int k = 0; k < dim; ++k) d(k) = k < mult ? s.e : s.e + 1.0 + std::abs(ev(rng));
  s.m = q * d.cast<std::complex<double>>().asDiagonal() * q.adjoint();
  s.x = Eigen::VectorXcd::Zero(dim);
  s.y = Eigen::VectorXcd::Zero(dim);
  for (int k = 0; k < mult; ++k) {
    s.x += std::complex<double>(g(rng), g(rng)) * q.col(k);
    s.y += std::complex<double>(g(rng), g(rng)) * q.col(k);
  }
  s.other = q.col(dim - 1);
  s.other_e = d(dim - 1);
  return s;
}

}  // namespace uvar::testing
