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

// Polynomial representations of SU(2) on holomorphic polynomials in u, v.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "uvar/oplib/operators.hpp"
#include "uvar/weyl/diffop.hpp"
#include "uvar/weyl/linalg.hpp"

namespace uvar::repr {

using weyl::DiffOp;
using weyl::Matrix;
using weyl::Monomial;
using weyl::Poly;
using weyl::Scalar;

/// Span of homogeneous monomials u^(d-k) v^k, k = 0..d, for one or more
/// degrees d, listed degree by degree.
class RepSpace {
 public:
  /// Single irreducible space of degree d >= 0.
  static RepSpace of_degree(int d);
  /// Direct sum of the given degrees, in order. Degrees must be distinct.
  static RepSpace span(std::span<const int> degrees);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  /// <m_k | m_k> for each basis monomial.
  const std::vector<Scalar>& norms2() const { return norms2_; }
  /// Degree of the k-th basis element.
  int degree_of(std::size_t k) const { return basis_degree_[k]; }
  bool irreducible() const { return degrees_.size() == 1; }

  /// Index of `m` in the basis, or -1.
  int index_of(const Monomial& m) const;

 private:
  std::vector<int> degrees_;
  std::vector<Monomial> basis_;
  std::vector<Scalar> norms2_;
  std::vector<int> basis_degree_;
};

/// <u^a v^b | u^a v^b> = 2 / ((a+1)(b+1)).
Scalar monomial_norm2(int a, int b);

/// Closed-form invariant product, conjugate-linear in f. Throws
/// NonHolomorphic if either argument contains anything but u and v.
Scalar inner_product(const Poly& f, const Poly& g);

enum class Exactness { exact, numeric };

struct RepMatrix {
  Exactness exactness = Exactness::exact;
  /// Set when exact.
  Matrix exact;
  /// Always set; the float image of `exact` for exact matrices.
  Eigen::MatrixXcd numeric;

  std::size_t dim() const { return static_cast<std::size_t>(numeric.rows()); }
  bool approx(const Eigen::MatrixXcd& other, double tol) const;
};

/// Column i holds op applied to basis element i. In the monomial basis the
/// entries are the exact expansion coefficients; in the normalized basis
/// (unit vectors m_k / |m_k|) they are floats. Throws NotInvariantSubspace
/// if the image leaves the span.
RepMatrix matrix_rep(const DiffOp& op, const RepSpace& space, bool normalized = false);

/// Matrix of U(A) f(w) = f(A^T w) on the monomial basis, exact. This is the
/// order that makes R(B) R(A) = R(BA). Throws BadDeterminant unless det A = 1.
/// `count` exact SU(2) matrices from rational points on the 3-sphere,
/// reproducible from `seed`.
std::vector<Matrix> random_su2(std::size_t count, std::uint64_t seed);

RepMatrix rep_of_group_element(const Matrix& a, const RepSpace& space);

/// Matrix of the literal substitution f(w) -> f(A w), which composes in
/// reverse: R(A) R(B) = R(BA).
RepMatrix rep_of_substitution(const Matrix& a, const RepSpace& space);

struct CasimirBlock {
  Scalar eigenvalue;
  std::vector<int> degrees;
  std::size_t dim = 0;
};

struct CasimirResult {
  DiffOp casimir;
  Matrix matrix;
  /// One block per distinct eigenvalue, ordered by first appearance.
  std::vector<CasimirBlock> blocks;
  /// True iff the matrix is lambda * I on every degree with lambda = s(s+1),
  /// s = d/2, and has no entries coupling different degrees.
  bool matches_spin = false;
};

/// C = sum G^2 over every operator in `gens`, restricted to the space.
CasimirResult casimir_spectrum(const oplib::NamedOperatorSet& gens, const RepSpace& space);

/// Exact S_z eigenvalues on the monomial basis, in basis order. Throws
/// std::logic_error if S_z is not diagonal there.
std::vector<Scalar> spin_spectrum(const RepSpace& space);

}  // namespace uvar::repr
