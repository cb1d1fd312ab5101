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

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "uvar/weyl/diffop.hpp"
#include "uvar/weyl/linalg.hpp"

namespace uvar::weyl {

/// Linear change of variables x_i -> sum_j M_ij x_j. Unmapped variables are
/// left alone.
///
/// On a polynomial this is f -> f(Mx). On an operator it produces the O' with
/// (O f)(Mx) = O'(f(Mx)): multiplications by x_i become (Mx)_i and d/dx_i
/// becomes sum_k (M^-1)_ki d/dx_k, which requires M to be invertible on the
/// variables it touches.
class Substitution {
 public:
  using LinComb = std::vector<std::pair<Variable, Scalar>>;

  Substitution() = default;

  Substitution& set(const Variable& v, LinComb image);
  const std::map<Variable, LinComb>& images() const { return images_; }
  bool empty() const { return images_.empty(); }

  /// Image of v as a polynomial (v itself when unmapped).
  Poly image(const Variable& v) const;

  /// Adds conj(v) -> conj(image) for every mapped complex variable whose
  /// conjugate is not mapped explicitly.
  Substitution with_conjugates() const;

  /// vars[i] -> sum_j a(i, j) vars[j], optionally closed under conjugation.
  static Substitution from_matrix(const Matrix& a, std::span<const Variable> vars,
                                  bool conjugates = true);

  /// The substitution equivalent to applying *this and then `next`.
  Substitution then(const Substitution& next) const;

 private:
  std::map<Variable, LinComb> images_;
};

Poly substitute(const Poly& f, const Substitution& s);
/// Throws SingularSubstitution when the map is not invertible on the touched
/// variables.
DiffOp substitute(const DiffOp& op, const Substitution& s);

}  // namespace uvar::weyl
