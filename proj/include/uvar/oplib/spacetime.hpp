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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uvar/oplib/operators.hpp"
#include "uvar/oplib/relations.hpp"

namespace uvar::oplib {

using weyl::Poly;

/// num / den with den != 0. Never reduced; compare with equals().
class RationalExpr {
 public:
  /// Throws std::invalid_argument if den is zero.
  RationalExpr(Poly num, Poly den);
  static RationalExpr constant(const Scalar& c);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  /// num1 * den2 == num2 * den1.
  bool equals(const RationalExpr& o) const;
  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

/// Quotient rule. `d` must be a derivation (every term of derivative order
/// exactly one), else NotADerivation.
RationalExpr derive(const DiffOp& d, const RationalExpr& f);

/// Which variable the doubly indexed u_{j2}, v_{j2}, u_{k1}, ... of the
/// coordinate formulas denote. `slot_site_swapped` reads u_{j2} as slot 2 at
/// site j, matching the u_{bi} convention of the other operators;
/// `literal` reads it as slot j at site 2 and so only makes sense for n = 2.
enum class IndexReading { slot_site_swapped, literal };

std::string_view to_string(IndexReading r);
IndexReading parse_reading(std::string_view name);

struct SpacetimeMap {
  Matrix eta;
  IndexReading reading = IndexReading::slot_site_swapped;
  std::array<RationalExpr, 4> x;
  Poly z;
};

/// Throws std::invalid_argument unless eta is square and exactly
/// antisymmetric, DegenerateEta if Z vanishes identically.
SpacetimeMap build_spacetime_map(const Matrix& eta,
                                 IndexReading reading = IndexReading::slot_site_swapped);

/// Random antisymmetric Gaussian-rational eta with Z != 0. n >= 2.
Matrix random_eta(int n, std::uint64_t seed);

/// n = 2, eta_12 = 1 = -eta_21.
Matrix default_eta();

/// All sixteen [P_mu, x_nu] against i delta_0nu, 0 and -i delta_jk, via the
/// cross-multiplied identity P(N) Z - N P(Z) = c Z^2. Sorted by relation id.
std::vector<RelationReport> verify_spacetime_relations(const NamedOperatorSet& p,
                                                       const SpacetimeMap& st,
                                                       std::string suite = "spacetime");

/// One coordinate relation with an arbitrary expression in place of x_nu.
RelationReport verify_coordinate_relation(const DiffOp& p, const RationalExpr& x,
                                          const Scalar& expected, std::string suite,
                                          std::string relation);

}  // namespace uvar::oplib
