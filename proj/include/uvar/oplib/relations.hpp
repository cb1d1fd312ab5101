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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uvar/oplib/operators.hpp"
#include "uvar/weyl/substitution.hpp"

namespace uvar::oplib {

/// Outcome of one exact relation check. Operator-valued fields hold the weyl
/// text format; `pass` is true iff the residual is exactly zero.
struct RelationReport {
  std::string suite;
  std::string relation;
  std::string expected;
  std::string actual;
  std::string residual;
  bool pass = false;

  friend bool operator==(const RelationReport&, const RelationReport&) = default;
};

/// Builds a report from exact values, with residual = actual - expected.
RelationReport make_report(std::string suite, std::string relation, const DiffOp& expected,
                           const DiffOp& actual);

/// Sorts by relation id, the order in which suites publish their reports.
void sort_reports(std::vector<RelationReport>& reports);

bool all_pass(std::span<const RelationReport> reports);

struct LinearTerm {
  Scalar coeff;
  std::string label;
};

/// [lhs, rhs] = sum coeff * op(label).
struct CommutatorRelation {
  std::string lhs;
  std::string rhs;
  std::vector<LinearTerm> expected;

  /// Stable id such as "[J1,K2]".
  std::string id() const { return "[" + lhs + "," + rhs + "]"; }
};

using CommutatorTable = std::vector<CommutatorRelation>;

/// so(3) table: [A_x, A_y] = i A_z and cyclic, for labels prefix+{x,y,z}.
CommutatorTable angular_momentum_table(std::string_view prefix);
/// Homogeneous part: [J,J] = iεJ, [J,K] = iεK, [K,K] = -iεJ.
CommutatorTable lorentz_table();
/// Translation part: [J_i,P_j], [K_i,P_j], [J_i,P0], [K_i,P0].
CommutatorTable lorentz_translation_table();
/// [P_mu, P_nu] = 0 for mu < nu.
CommutatorTable translation_table();
/// Every relation above, for a merged lorentz + translations set.
CommutatorTable poincare_table();

/// Evaluates every relation; never throws on failure, only on labels that
/// do not resolve (UnknownLabel). Reports are sorted by relation id.
std::vector<RelationReport> verify_commutator_table(const NamedOperatorSet& set,
                                                    std::span<const CommutatorRelation> table,
                                                    std::string suite = "lie");

/// [G, target] = 0 for each generator G.
std::vector<RelationReport> verify_invariance(const DiffOp& target,
                                              const NamedOperatorSet& generators,
                                              std::string suite = "invariance");

/// Finite form: substitute(target, A_k) = target for each supplied element.
std::vector<RelationReport> verify_finite_invariance(const DiffOp& target,
                                                     std::span<const weyl::Substitution> elements,
                                                     std::string suite = "invariance");

/// adjoint(G) = G for each operator.
std::vector<RelationReport> verify_hermiticity(const NamedOperatorSet& set,
                                               std::string suite = "hermiticity");

}  // namespace uvar::oplib
