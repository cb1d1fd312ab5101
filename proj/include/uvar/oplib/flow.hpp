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
#include <optional>
#include <span>
#include <vector>

#include "uvar/oplib/operators.hpp"
#include "uvar/oplib/relations.hpp"

namespace uvar::oplib {

using weyl::Poly;

/// exp(d) f as a power series, cut off once a term vanishes. Throws
/// NonTerminatingFlow if the term of order `max_order` is still nonzero.
/// `order` receives the highest order with a nonzero term.
Poly exp_apply(const DiffOp& d, const Poly& f, int max_order = 3, int* order = nullptr);

struct FlowReport {
  /// One report per (site, variable) in u1, v1, u2, v2 order.
  std::vector<RelationReport> reports;
  /// Highest series order that contributed, over all variables.
  int series_order = 0;
};

/// exp(i sum_mu x_mu P_mu) applied to u1, v1, u2, v2 at every site, compared
/// with the affine translation formulas.
FlowReport translation_flow_check(const NamedOperatorSet& p, const std::array<Scalar, 4>& x,
                                  std::string suite = "translation-flow");

struct ScalingGenerator {
  std::vector<Scalar> coefficients;
  DiffOp g;
};

/// Exact search for G = sum c_k candidates[k] with [G, P_mu] = i lambda P_mu
/// for all mu and [G, o1] = 0. For lambda = 0 the first nullspace vector is
/// returned; an empty candidate list or an infeasible system gives nullopt.
std::optional<ScalingGenerator> search_scaling_generator(const NamedOperatorSet& p,
                                                         const DiffOp& o1,
                                                         std::span<const DiffOp> candidates,
                                                         const Scalar& lambda);

/// x d/dx for every slot/site variable and its conjugate.
std::vector<DiffOp> number_operator_candidates(int n);

}  // namespace uvar::oplib
