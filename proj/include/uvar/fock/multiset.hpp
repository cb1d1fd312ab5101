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

#include <vector>

#include "uvar/oplib/relations.hpp"
#include "uvar/weyl/diffop.hpp"

namespace uvar::fock {

using weyl::DiffOp;

/// sum_m O(U_m) + sum_{m<n} V(U_m, U_n) over N variable sets. Templates are
/// written with Variable::set = 1 for the first argument and 2 for the
/// second; instantiation renames those sets.
class MultiSetOperator {
 public:
  /// Throws AsymmetricInteraction if V(U_1, U_2) != V(U_2, U_1), and
  /// std::invalid_argument for N outside 1..4 or templates touching other
  /// sets.
  MultiSetOperator(int sets, DiffOp one_body, DiffOp two_body);

  int sets() const { return sets_; }
  const DiffOp& one_body() const { return one_body_; }
  const DiffOp& two_body() const { return two_body_; }
  DiffOp assembled() const;

  /// Template with sets a and b swapped.
  static DiffOp exchange(const DiffOp& op, int a, int b);

 private:
  int sets_;
  DiffOp one_body_;
  DiffOp two_body_;
};

/// One report per transposition (m n): exchange(assembled, m, n) == assembled.
std::vector<oplib::RelationReport> verify_permutation_invariance(const MultiSetOperator& op);

/// Variable-set instantiation of a template: set 1 -> m, set 2 -> n.
DiffOp instantiate(const DiffOp& tmpl, int m, int n = 0);

}  // namespace uvar::fock
