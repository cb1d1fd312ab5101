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

#include "uvar/oplib/relations.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace uvar::oplib {

RelationReport make_report(std::string suite, std::string relation, const DiffOp& expected,
                           const DiffOp& actual) {
  DiffOp residual = actual - expected;
  return {std::move(suite), std::move(relation), expected.to_string(), actual.to_string(),
          residual.to_string(), residual.is_zero()};
}

void sort_reports(std::vector<RelationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const RelationReport& a, const RelationReport& b) {
                     return a.relation < b.relation;
                   });
}

bool all_pass(std::span<const RelationReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

namespace {

// Levi-Civita symbol on {1, 2, 3}.
int epsilon(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  int inversions = (i > j) + (i > k) + (j > k);
  return inversions % 2 == 0 ? 1 : -1;
}

std::string lbl(char c, int i) { return std::string(1, c) + std::to_string(i); }

/// [A_i, B_j] = sign * i * eps_ijk C_k.
void add_epsilon_block(CommutatorTable& t, char a, char b, char c, int sign, bool upper_only) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = upper_only ? i + 1 : 1; j <= 3; ++j) {
      CommutatorRelation r{lbl(a, i), lbl(b, j), {}};
      for (int k = 1; k <= 3; ++k) {
        if (int e = epsilon(i, j, k)) r.expected.push_back({Scalar(0, sign * e), lbl(c, k)});
      }
      t.push_back(std::move(r));
    }
  }
}

}  // namespace

CommutatorTable angular_momentum_table(std::string_view prefix) {
  std::string p(prefix);
  const Scalar i = Scalar::i();
  return {{p + "x", p + "y", {{i, p + "z"}}},
          {p + "y", p + "z", {{i, p + "x"}}},
          {p + "z", p + "x", {{i, p + "y"}}}};
}

CommutatorTable lorentz_table() {
  CommutatorTable t;
  add_epsilon_block(t, 'J', 'J', 'J', 1, true);
  add_epsilon_block(t, 'J', 'K', 'K', 1, false);
  add_epsilon_block(t, 'K', 'K', 'J', -1, true);
  return t;
}

CommutatorTable lorentz_translation_table() {
  CommutatorTable t;
  add_epsilon_block(t, 'J', 'P', 'P', 1, false);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      CommutatorRelation r{lbl('K', i), lbl('P', j), {}};
      if (i == j) r.expected.push_back({Scalar::i(), "P0"});
      t.push_back(std::move(r));
    }
  }
  for (int i = 1; i <= 3; ++i) t.push_back({lbl('J', i), "P0", {}});
  for (int i = 1; i <= 3; ++i) t.push_back({lbl('K', i), "P0", {{Scalar::i(), lbl('P', i)}}});
  return t;
}

CommutatorTable translation_table() {
  CommutatorTable t;
  for (int mu = 0; mu <= 3; ++mu) {
    for (int nu = mu + 1; nu <= 3; ++nu) t.push_back({lbl('P', mu), lbl('P', nu), {}});
  }
  return t;
}

CommutatorTable poincare_table() {
  CommutatorTable t = lorentz_table();
  for (auto* part : {&lorentz_translation_table, &translation_table}) {
    CommutatorTable p = (*part)();
    t.insert(t.end(), p.begin(), p.end());
  }
  return t;
}

std::vector<RelationReport> verify_commutator_table(const NamedOperatorSet& set,
                                                    std::span<const CommutatorRelation> table,
                                                    std::string suite) {
  std::vector<RelationReport> out;
  out.reserve(table.size());
  for (const auto& rel : table) {
    DiffOp actual = weyl::commutator(set.at(rel.lhs), set.at(rel.rhs));
    DiffOp expected;
    for (const auto& [c, label] : rel.expected) expected += c * set.at(label);
    out.push_back(make_report(suite, rel.id(), expected, actual));
  }
  sort_reports(out);
  return out;
}

std::vector<RelationReport> verify_invariance(const DiffOp& target,
                                              const NamedOperatorSet& generators,
                                              std::string suite) {
  std::vector<RelationReport> out;
  for (const auto& [label, g] : generators.ops) {
    out.push_back(make_report(suite, "[" + label + ",target]", DiffOp{},
                              weyl::commutator(g, target)));
  }
  sort_reports(out);
  return out;
}

std::vector<RelationReport> verify_finite_invariance(const DiffOp& target,
                                                     std::span<const weyl::Substitution> elements,
                                                     std::string suite) {
  std::vector<RelationReport> out;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    char id[32];
    std::snprintf(id, sizeof id, "U(A%03zu)target", k);
    out.push_back(make_report(suite, id, target, weyl::substitute(target, elements[k])));
  }
  return out;
}

std::vector<RelationReport> verify_hermiticity(const NamedOperatorSet& set, std::string suite) {
  std::vector<RelationReport> out;
  for (const auto& [label, g] : set.ops) {
    out.push_back(make_report(suite, label + "^dagger=" + label, g, weyl::adjoint(g)));
  }
  sort_reports(out);
  return out;
}

}  // namespace uvar::oplib
