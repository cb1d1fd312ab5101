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

#include "uvar/fock/multiset.hpp"

#include <stdexcept>

#include "uvar/errors.hpp"

namespace uvar::fock {

using weyl::Variable;

namespace {

void require_sets(const DiffOp& op, int max_set, const char* what) {
  auto check = [&](const weyl::Monomial& m) {
    for (const auto& [v, k] : m.factors()) {
      if (v.set < 1 || v.set > max_set) {
        throw std::invalid_argument(std::string(what) + " template uses variable set " +
                                    std::to_string(v.set));
      }
    }
  };
  for (const auto& [key, c] : op.terms()) {
    check(key.mults);
    check(key.derivs);
  }
}

}  // namespace

DiffOp instantiate(const DiffOp& tmpl, int m, int n) {
  return tmpl.rename([&](const Variable& v) {
    Variable w = v;
    if (v.set == 1) w.set = static_cast<decltype(w.set)>(m);
    if (v.set == 2) w.set = static_cast<decltype(w.set)>(n);
    return w;
  });
}

DiffOp MultiSetOperator::exchange(const DiffOp& op, int a, int b) {
  return op.rename([&](const Variable& v) {
    Variable w = v;
    if (v.set == a) w.set = static_cast<decltype(w.set)>(b);
    if (v.set == b) w.set = static_cast<decltype(w.set)>(a);
    return w;
  });
}

MultiSetOperator::MultiSetOperator(int sets, DiffOp one_body, DiffOp two_body)
    : sets_(sets), one_body_(std::move(one_body)), two_body_(std::move(two_body)) {
  if (sets < 1 || sets > 4) throw std::invalid_argument("set count must be in 1..4");
  require_sets(one_body_, 1, "one-body");
  require_sets(two_body_, 2, "two-body");
  if (!(exchange(two_body_, 1, 2) == two_body_)) {
    throw AsymmetricInteraction("V(U1, U2) differs from V(U2, U1): " +
                                (exchange(two_body_, 1, 2) - two_body_).to_string());
  }
}

DiffOp MultiSetOperator::assembled() const {
  DiffOp out;
  for (int m = 1; m <= sets_; ++m) out += instantiate(one_body_, m);
  for (int m = 1; m <= sets_; ++m) {
    for (int n = m + 1; n <= sets_; ++n) out += instantiate(two_body_, m, n);
  }
  return out;
}

std::vector<oplib::RelationReport> verify_permutation_invariance(const MultiSetOperator& op) {
  DiffOp full = op.assembled();
  std::vector<oplib::RelationReport> out;
  for (int m = 1; m <= op.sets(); ++m) {
    for (int n = m + 1; n <= op.sets(); ++n) {
      out.push_back(oplib::make_report(
          "permutation", "U" + std::to_string(m) + "<->U" + std::to_string(n), full,
          MultiSetOperator::exchange(full, m, n)));
    }
  }
  oplib::sort_reports(out);
  return out;
}

}  // namespace uvar::fock
