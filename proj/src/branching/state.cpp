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

#include "uvar/branching/state.hpp"

#include <cmath>
#include <stdexcept>

#include "uvar/errors.hpp"

namespace uvar::branching {

double StateVector::norm2() const {
  double s = 0;
  for (const auto& b : branches) s += std::norm(b.amplitude);
  return s;
}

void StateVector::validate() const {
  if (branches.empty()) return;
  const Records& first = branches.front().records;
  for (const auto& b : branches) {
    bool same = b.records.size() == first.size();
    for (auto i = b.records.begin(), j = first.begin(); same && i != b.records.end(); ++i, ++j) {
      same = i->first == j->first;
    }
    if (!same) throw std::invalid_argument("branches name different subsystems");
  }
}

std::vector<Records> StateVector::record_structure() const {
  std::vector<Records> out;
  out.reserve(branches.size());
  for (const auto& b : branches) out.push_back(b.records);
  return out;
}

StateVector StateVector::concat(const StateVector& other) const {
  StateVector out = *this;
  out.branches.insert(out.branches.end(), other.branches.begin(), other.branches.end());
  return out;
}

Rule::Rule(std::string name, Guard guard, Effect effect, bool non_unitary)
    : name_(std::move(name)),
      guard_(std::move(guard)),
      effect_(std::move(effect)),
      non_unitary_(non_unitary) {
  if (!guard_ || !effect_) throw std::invalid_argument("rule needs a guard and an effect");
}

Rule Rule::identity() {
  return Rule(
      "identity", [](const Records&) { return true; },
      [](const Records&) { return std::vector<Outcome>{Outcome{}}; });
}

std::vector<Outcome> Rule::outcomes(const Records& r) const {
  std::vector<Outcome> out = effect_(r);
  if (!non_unitary_) {
    double s = 0;
    for (const auto& o : out) s += std::norm(o.weight);
    if (std::abs(s - 1.0) > kUnitarityTol) {
      throw NonUnitaryRule("rule '" + name_ + "' splits with total weight " + std::to_string(s));
    }
  }
  return out;
}

StateVector apply_rule(const StateVector& state, const Rule& rule) {
  StateVector out;
  out.branches.reserve(state.branches.size());
  for (const auto& b : state.branches) {
    if (!rule.matches(b.records)) {
      out.branches.push_back(b);
      continue;
    }
    for (const auto& o : rule.outcomes(b.records)) {
      Branch next{b.amplitude * o.weight, b.records};
      for (const auto& [k, v] : o.rewrite) {
        auto it = next.records.find(k);
        if (it == next.records.end()) {
          throw std::invalid_argument("rule '" + rule.name() + "' writes unknown subsystem " + k);
        }
        it->second = v;
      }
      out.branches.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace uvar::branching
