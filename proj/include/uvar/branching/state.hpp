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

// State vectors as branch ledgers and amplitude-blind evolution rules.

#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace uvar::branching {

using Amplitude = std::complex<double>;
/// Subsystem name -> record label.
using Records = std::map<std::string, std::string>;

inline constexpr double kUnitarityTol = 1e-12;

struct Branch {
  Amplitude amplitude{1.0, 0.0};
  Records records;

  friend bool operator==(const Branch&, const Branch&) = default;
};

struct StateVector {
  std::vector<Branch> branches;

  double norm2() const;
  /// Throws std::invalid_argument unless every branch names the same
  /// subsystems.
  void validate() const;
  /// Branch records in order, amplitudes dropped.
  std::vector<Records> record_structure() const;
  StateVector concat(const StateVector& other) const;

  friend bool operator==(const StateVector&, const StateVector&) = default;
};

/// One term of a branch split: the branch amplitude is multiplied by
/// `weight` and the listed records are overwritten.
struct Outcome {
  Amplitude weight{1.0, 0.0};
  Records rewrite;
};

/// A per-branch evolution step. Guard and effect see the branch records and
/// nothing else, so a rule cannot depend on the amplitude it multiplies.
class Rule {
 public:
  using Guard = std::function<bool(const Records&)>;
  using Effect = std::function<std::vector<Outcome>(const Records&)>;

  Rule(std::string name, Guard guard, Effect effect, bool non_unitary = false);

  static Rule identity();

  const std::string& name() const { return name_; }
  bool non_unitary() const { return non_unitary_; }
  bool matches(const Records& r) const { return guard_(r); }
  /// Throws NonUnitaryRule if sum |weight|^2 differs from 1 by more than
  /// kUnitarityTol and the rule is not flagged non-unitary.
  std::vector<Outcome> outcomes(const Records& r) const;

 private:
  std::string name_;
  Guard guard_;
  Effect effect_;
  bool non_unitary_;
};

/// Evolves every branch on its own. Branches the guard rejects pass through
/// unchanged; matching branches are replaced by one branch per outcome, in
/// outcome order. Rewrites of subsystems a branch does not have throw
/// std::invalid_argument.
StateVector apply_rule(const StateVector& state, const Rule& rule);

}  // namespace uvar::branching
