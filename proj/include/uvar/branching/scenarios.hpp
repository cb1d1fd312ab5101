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

// Detector, observer, film-grain and trajectory scenarios. File format:
// docs/scenario-format.md.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uvar/branching/state.hpp"
#include "uvar/oplib/relations.hpp"

namespace uvar::branching {

enum class ScenarioKind { mirror, two_observers, grains, trajectory };

std::string to_string(ScenarioKind k);
/// Throws BadParams on unknown names.
ScenarioKind parse_scenario_kind(std::string_view name);

inline constexpr int kMaxGrains = 1024;
inline constexpr int kMaxLayers = 16;
inline constexpr std::size_t kMaxBranches = 1'000'000;

struct ScenarioParams {
  /// mirror and two_observers: (a(H), a(V)). grains and trajectory: one
  /// weight per grain of the first layer. Empty selects 1/sqrt2 each, or
  /// uniform grain weights.
  std::vector<Amplitude> amplitudes;
  int grains = 8;
  int layers = 3;
  /// Largest lateral step between trajectory layers, 0 or 1.
  int hop = 0;
};

// Record labels written by the built-in rules.
inline constexpr const char* kObserverStart = "I see no,no";
inline constexpr const char* kGrainObserverStart = "Obs has not looked";
std::string observer_record(const std::string& det_h, const std::string& det_v);
std::string grain_key(int j);
std::string layer_grain_key(int layer, int j);

StateVector initial_state(ScenarioKind kind, const ScenarioParams& params);
/// Built-in rules in application order. Throws BadParams.
std::vector<Rule> scenario_rules(ScenarioKind kind, const ScenarioParams& params);

struct ScenarioResult {
  StateVector state;
  /// Consistency verdicts, suite "branching".
  std::vector<oplib::RelationReport> checks;

  bool pass() const { return oplib::all_pass(checks); }
};

/// Applies the built-in rules, then `extra`, and checks the final ledger.
ScenarioResult run_scenario(ScenarioKind kind, const ScenarioParams& params,
                            std::span<const Rule> extra = {});

/// True iff running with amplitudes a and with amplitudes b yields the same
/// branch count and identical records branch by branch.
bool coefficient_independence_check(ScenarioKind kind, const ScenarioParams& params,
                                    std::span<const Amplitude> a, std::span<const Amplitude> b);

/// n complex Gaussian weights normalized to unit total probability.
std::vector<Amplitude> random_weights(int n, std::uint64_t seed);

/// Declarative rule: {name, guard: {subsystem: label | [labels]},
/// outcomes: [{weight, set: {subsystem: template}}], non_unitary}. Templates
/// may interpolate "{subsystem}". Any mention of "amplitude" throws
/// AmplitudeReadingRule; malformed input throws ParseError.
Rule rule_from_json(const nlohmann::json& j);

struct ScenarioFile {
  ScenarioKind kind = ScenarioKind::mirror;
  ScenarioParams params;
  std::vector<Rule> rules;
  /// Parameters as understood, for echoing into reports.
  nlohmann::ordered_json echo;
};

ScenarioFile parse_scenario_file(const std::string& text);

/// [{amplitude: [re, im], records: {...}}, ...]
nlohmann::ordered_json ledger_to_json(const StateVector& state);

}  // namespace uvar::branching
