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

#include "uvar/branching/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <random>

#include "uvar/errors.hpp"

namespace uvar::branching {

using nlohmann::json;
using nlohmann::ordered_json;
using oplib::RelationReport;

namespace {

constexpr const char* kSuite = "branching";

RelationReport count_check(const std::string& relation, std::size_t expected, std::size_t actual) {
  long diff = static_cast<long>(actual) - static_cast<long>(expected);
  return {kSuite, relation, std::to_string(expected), std::to_string(actual),
          std::to_string(diff), diff == 0};
}

RelationReport norm_check(const StateVector& s) {
  double n = s.norm2();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", n - 1.0);
  return {kSuite, "sum |amplitude|^2", "1", std::to_string(n), buf,
          std::abs(n - 1.0) <= kUnitarityTol};
}

std::string render_records(const Records& r) {
  std::string s = "{";
  for (const auto& [k, v] : r) {
    if (s.size() > 1) s += ", ";
    s += k + ": " + v;
  }
  return s + "}";
}

std::string get(const Records& r, const std::string& key) {
  auto it = r.find(key);
  return it == r.end() ? std::string() : it->second;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw BadParams(what);
}

std::vector<Amplitude> grain_weights(const ScenarioParams& p) {
  require(p.grains >= 1 && p.grains <= kMaxGrains,
          "grain count must be in 1.." + std::to_string(kMaxGrains));
  if (p.amplitudes.empty()) {
    return std::vector<Amplitude>(p.grains, Amplitude(1.0 / std::sqrt(double(p.grains)), 0.0));
  }
  require(p.amplitudes.size() == static_cast<std::size_t>(p.grains),
          "expected one weight per grain");
  double s = 0;
  for (auto w : p.amplitudes) s += std::norm(w);
  require(std::abs(s - 1.0) <= kUnitarityTol, "grain weights must satisfy sum |w|^2 = 1");
  return p.amplitudes;
}

std::pair<Amplitude, Amplitude> mirror_weights(const ScenarioParams& p) {
  if (p.amplitudes.empty()) {
    const double h = 1.0 / std::sqrt(2.0);
    return {h, h};
  }
  require(p.amplitudes.size() == 2, "mirror takes two amplitudes, a(H) and a(V)");
  double s = std::norm(p.amplitudes[0]) + std::norm(p.amplitudes[1]);
  require(std::abs(s - 1.0) <= kUnitarityTol, "|a(H)|^2 + |a(V)|^2 must be 1");
  return {p.amplitudes[0], p.amplitudes[1]};
}

// Number of hop-limited tracks, counted independently of the rules.
std::size_t track_count(int n, int layers, int hop) {
  std::vector<std::size_t> ways(n, 1);
  for (int l = 1; l < layers; ++l) {
    std::vector<std::size_t> next(n, 0);
    for (int j = 0; j < n; ++j) {
      for (int d = -hop; d <= hop; ++d) {
        if (j + d >= 0 && j + d < n) next[j + d] += ways[j];
      }
    }
    ways = std::move(next);
  }
  std::size_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

void check_trajectory_params(const ScenarioParams& p) {
  require(p.layers >= 1 && p.layers <= kMaxLayers,
          "layer count must be in 1.." + std::to_string(kMaxLayers));
  require(p.hop == 0 || p.hop == 1, "hop must be 0 or 1");
  require(track_count(p.grains, p.layers, p.hop) <= kMaxBranches, "too many tracks");
}

std::string exposed_label(int layer, int j) {
  return "L" + std::to_string(layer) + "-" + std::to_string(j);
}

std::string grains_observer(const Records& r, int n) {
  std::vector<int> hit;
  for (int j = 1; j <= n; ++j) {
    if (get(r, grain_key(j)) == "exposed") hit.push_back(j);
  }
  if (hit.size() == 1) return "Obs sees only grain " + std::to_string(hit[0]) + " exposed";
  std::string s = "Obs sees grains";
  for (int j : hit) s += " " + std::to_string(j);
  return s + " exposed";
}

std::vector<std::vector<int>> exposures_by_layer(const Records& r, int n, int layers) {
  std::vector<std::vector<int>> hits(layers);
  for (int l = 1; l <= layers; ++l) {
    for (int j = 1; j <= n; ++j) {
      if (get(r, layer_grain_key(l, j)) == "exposed") hits[l - 1].push_back(j);
    }
  }
  return hits;
}

std::string trajectory_observer(const Records& r, int n, int layers) {
  auto hits = exposures_by_layer(r, n, layers);
  std::string track;
  for (const auto& h : hits) {
    if (h.size() != 1) {
      std::string s = "Obs sees";
      for (int l = 0; l < layers; ++l) {
        s += " L" + std::to_string(l + 1) + ":";
        for (int j : hits[l]) s += " " + std::to_string(j);
      }
      return s;
    }
    track += (track.empty() ? "" : "-") + std::to_string(h[0]);
  }
  return "Obs sees only track " + track;
}

std::string interpolate(const std::string& tmpl, const Records& r) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size();) {
    if (tmpl[i] == '{') {
      auto close = tmpl.find('}', i);
      if (close != std::string::npos) {
        out += get(r, tmpl.substr(i + 1, close - i - 1));
        i = close + 1;
        continue;
      }
    }
    out += tmpl[i++];
  }
  return out;
}

bool mentions_amplitude(const std::string& s) { return s.find("amplitude") != std::string::npos; }

Amplitude parse_amplitude(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_string() && mentions_amplitude(j.get<std::string>())) {
    throw AmplitudeReadingRule(what + " reads the branch amplitude");
  }
  throw ParseError(what + " must be a number or [re, im]");
}

}  // namespace

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::mirror: return "mirror";
    case ScenarioKind::two_observers: return "two_observers";
    case ScenarioKind::grains: return "grains";
    case ScenarioKind::trajectory: return "trajectory";
  }
  return "?";
}

ScenarioKind parse_scenario_kind(std::string_view name) {
  for (auto k : {ScenarioKind::mirror, ScenarioKind::two_observers, ScenarioKind::grains,
                 ScenarioKind::trajectory}) {
    if (to_string(k) == name) return k;
  }
  throw BadParams("unknown scenario: " + std::string(name));
}

std::string observer_record(const std::string& det_h, const std::string& det_v) {
  bool single = (det_h == "yes") != (det_v == "yes");
  return std::string(single ? "I see only " : "I see ") + det_h + ", " + det_v;
}

std::string grain_key(int j) { return "grain-" + std::to_string(j); }

std::string layer_grain_key(int layer, int j) {
  return "grain-L" + std::to_string(layer) + "-" + std::to_string(j);
}

StateVector initial_state(ScenarioKind kind, const ScenarioParams& p) {
  Records r;
  switch (kind) {
    case ScenarioKind::two_observers:
      r["Obs2"] = kObserverStart;
      [[fallthrough]];
    case ScenarioKind::mirror:
      r["photon"] = "source";
      r["DetH"] = "no";
      r["DetV"] = "no";
      r["Obs1"] = kObserverStart;
      break;
    case ScenarioKind::grains:
      grain_weights(p);
      r["electron"] = "incoming";
      for (int j = 1; j <= p.grains; ++j) r[grain_key(j)] = "unexposed";
      r["Obs"] = kGrainObserverStart;
      break;
    case ScenarioKind::trajectory:
      grain_weights(p);
      check_trajectory_params(p);
      r["electron"] = "incoming";
      for (int l = 1; l <= p.layers; ++l) {
        for (int j = 1; j <= p.grains; ++j) r[layer_grain_key(l, j)] = "unexposed";
      }
      r["Obs"] = kGrainObserverStart;
      break;
  }
  return StateVector{{Branch{{1.0, 0.0}, std::move(r)}}};
}

std::vector<Rule> scenario_rules(ScenarioKind kind, const ScenarioParams& p) {
  std::vector<Rule> rules;
  if (kind == ScenarioKind::mirror || kind == ScenarioKind::two_observers) {
    auto [ah, av] = mirror_weights(p);
    rules.emplace_back(
        "half-silvered mirror", [](const Records& r) { return get(r, "photon") == "source"; },
        [ah, av](const Records&) {
          return std::vector<Outcome>{{ah, {{"photon", "H"}}}, {av, {{"photon", "V"}}}};
        });
    rules.emplace_back(
        "detectors",
        [](const Records& r) {
          auto ph = get(r, "photon");
          return (ph == "H" || ph == "V") && get(r, "DetH") == "no" && get(r, "DetV") == "no";
        },
        [](const Records& r) {
          return std::vector<Outcome>{{1.0, {{get(r, "photon") == "H" ? "DetH" : "DetV", "yes"}}}};
        });
    rules.emplace_back(
        "observer 1",
        [](const Records& r) {
          return get(r, "Obs1") == kObserverStart &&
                 (get(r, "DetH") == "yes" || get(r, "DetV") == "yes");
        },
        [](const Records& r) {
          return std::vector<Outcome>{
              {1.0, {{"Obs1", observer_record(get(r, "DetH"), get(r, "DetV"))}}}};
        });
    if (kind == ScenarioKind::two_observers) {
      rules.emplace_back(
          "observer 2",
          [](const Records& r) {
            return get(r, "Obs2") == kObserverStart && get(r, "Obs1") != kObserverStart;
          },
          [](const Records& r) {
            const std::string h = get(r, "DetH"), v = get(r, "DetV");
            const bool agree = get(r, "Obs1") == observer_record(h, v);
            return std::vector<Outcome>{
                {1.0,
                 {{"Obs2", "I see " + h + ", " + v +
                               (agree ? ", in agreement with Obs. 1."
                                      : ", in disagreement with Obs. 1.")}}}};
          });
    }
    return rules;
  }

  const std::vector<Amplitude> w = grain_weights(p);
  const int n = p.grains;
  if (kind == ScenarioKind::grains) {
    rules.emplace_back(
        "film layer", [](const Records& r) { return get(r, "electron") == "incoming"; },
        [w, n](const Records&) {
          std::vector<Outcome> out;
          for (int j = 1; j <= n; ++j) {
            out.push_back({w[j - 1], {{"electron", "grain " + std::to_string(j)},
                                      {grain_key(j), "exposed"}}});
          }
          return out;
        });
    rules.emplace_back(
        "observer",
        [](const Records& r) {
          return get(r, "Obs") == kGrainObserverStart && get(r, "electron") != "incoming";
        },
        [n](const Records& r) {
          return std::vector<Outcome>{{1.0, {{"Obs", grains_observer(r, n)}}}};
        });
    return rules;
  }

  check_trajectory_params(p);
  const int layers = p.layers, hop = p.hop;
  rules.emplace_back(
      "layer 1", [](const Records& r) { return get(r, "electron") == "incoming"; },
      [w, n](const Records&) {
        std::vector<Outcome> out;
        for (int j = 1; j <= n; ++j) {
          out.push_back({w[j - 1], {{"electron", exposed_label(1, j)},
                                    {layer_grain_key(1, j), "exposed"}}});
        }
        return out;
      });
  for (int l = 2; l <= layers; ++l) {
    const std::string prefix = "L" + std::to_string(l - 1) + "-";
    rules.emplace_back(
        "layer " + std::to_string(l),
        [prefix](const Records& r) { return get(r, "electron").rfind(prefix, 0) == 0; },
        [prefix, l, n, hop](const Records& r) {
          const int j = std::stoi(get(r, "electron").substr(prefix.size()));
          std::vector<int> targets;
          for (int d = -hop; d <= hop; ++d) {
            if (j + d >= 1 && j + d <= n) targets.push_back(j + d);
          }
          const double amp = 1.0 / std::sqrt(double(targets.size()));
          std::vector<Outcome> out;
          for (int k : targets) {
            out.push_back({amp, {{"electron", exposed_label(l, k)},
                                 {layer_grain_key(l, k), "exposed"}}});
          }
          return out;
        });
  }
  const std::string last = "L" + std::to_string(layers) + "-";
  rules.emplace_back(
      "observer",
      [last](const Records& r) {
        return get(r, "Obs") == kGrainObserverStart && get(r, "electron").rfind(last, 0) == 0;
      },
      [n, layers](const Records& r) {
        return std::vector<Outcome>{{1.0, {{"Obs", trajectory_observer(r, n, layers)}}}};
      });
  return rules;
}

ScenarioResult run_scenario(ScenarioKind kind, const ScenarioParams& p,
                            std::span<const Rule> extra) {
  StateVector s = initial_state(kind, p);
  for (const auto& r : scenario_rules(kind, p)) s = apply_rule(s, r);
  for (const auto& r : extra) s = apply_rule(s, r);
  s.validate();

  ScenarioResult out;
  auto& c = out.checks;
  c.push_back(norm_check(s));

  switch (kind) {
    case ScenarioKind::mirror:
    case ScenarioKind::two_observers: {
      c.push_back(count_check("branch count", 2, s.branches.size()));
      // Recorded outcomes, one entry per photon path.
      const std::pair<const char*, Records> expected[] = {
          {"H", {{"DetH", "yes"}, {"DetV", "no"}, {"Obs1", "I see only yes, no"}}},
          {"V", {{"DetH", "no"}, {"DetV", "yes"}, {"Obs1", "I see only no, yes"}}}};
      for (std::size_t k = 0; k < 2; ++k) {
        const auto& [path, want] = expected[k];
        Records got;
        if (k < s.branches.size()) {
          for (const auto& [key, v] : want) got[key] = get(s.branches[k].records, key);
        }
        c.push_back({kSuite, std::string("records on ") + path + " branch", render_records(want),
                     render_records(got), got == want ? "0" : "differs", got == want});
      }
      std::size_t impure = 0, disagree = 0;
      for (const auto& b : s.branches) {
        const auto h = get(b.records, "DetH"), v = get(b.records, "DetV");
        if (get(b.records, "Obs1") != observer_record(h, v)) ++impure;
        if (kind == ScenarioKind::two_observers &&
            get(b.records, "Obs2") != "I see " + h + ", " + v + ", in agreement with Obs. 1.") {
          ++disagree;
        }
      }
      c.push_back(count_check("observer records not fixed by own detectors", 0, impure));
      if (kind == ScenarioKind::two_observers) {
        c.push_back(count_check("disagreeing branches", 0, disagree));
      }
      break;
    }
    case ScenarioKind::grains: {
      c.push_back(count_check("branch count", p.grains, s.branches.size()));
      std::size_t multi = 0, impure = 0;
      for (const auto& b : s.branches) {
        int hits = 0;
        for (int j = 1; j <= p.grains; ++j) hits += get(b.records, grain_key(j)) == "exposed";
        if (hits != 1) ++multi;
        if (get(b.records, "Obs") != grains_observer(b.records, p.grains)) ++impure;
      }
      c.push_back(count_check("branches without exactly one exposed grain", 0, multi));
      c.push_back(count_check("observer records not fixed by own grains", 0, impure));
      break;
    }
    case ScenarioKind::trajectory: {
      c.push_back(count_check("branch count", track_count(p.grains, p.layers, p.hop),
                              s.branches.size()));
      std::size_t multi = 0, broken = 0, impure = 0;
      for (const auto& b : s.branches) {
        auto hits = exposures_by_layer(b.records, p.grains, p.layers);
        bool single = true;
        for (const auto& h : hits) single = single && h.size() == 1;
        if (!single) {
          ++multi;
          ++broken;
        } else {
          for (int l = 1; l < p.layers; ++l) {
            if (std::abs(hits[l][0] - hits[l - 1][0]) > p.hop) {
              ++broken;
              break;
            }
          }
        }
        if (get(b.records, "Obs") != trajectory_observer(b.records, p.grains, p.layers)) ++impure;
      }
      c.push_back(count_check("branches without exactly one exposure per layer", 0, multi));
      c.push_back(count_check(p.hop == 0 ? "non-collinear tracks" : "non-adjacent tracks", 0,
                              broken));
      c.push_back(count_check("observer records not fixed by own grains", 0, impure));
      break;
    }
  }
  oplib::sort_reports(c);
  out.state = std::move(s);
  return out;
}

bool coefficient_independence_check(ScenarioKind kind, const ScenarioParams& params,
                                    std::span<const Amplitude> a, std::span<const Amplitude> b) {
  ScenarioParams pa = params, pb = params;
  pa.amplitudes.assign(a.begin(), a.end());
  pb.amplitudes.assign(b.begin(), b.end());
  return run_scenario(kind, pa).state.record_structure() ==
         run_scenario(kind, pb).state.record_structure();
}

std::vector<Amplitude> random_weights(int n, std::uint64_t seed) {
  if (n < 1) throw BadParams("weight count must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Amplitude> w(n);
  double s = 0;
  for (auto& x : w) {
    x = {g(rng), g(rng)};
    s += std::norm(x);
  }
  for (auto& x : w) x /= std::sqrt(s);
  return w;
}

Rule rule_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("rule must be an object");
  for (const auto& [k, v] : j.items()) {
    if (k != "name" && k != "guard" && k != "outcomes" && k != "non_unitary") {
      throw ParseError("unknown rule field: " + k);
    }
  }
  const std::string name = j.value("name", std::string("rule"));

  std::vector<std::pair<std::string, std::vector<std::string>>> guard;
  if (j.contains("guard")) {
    if (!j["guard"].is_object()) throw ParseError("guard must be an object");
    for (const auto& [k, v] : j["guard"].items()) {
      if (mentions_amplitude(k)) throw AmplitudeReadingRule("guard of '" + name + "' reads " + k);
      std::vector<std::string> allowed;
      if (v.is_string()) {
        allowed.push_back(v.get<std::string>());
      } else if (v.is_array()) {
        for (const auto& x : v) {
          if (!x.is_string()) throw ParseError("guard labels must be strings");
          allowed.push_back(x.get<std::string>());
        }
      } else {
        throw ParseError("guard value must be a label or a list of labels");
      }
      guard.emplace_back(k, std::move(allowed));
    }
  }

  if (!j.contains("outcomes") || !j["outcomes"].is_array() || j["outcomes"].empty()) {
    throw ParseError("rule '" + name + "' needs a non-empty outcomes list");
  }
  std::vector<Outcome> templates;
  for (const auto& o : j["outcomes"]) {
    if (!o.is_object()) throw ParseError("outcome must be an object");
    for (const auto& [k, v] : o.items()) {
      if (k != "weight" && k != "set") throw ParseError("unknown outcome field: " + k);
    }
    Outcome t;
    if (o.contains("weight")) t.weight = parse_amplitude(o["weight"], "weight of '" + name + "'");
    if (o.contains("set")) {
      if (!o["set"].is_object()) throw ParseError("set must be an object");
      for (const auto& [k, v] : o["set"].items()) {
        if (!v.is_string()) throw ParseError("record labels must be strings");
        if (mentions_amplitude(k) || mentions_amplitude(v.get<std::string>())) {
          throw AmplitudeReadingRule("effect of '" + name + "' refers to the amplitude");
        }
        t.rewrite[k] = v.get<std::string>();
      }
    }
    templates.push_back(std::move(t));
  }

  bool non_unitary = false;
  if (j.contains("non_unitary")) {
    if (!j["non_unitary"].is_boolean()) throw ParseError("non_unitary must be a boolean");
    non_unitary = j["non_unitary"].get<bool>();
  }

  return Rule(
      name,
      [guard](const Records& r) {
        for (const auto& [k, allowed] : guard) {
          auto it = r.find(k);
          if (it == r.end()) return false;
          bool hit = false;
          for (const auto& a : allowed) hit = hit || a == it->second;
          if (!hit) return false;
        }
        return true;
      },
      [templates](const Records& r) {
        std::vector<Outcome> out;
        for (const auto& t : templates) {
          Outcome o{t.weight, {}};
          for (const auto& [k, v] : t.rewrite) o.rewrite[k] = interpolate(v, r);
          out.push_back(std::move(o));
        }
        return out;
      },
      non_unitary);
}

ScenarioFile parse_scenario_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("scenario") || !j["scenario"].is_string()) {
    throw ParseError("scenario file needs a \"scenario\" name");
  }
  for (const auto& [k, v] : j.items()) {
    if (k != "scenario" && k != "params" && k != "rules") {
      throw ParseError("unknown scenario field: " + k);
    }
  }
  ScenarioFile f;
  f.kind = parse_scenario_kind(j["scenario"].get<std::string>());
  const bool optical = f.kind == ScenarioKind::mirror || f.kind == ScenarioKind::two_observers;
  json params = j.value("params", json::object());
  if (!params.is_object()) throw ParseError("params must be an object");

  auto int_param = [&](const char* key, int& dst) {
    if (!params.contains(key)) return;
    if (!params[key].is_number_integer()) throw BadParams(std::string(key) + " must be an integer");
    dst = params[key].get<int>();
  };
  std::optional<std::uint64_t> seed;
  for (const auto& [k, v] : params.items()) {
    const bool known = optical ? (k == "a_H" || k == "a_V")
                               : (k == "N" || k == "weights" || k == "seed" ||
                                  (f.kind == ScenarioKind::trajectory && (k == "L" || k == "hop")));
    if (!known) throw BadParams("unknown parameter for " + to_string(f.kind) + ": " + k);
  }
  if (optical) {
    if (params.contains("a_H") != params.contains("a_V")) {
      throw BadParams("give both a_H and a_V or neither");
    }
    if (params.contains("a_H")) {
      f.params.amplitudes = {parse_amplitude(params["a_H"], "a_H"),
                             parse_amplitude(params["a_V"], "a_V")};
    }
  } else {
    int_param("N", f.params.grains);
    int_param("L", f.params.layers);
    int_param("hop", f.params.hop);
    if (params.contains("seed")) {
      if (!params["seed"].is_number_unsigned()) throw BadParams("seed must be a non-negative integer");
      seed = params["seed"].get<std::uint64_t>();
    }
    if (params.contains("weights")) {
      const json& w = params["weights"];
      if (w.is_string() && w.get<std::string>() == "uniform") {
        f.params.amplitudes.clear();
      } else if (w.is_array()) {
        for (const auto& x : w) f.params.amplitudes.push_back(parse_amplitude(x, "weight"));
      } else {
        throw BadParams("weights must be \"uniform\" or a list");
      }
      if (seed) throw BadParams("give weights or seed, not both");
    } else if (seed) {
      require(f.params.grains >= 1 && f.params.grains <= kMaxGrains, "grain count out of range");
      f.params.amplitudes = random_weights(f.params.grains, *seed);
    }
  }

  if (j.contains("rules")) {
    if (!j["rules"].is_array()) throw ParseError("rules must be a list");
    for (const auto& r : j["rules"]) f.rules.push_back(rule_from_json(r));
  }

  // Validates the parameters before anything runs.
  initial_state(f.kind, f.params);
  scenario_rules(f.kind, f.params);

  f.echo = ordered_json::object();
  f.echo["scenario"] = to_string(f.kind);
  if (optical) {
    auto [ah, av] = mirror_weights(f.params);
    f.echo["a_H"] = {ah.real(), ah.imag()};
    f.echo["a_V"] = {av.real(), av.imag()};
  } else {
    f.echo["N"] = f.params.grains;
    if (f.kind == ScenarioKind::trajectory) {
      f.echo["L"] = f.params.layers;
      f.echo["hop"] = f.params.hop;
    }
    if (seed) f.echo["seed"] = *seed;
    f.echo["weights"] = f.params.amplitudes.empty() ? ordered_json("uniform") : ordered_json::array();
    for (auto w : f.params.amplitudes) f.echo["weights"].push_back({w.real(), w.imag()});
  }
  f.echo["extra_rules"] = f.rules.size();
  return f;
}

ordered_json ledger_to_json(const StateVector& state) {
  ordered_json out = ordered_json::array();
  for (const auto& b : state.branches) {
    ordered_json e;
    e["amplitude"] = {b.amplitude.real(), b.amplitude.imag()};
    e["records"] = ordered_json::object();
    for (const auto& [k, v] : b.records) e["records"][k] = v;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace uvar::branching
