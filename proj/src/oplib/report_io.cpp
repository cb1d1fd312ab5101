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

#include "uvar/oplib/report_io.hpp"

#include <sstream>

#include "uvar/errors.hpp"

namespace uvar::oplib {

using nlohmann::ordered_json;

void to_json(ordered_json& j, const RelationReport& r) {
  j = ordered_json{{"suite", r.suite},       {"relation", r.relation}, {"expected", r.expected},
                   {"actual", r.actual},     {"residual", r.residual}, {"pass", r.pass}};
}

void from_json(const ordered_json& j, RelationReport& r) {
  j.at("suite").get_to(r.suite);
  j.at("relation").get_to(r.relation);
  j.at("expected").get_to(r.expected);
  j.at("actual").get_to(r.actual);
  j.at("residual").get_to(r.residual);
  j.at("pass").get_to(r.pass);
}

void to_json(ordered_json& j, const Report& r) {
  j = ordered_json::object();
  j["schema"] = kReportSchema;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["pass"] = r.pass;
  ordered_json rel = ordered_json::array();
  for (const auto& x : r.relations) rel.push_back(x);
  j["relations"] = std::move(rel);
  if (!r.data.is_null()) j["data"] = r.data;
  if (!r.notes.empty()) j["notes"] = r.notes;
}

void from_json(const ordered_json& j, Report& r) {
  try {
    if (j.at("schema").get<std::string>() != kReportSchema) {
      throw ParseError("unsupported report schema '" + j.at("schema").get<std::string>() + "'");
    }
    j.at("command").get_to(r.command);
    r.parameters = j.value("parameters", ordered_json::object());
    j.at("pass").get_to(r.pass);
    r.relations.clear();
    for (const auto& x : j.at("relations")) r.relations.push_back(x.get<RelationReport>());
    r.data = j.contains("data") ? j.at("data") : ordered_json();
    r.notes = j.value("notes", std::vector<std::string>{});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string render_json(const Report& r) {
  ordered_json j = r;
  return j.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : r.parameters.items()) {
    os << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  std::size_t passed = 0;
  for (const auto& x : r.relations) passed += x.pass;
  if (!r.relations.empty()) {
    os << "  relations: " << passed << "/" << r.relations.size() << " pass\n";
  }
  for (const auto& x : r.relations) {
    os << (x.pass ? "  ok   " : "  FAIL ") << "[" << x.suite << "] " << x.relation << "\n";
    if (!x.pass) {
      os << "         expected: " << x.expected << "\n"
         << "         actual:   " << x.actual << "\n"
         << "         residual: " << x.residual << "\n";
    }
  }
  if (!r.data.is_null()) os << "  data: " << r.data.dump() << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

Report parse_report(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  return j.get<Report>();
}

}  // namespace uvar::oplib
