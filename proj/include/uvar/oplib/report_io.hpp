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

// Report documents, see docs/report-schema.md.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "uvar/oplib/relations.hpp"

namespace uvar::oplib {

inline constexpr const char* kReportSchema = "uvar-report/1";

struct Report {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<RelationReport> relations;
  /// Command-specific payload (tables, statistics); null when absent.
  nlohmann::ordered_json data;
  std::vector<std::string> notes;
  bool pass = true;
};

void to_json(nlohmann::ordered_json& j, const RelationReport& r);
void from_json(const nlohmann::ordered_json& j, RelationReport& r);
void to_json(nlohmann::ordered_json& j, const Report& r);
/// Throws ParseError on schema mismatch.
void from_json(const nlohmann::ordered_json& j, Report& r);

/// Pretty JSON with a trailing newline.
std::string render_json(const Report& r);
/// Line-oriented human rendering.
std::string render_text(const Report& r);

Report parse_report(const std::string& text);

}  // namespace uvar::oplib
