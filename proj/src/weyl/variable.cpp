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

#include "uvar/weyl/variable.hpp"

#include <regex>
#include <stdexcept>

#include "uvar/errors.hpp"

namespace uvar::weyl {

Variable Variable::make(Family family, int slot, int site, bool conjugated) {
  if (slot < 0 || slot > 2) throw std::invalid_argument("Variable: slot must be 0, 1 or 2");
  if (site < 1 || site > 0xffff) throw std::invalid_argument("Variable: site out of range");
  Variable v;
  v.family = family;
  v.slot = static_cast<std::uint8_t>(slot);
  v.site = static_cast<std::uint16_t>(site);
  v.conjugated = conjugated && v.kind() == Kind::complex;
  return v;
}

std::string Variable::to_string() const {
  static constexpr char kLetters[] = {'u', 'v', 'x', 'y', 'z'};
  std::string s(1, kLetters[static_cast<int>(family)]);
  if (conjugated) s += "bar";
  if (slot != 0) s += std::to_string(slot);
  if (slot != 0 || site != 1) s += "_" + std::to_string(site);
  if (set != 0) s += "@" + std::to_string(set);
  return s;
}

Variable Variable::parse(std::string_view text) {
  static const std::regex kPattern(R"(^([uvxyz])(bar)?([12])?(?:_(\d+))?(?:@(\d+))?$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, kPattern)) {
    throw ParseError("bad variable '" + std::string(text) + "'");
  }
  Family fam = Family::u;
  switch (m[1].str()[0]) {
    case 'u': fam = Family::u; break;
    case 'v': fam = Family::v; break;
    case 'x': fam = Family::x; break;
    case 'y': fam = Family::y; break;
    default: fam = Family::z; break;
  }
  int slot = m[3].matched ? std::stoi(m[3].str()) : 0;
  int site = m[4].matched ? std::stoi(m[4].str()) : 1;
  Variable v = make(fam, slot, site, m[2].matched);
  if (m[2].matched && v.kind() == Kind::real) {
    throw ParseError("real variable cannot be conjugated: '" + std::string(text) + "'");
  }
  if (m[5].matched) v.set = static_cast<std::uint16_t>(std::stoi(m[5].str()));
  return v;
}

}  // namespace uvar::weyl
