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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace uvar::weyl {

/// u, v are complex; x, y, z are real coordinates.
enum class Family : std::uint8_t { u, v, x, y, z };

enum class Kind : std::uint8_t { complex, real };

/// One formal variable, e.g. u_{1i} (slot 1, site i) or its conjugate.
///
/// Variables are totally ordered by (set, family, slot, site, conjugated),
/// which is the member declaration order. Canonical term order in DiffOp
/// follows from this.
///
/// Conjugate variables are independent formal symbols; the only link to
/// their partner is conj() and the adjoint map. In particular [d/d ubar, u] = 0.
struct Variable {
  std::uint16_t set = 0;  ///< variable-set index U_m; 0 when unused
  Family family = Family::u;
  std::uint8_t slot = 0;  ///< b in u_{bi}; 0 when the variable has no slot
  std::uint16_t site = 1;
  bool conjugated = false;

  static Variable u(int slot = 0, int site = 1) { return make(Family::u, slot, site); }
  static Variable v(int slot = 0, int site = 1) { return make(Family::v, slot, site); }
  static Variable x() { return make(Family::x, 0, 1); }
  static Variable y() { return make(Family::y, 0, 1); }
  static Variable z() { return make(Family::z, 0, 1); }
  static Variable make(Family family, int slot, int site, bool conjugated = false);

  Kind kind() const {
    return (family == Family::u || family == Family::v) ? Kind::complex : Kind::real;
  }
  /// Complex conjugation; the identity on real variables.
  Variable conj() const {
    Variable r = *this;
    if (kind() == Kind::complex) r.conjugated = !r.conjugated;
    return r;
  }
  Variable bar() const { return conj(); }
  Variable in_set(int s) const {
    Variable r = *this;
    r.set = static_cast<std::uint16_t>(s);
    return r;
  }

  friend auto operator<=>(const Variable&, const Variable&) = default;

  /// `<family>[bar][<slot>][_<site>][@<set>]`, e.g. `ubar1_2`, `x`, `v2_1@3`.
  std::string to_string() const;
  static Variable parse(std::string_view text);
};

}  // namespace uvar::weyl
