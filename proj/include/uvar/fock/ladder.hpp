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

// Fermionic ladder operators on occupation-number states.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "uvar/oplib/relations.hpp"

namespace uvar::fock {

inline constexpr int kMaxCarModes = 12;

/// Occupation pattern over `modes` ordered modes; bit k is mode k.
struct FockState {
  int modes = 0;
  std::uint64_t bits = 0;

  static FockState vacuum(int modes) { return {modes, 0}; }
  bool occupied(int mode) const { return (bits >> mode) & 1u; }
  int count() const;
  /// Mode 0 first, e.g. "|1010>".
  std::string to_string() const;

  friend bool operator==(const FockState&, const FockState&) = default;
};

/// sign * state; sign 0 is the zero vector.
struct SignedState {
  int sign = 0;
  FockState state;

  bool is_zero() const { return sign == 0; }
  friend bool operator==(const SignedState&, const SignedState&) = default;
};

enum class Ladder { create, annihilate };

/// `standard` carries the Jordan-Wigner sign (-1)^(occupied modes below);
/// `no_sign` drops it and exists to show that the checks catch that.
enum class LadderConvention { standard, no_sign };

/// Throws std::out_of_range unless 0 <= mode < state.modes.
SignedState apply_ladder(const FockState& state, Ladder which, int mode,
                         LadderConvention convention = LadderConvention::standard);

/// Applies operators right to left: ops.back() acts first.
SignedState apply_sequence(const FockState& state, std::span<const std::pair<Ladder, int>> ops,
                           LadderConvention convention = LadderConvention::standard);

/// a*_{m_1} a*_{m_2} ... a*_{m_k} |0>, returned with its sign.
SignedState create_sequence(int modes, std::span<const int> m,
                            LadderConvention convention = LadderConvention::standard);

/// {a_i, a*_j} = delta_ij, {a_i, a_j} = 0 and {a*_i, a*_j} = 0 for all
/// i, j as exact operators on the 2^M space. M <= kMaxCarModes.
std::vector<oplib::RelationReport> verify_car(
    int modes, LadderConvention convention = LadderConvention::standard);

/// The index placement a*_i a_j + a_i a*_j = delta_ij, evaluated the same
/// way; it only holds for i = j.
std::vector<oplib::RelationReport> verify_car_printed_variant(int modes);

/// sum_i a*_i a_i equals the occupation count on every basis state.
oplib::RelationReport verify_number_operator(int modes);

}  // namespace uvar::fock
