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

#include "uvar/fock/ladder.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace uvar::fock {

using oplib::RelationReport;

int FockState::count() const { return std::popcount(bits); }

std::string FockState::to_string() const {
  std::string s = "|";
  for (int k = 0; k < modes; ++k) s += occupied(k) ? '1' : '0';
  return s + ">";
}

SignedState apply_ladder(const FockState& state, Ladder which, int mode,
                         LadderConvention convention) {
  if (mode < 0 || mode >= state.modes) throw std::out_of_range("ladder mode out of range");
  const bool occ = state.occupied(mode);
  if ((which == Ladder::create) == occ) return {};
  int sign = 1;
  if (convention == LadderConvention::standard) {
    std::uint64_t below = state.bits & ((std::uint64_t{1} << mode) - 1);
    if (std::popcount(below) % 2) sign = -1;
  }
  return {sign, {state.modes, state.bits ^ (std::uint64_t{1} << mode)}};
}

SignedState apply_sequence(const FockState& state, std::span<const std::pair<Ladder, int>> ops,
                           LadderConvention convention) {
  SignedState cur{1, state};
  for (auto it = ops.rbegin(); it != ops.rend() && !cur.is_zero(); ++it) {
    SignedState next = apply_ladder(cur.state, it->first, it->second, convention);
    cur = {cur.sign * next.sign, next.state};
  }
  return cur;
}

SignedState create_sequence(int modes, std::span<const int> m, LadderConvention convention) {
  std::vector<std::pair<Ladder, int>> ops;
  for (int k : m) ops.emplace_back(Ladder::create, k);
  return apply_sequence(FockState::vacuum(modes), ops, convention);
}

namespace {

/// Sparse integer matrix on the 2^M occupation basis, keyed (row, col).
using Sparse = std::map<std::pair<std::uint64_t, std::uint64_t>, long>;

void accumulate(Sparse& m, std::uint64_t col, const SignedState& s, long factor = 1) {
  if (s.is_zero()) return;
  auto key = std::make_pair(s.state.bits, col);
  long v = (m[key] += factor * s.sign);
  if (v == 0) m.erase(key);
}

Sparse scalar_identity(int modes, long c) {
  Sparse m;
  if (c == 0) return m;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << modes); ++b) m[{b, b}] = c;
  return m;
}

Sparse subtract(Sparse a, const Sparse& b) {
  for (const auto& [k, v] : b) {
    long r = (a[k] -= v);
    if (r == 0) a.erase(k);
  }
  return a;
}

std::string render(const Sparse& m, int modes) {
  if (m.empty()) return "0";
  const std::uint64_t dim = std::uint64_t{1} << modes;
  if (m.size() == dim) {
    long c = m.begin()->second;
    bool scalar = true;
    for (const auto& [k, v] : m) scalar = scalar && k.first == k.second && v == c;
    if (scalar) return c == 1 ? "I" : std::to_string(c) + "*I";
  }
  std::string s;
  std::size_t shown = 0;
  for (const auto& [k, v] : m) {
    if (shown == 6) {
      s += " + ... (" + std::to_string(m.size() - shown) + " more)";
      break;
    }
    if (shown) s += " + ";
    s += std::to_string(v) + " " + FockState{modes, k.first}.to_string() + "<" +
         FockState{modes, k.second}.to_string().substr(1);
    ++shown;
  }
  return s;
}

std::string op_name(Ladder l, int i) {
  return (l == Ladder::create ? "a*" : "a") + std::to_string(i);
}

/// x y + z w on the full space, each product applied right to left.
Sparse product_sum(int modes, std::pair<Ladder, int> x, std::pair<Ladder, int> y,
                   std::pair<Ladder, int> z, std::pair<Ladder, int> w,
                   LadderConvention convention) {
  Sparse m;
  const std::pair<Ladder, int> first[] = {x, y};
  const std::pair<Ladder, int> second[] = {z, w};
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << modes); ++b) {
    FockState s{modes, b};
    accumulate(m, b, apply_sequence(s, first, convention));
    accumulate(m, b, apply_sequence(s, second, convention));
  }
  return m;
}

RelationReport report(std::string suite, std::string relation, const Sparse& expected,
                      const Sparse& actual, int modes) {
  Sparse residual = subtract(actual, expected);
  return {std::move(suite), std::move(relation), render(expected, modes), render(actual, modes),
          render(residual, modes), residual.empty()};
}

void check_modes(int modes) {
  if (modes < 1 || modes > kMaxCarModes) {
    throw std::invalid_argument("mode count must be in 1.." + std::to_string(kMaxCarModes));
  }
}

}  // namespace

std::vector<RelationReport> verify_car(int modes, LadderConvention convention) {
  check_modes(modes);
  const std::string suite =
      convention == LadderConvention::standard ? "car" : "car[no_sign]";
  std::vector<RelationReport> out;
  const Sparse id = scalar_identity(modes, 1), zero;
  for (int i = 0; i < modes; ++i) {
    for (int j = 0; j < modes; ++j) {
      auto ai = std::make_pair(Ladder::annihilate, i), aj = std::make_pair(Ladder::annihilate, j);
      auto ci = std::make_pair(Ladder::create, i), cj = std::make_pair(Ladder::create, j);
      out.push_back(report(suite, "{" + op_name(ai.first, i) + "," + op_name(cj.first, j) + "}",
                           i == j ? id : zero, product_sum(modes, ai, cj, cj, ai, convention),
                           modes));
      out.push_back(report(suite, "{" + op_name(ai.first, i) + "," + op_name(aj.first, j) + "}",
                           zero, product_sum(modes, ai, aj, aj, ai, convention), modes));
      out.push_back(report(suite, "{" + op_name(ci.first, i) + "," + op_name(cj.first, j) + "}",
                           zero, product_sum(modes, ci, cj, cj, ci, convention), modes));
    }
  }
  oplib::sort_reports(out);
  return out;
}

std::vector<RelationReport> verify_car_printed_variant(int modes) {
  check_modes(modes);
  std::vector<RelationReport> out;
  const Sparse id = scalar_identity(modes, 1), zero;
  for (int i = 0; i < modes; ++i) {
    for (int j = 0; j < modes; ++j) {
      auto ci = std::make_pair(Ladder::create, i), aj = std::make_pair(Ladder::annihilate, j);
      auto ai = std::make_pair(Ladder::annihilate, i), cj = std::make_pair(Ladder::create, j);
      out.push_back(report("car[printed]", op_name(ci.first, i) + op_name(aj.first, j) + "+" +
                                               op_name(ai.first, i) + op_name(cj.first, j),
                           i == j ? id : zero,
                           product_sum(modes, ci, aj, ai, cj, LadderConvention::standard), modes));
    }
  }
  oplib::sort_reports(out);
  return out;
}

RelationReport verify_number_operator(int modes) {
  check_modes(modes);
  Sparse actual, expected;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << modes); ++b) {
    FockState s{modes, b};
    for (int i = 0; i < modes; ++i) {
      const std::pair<Ladder, int> n[] = {{Ladder::create, i}, {Ladder::annihilate, i}};
      accumulate(actual, b, apply_sequence(s, n));
    }
    if (s.count()) expected[{b, b}] = s.count();
  }
  return report("car", "sum_i a*i ai = occupation", expected, actual, modes);
}

}  // namespace uvar::fock
