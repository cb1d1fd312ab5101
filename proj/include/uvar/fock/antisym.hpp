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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uvar/weyl/scalar.hpp"

namespace uvar::fock {

using weyl::Scalar;

/// Opaque ordered tuple standing for the quantum numbers of one orbital.
struct OrbitalLabel {
  std::vector<std::string> fields;

  static OrbitalLabel named(std::string name) { return {{std::move(name)}}; }
  std::string to_string() const;

  friend auto operator<=>(const OrbitalLabel&, const OrbitalLabel&) = default;
  friend bool operator==(const OrbitalLabel&, const OrbitalLabel&) = default;
};

/// Product of one-orbital kets, each in its own variable set:
/// amplitude * |l_1>_{s_1} |l_2>_{s_2} ...
struct LabeledKet {
  std::vector<std::pair<OrbitalLabel, int>> factors;
  Scalar amplitude{1};

  /// Throws std::invalid_argument if a variable set appears twice.
  void validate() const;
  std::string to_string() const;
};

/// normalization * sum_t c_t |t>, with the normalization kept exactly as
/// its square. Product kets are keyed by set index -> label. An empty term
/// map is the zero vector.
class KetSum {
 public:
  using Assignment = std::map<int, OrbitalLabel>;

  KetSum() = default;

  const std::map<Assignment, Scalar>& terms() const { return terms_; }
  const Scalar& normalization_squared() const { return norm2_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Assignment& a, const Scalar& c);
  void set_normalization_squared(const Scalar& n2) { norm2_ = n2; }

  /// Squared norm, taking distinct product kets as orthonormal.
  Scalar norm2() const;
  /// Coefficient of a product ket before normalization.
  Scalar coeff(const Assignment& a) const;

  /// Swap which variable sets carry which label.
  KetSum exchange_sets(int a, int b) const;
  /// Swap two labels wherever they occur.
  KetSum exchange_labels(const OrbitalLabel& a, const OrbitalLabel& b) const;
  /// Scalar multiple, for comparisons like exchanged == -original.
  KetSum scaled(const Scalar& c) const;

  /// Equal as vectors: normalization folded in by comparing n2 * c c'.
  bool same_vector(const KetSum& o) const;

  std::string to_string() const;

  friend bool operator==(const KetSum&, const KetSum&) = default;

 private:
  std::map<Assignment, Scalar> terms_;
  Scalar norm2_{1};
};

/// (1/sqrt k!) sum over permutations sigma of sign(sigma) times the product
/// with labels moved across the variable sets. Repeated labels cancel.
KetSum antisymmetrize(const LabeledKet& product);

/// Same without signs.
KetSum symmetrize(const LabeledKet& product);

}  // namespace uvar::fock
