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

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "uvar/weyl/diffop.hpp"
#include "uvar/weyl/linalg.hpp"

namespace uvar::oplib {

using weyl::DiffOp;
using weyl::Matrix;
using weyl::Scalar;

enum class OperatorFamily {
  O1,            ///< single-set harmonic-oscillator-like operator
  lorentz,       ///< J1..J3, K1..K3 acting on every (slot, site)
  translations,  ///< P0..P3
  su_n,          ///< T1..Tk from hermitian traceless tau matrices
  xyz_angular,   ///< Lx, Ly, Lz on real x, y, z
  su2_spin,      ///< Sx, Sy, Sz on u, v and conjugates
  b1_laplacian,  ///< O = d_u d_ubar + d_v d_vbar
};

/// How the conjugate terms of K2 are read. `printed` takes the formula as
/// written; `k2_conjugate_flipped` negates its two conjugate-variable terms.
enum class LorentzReading { printed, k2_conjugate_flipped };

/// Labeled operators built for `sites` sites. Labels are kept sorted.
struct NamedOperatorSet {
  std::string name;
  int sites = 1;
  std::map<std::string, DiffOp> ops;
  /// True for sets that were repaired by the toolkit rather than transcribed.
  bool reconstructed = false;

  /// Throws UnknownLabel.
  const DiffOp& at(std::string_view label) const;
  bool contains(std::string_view label) const { return ops.count(std::string(label)) != 0; }
};

std::string_view to_string(OperatorFamily f);
OperatorFamily parse_family(std::string_view name);

/// Builds the named operators exactly as printed, summing b over {1, 2} and
/// the site index over 1..n. `tau` is required (and only used) for su_n;
/// each matrix must be n x n, hermitian and traceless, else BadTau.
NamedOperatorSet build_operators(OperatorFamily which, int n = 1,
                                 std::span<const Matrix> tau = {},
                                 LorentzReading reading = LorentzReading::printed);

/// Pauli matrices, the default tau for su_n with n = 2.
std::vector<Matrix> pauli_matrices();

/// Translations with P2 replaced by -i [J3, P1], which is what [J3, P1] = i P2
/// forces given the printed J3 and P1. Flagged `reconstructed`.
NamedOperatorSet reconstructed_translations(int n = 1);

/// Printed translations with one variable of P0 swapped (conj(v1) d/du2 at
/// site 1 becomes conj(v2) d/du2). A known-bad fixture for the P table.
NamedOperatorSet mutated_translations(int n = 1);

/// Union of two sets; labels must not collide.
NamedOperatorSet merge(const NamedOperatorSet& a, const NamedOperatorSet& b, std::string name);

/// Copy of `set` where the `term`-th term (canonical order) of operator
/// `label` has its coefficient multiplied by `factor`. Test fixture helper.
NamedOperatorSet mutate_coefficient(const NamedOperatorSet& set, std::string_view label,
                                    std::size_t term, const Scalar& factor);

}  // namespace uvar::oplib
