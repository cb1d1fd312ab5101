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

// Hand-rolled random generators for property tests.

#pragma once

#include <random>
#include <vector>

#include "uvar/weyl/diffop.hpp"
#include "uvar/weyl/linalg.hpp"

namespace uvar::testing {

using weyl::DiffOp;
using weyl::Monomial;
using weyl::Poly;
using weyl::Scalar;
using weyl::Variable;

inline std::vector<Variable> small_pool() {
  return {Variable::u(), Variable::v(), Variable::u().bar(), Variable::v().bar(), Variable::x()};
}

inline Scalar random_scalar(std::mt19937_64& rng, bool gaussian = true) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  Scalar re = Scalar::rational(num(rng), den(rng));
  if (!gaussian) return re;
  return re + Scalar::rational(num(rng), den(rng)) * Scalar::i();
}

inline Monomial random_monomial(std::mt19937_64& rng, const std::vector<Variable>& pool,
                                int max_factors, int max_power) {
  std::uniform_int_distribution<int> nf(0, max_factors);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> pw(1, max_power);
  Monomial m;
  int n = nf(rng);
  for (int k = 0; k < n; ++k) m.add(pool[pick(rng)], pw(rng));
  return m;
}

/// Random operator with at most `max_terms` terms.
inline DiffOp random_op(std::mt19937_64& rng, const std::vector<Variable>& pool, int max_terms = 6,
                        int max_power = 2) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  DiffOp op;
  int n = nt(rng);
  for (int k = 0; k < n; ++k) {
    op += DiffOp::term(random_scalar(rng), random_monomial(rng, pool, 2, max_power),
                       random_monomial(rng, pool, 2, max_power));
  }
  return op;
}

/// Random first-order operator sum_k c_k m_k d/dx_k with polynomial m_k.
inline DiffOp random_vector_field(std::mt19937_64& rng, const std::vector<Variable>& pool,
                                  int max_terms = 4) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  DiffOp op;
  int n = nt(rng);
  for (int k = 0; k < n; ++k) {
    op += DiffOp::term(random_scalar(rng), random_monomial(rng, pool, 2, 2),
                       Monomial{{pool[pick(rng)], 1}});
  }
  return op;
}

inline Poly random_poly(std::mt19937_64& rng, const std::vector<Variable>& pool,
                        int max_degree = 4, int max_terms = 5) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Poly f;
  int n = nt(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m;
    int d = deg(rng);
    for (int j = 0; j < d; ++j) m.add(pool[pick(rng)], 1);
    f += Poly::monomial(random_scalar(rng), m);
  }
  return f;
}

/// Exact SU(2) element from a rational point on the 3-sphere, obtained by
/// inverse stereographic projection of a random rational point of R^3.
inline weyl::Matrix random_su2(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-7, 7);
  std::uniform_int_distribution<long> den(1, 5);
  Scalar t1 = Scalar::rational(num(rng), den(rng));
  Scalar t2 = Scalar::rational(num(rng), den(rng));
  Scalar t3 = Scalar::rational(num(rng), den(rng));
  Scalar s2 = t1 * t1 + t2 * t2 + t3 * t3;
  Scalar d = s2 + 1;
  Scalar a = Scalar(2) * t1 / d, b = Scalar(2) * t2 / d, c = Scalar(2) * t3 / d;
  Scalar e = (s2 - 1) / d;
  Scalar i = Scalar::i();
  return weyl::Matrix{{a + i * b, c + i * e}, {-c + i * e, a - i * b}};
}

}  // namespace uvar::testing
