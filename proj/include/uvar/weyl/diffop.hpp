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
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uvar/weyl/scalar.hpp"
#include "uvar/weyl/variable.hpp"

namespace uvar::weyl {

/// Largest power or derivative order a term may carry.
inline constexpr int kMaxPower = 1 << 16;

/// Sorted multiset of variables with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  Monomial(std::initializer_list<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  int power(const Variable& v) const;
  int total_degree() const;
  int max_power() const;

  /// Multiplies by v^k (k may be negative as long as the result stays >= 0).
  void add(const Variable& v, int k);
  Monomial operator*(const Monomial& o) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Key of one normal-ordered term: all multiplications act after all derivatives.
struct TermKey {
  Monomial mults;
  Monomial derivs;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Normal-ordered polynomial-coefficient differential operator with exact
/// Gaussian-rational coefficients. Zero coefficients are never stored, so the
/// zero operator is the empty map and equality is structural.
class DiffOp {
 public:
  using Terms = std::map<TermKey, Scalar>;

  DiffOp() = default;
  static DiffOp constant(const Scalar& c);
  static DiffOp var(const Variable& v);
  static DiffOp deriv(const Variable& v, int order = 1);
  static DiffOp term(const Scalar& c, Monomial mults, Monomial derivs = {});

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total derivative order over all terms (0 for polynomials).
  int order() const;
  bool is_polynomial() const { return order() == 0; }
  /// Coefficient of the given key, zero if absent.
  Scalar coeff(const TermKey& key) const;

  void add_term(const TermKey& key, const Scalar& c);

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const Scalar& c);
  DiffOp operator-() const;
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const Scalar& c) { return a *= c; }
  friend DiffOp operator*(const Scalar& c, DiffOp a) { return a *= c; }
  /// Normal-ordered composition a∘b.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  /// Applies `fn` to every variable (multiplications and derivatives alike).
  DiffOp rename(const std::function<Variable(const Variable&)>& fn) const;

  /// Plain-text form documented in docs/operator-text-format.md.
  std::string to_string() const;
  static DiffOp parse(std::string_view text);

 private:
  Terms terms_;
};

/// A DiffOp with no derivative factors.
class Poly {
 public:
  Poly() = default;
  /// Throws std::invalid_argument if `op` contains derivatives.
  explicit Poly(DiffOp op);
  static Poly constant(const Scalar& c) { return Poly(DiffOp::constant(c)); }
  static Poly var(const Variable& v) { return Poly(DiffOp::var(v)); }
  static Poly monomial(const Scalar& c, Monomial m) { return Poly(DiffOp::term(c, std::move(m))); }

  const DiffOp& op() const { return op_; }
  bool is_zero() const { return op_.is_zero(); }
  std::size_t size() const { return op_.size(); }
  Scalar coeff(const Monomial& m) const { return op_.coeff({m, {}}); }
  /// Iterates (monomial, coefficient) pairs in canonical order.
  void for_each(const std::function<void(const Monomial&, const Scalar&)>& fn) const;

  Poly& operator+=(const Poly& o) { op_ += o.op_; return *this; }
  Poly& operator-=(const Poly& o) { op_ -= o.op_; return *this; }
  Poly& operator*=(const Scalar& c) { op_ *= c; return *this; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b) { return Poly(a.op_ * b.op_); }
  Poly operator-() const { return Poly(-op_); }
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const { return op_.to_string(); }

 private:
  DiffOp op_;
};

/// mul(a, b) - mul(b, a).
DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// Image of f under op.
Poly apply(const DiffOp& op, const Poly& f);

/// Hermitian adjoint: (AB)* = B*A*, x* = conj(x), (d/dx)* = -d/d conj(x),
/// coefficients conjugated. For real variables (d/dx)* = -d/dx.
DiffOp adjoint(const DiffOp& op);

/// Complex conjugation of a polynomial: conjugates coefficients and variables.
Poly conj(const Poly& f);

/// Keeps only the terms of exactly the given total derivative order.
DiffOp part_of_order(const DiffOp& op, int order);

}  // namespace uvar::weyl
