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

#include <doctest.h>

#include <map>
#include <random>
#include <string>

#include "generators.hpp"
#include "uvar/errors.hpp"
#include "uvar/weyl/diffop.hpp"
#include "uvar/weyl/linalg.hpp"
#include "uvar/weyl/substitution.hpp"

using namespace uvar::weyl;
using uvar::testing::random_op;
using uvar::testing::random_poly;
using uvar::testing::random_vector_field;
using uvar::testing::small_pool;

namespace {

// Independent oracle: polynomials as maps from exponent tables (keyed by the
// variable's text) to coefficients. Operators are read term by term and
// applied by repeated single differentiation, never through DiffOp algebra.
using Exps = std::map<std::string, int>;
using BrutePoly = std::map<Exps, Scalar>;

void brute_add(BrutePoly& p, const Exps& e, const Scalar& c) {
  Scalar& slot = p[e];
  slot += c;
  if (slot.is_zero()) p.erase(e);
}

BrutePoly brute_d(const BrutePoly& f, const std::string& var) {
  BrutePoly out;
  for (const auto& [e, c] : f) {
    auto it = e.find(var);
    if (it == e.end()) continue;
    Exps e2 = e;
    int k = it->second;
    if (k == 1) {
      e2.erase(var);
    } else {
      e2[var] = k - 1;
    }
    brute_add(out, e2, c * Scalar(k));
  }
  return out;
}

BrutePoly brute_apply(const DiffOp& op, const BrutePoly& f) {
  BrutePoly out;
  for (const auto& [key, c] : op.terms()) {
    BrutePoly g = f;
    for (const auto& [v, k] : key.derivs.factors()) {
      for (int j = 0; j < k; ++j) g = brute_d(g, v.to_string());
    }
    for (const auto& [e, gc] : g) {
      Exps e2 = e;
      for (const auto& [v, k] : key.mults.factors()) e2[v.to_string()] += k;
      brute_add(out, e2, gc * c);
    }
  }
  return out;
}

BrutePoly to_brute(const Poly& f) {
  BrutePoly out;
  f.for_each([&](const Monomial& m, const Scalar& c) {
    Exps e;
    for (const auto& [v, k] : m.factors()) e[v.to_string()] = k;
    brute_add(out, e, c);
  });
  return out;
}

Poly mono_uv(int a, int b) {
  Monomial m;
  m.add(Variable::u(), a);
  m.add(Variable::v(), b);
  return Poly::monomial(1, m);
}

const Variable u = Variable::u();
const Variable v = Variable::v();
DiffOp U() { return DiffOp::var(u); }
DiffOp V() { return DiffOp::var(v); }
DiffOp Du() { return DiffOp::deriv(u); }
DiffOp Dv() { return DiffOp::deriv(v); }
const Scalar I = Scalar::i();

}  // namespace

TEST_CASE("scalar arithmetic is exact and text round-trips") {
  Scalar a = Scalar::rational(1, 3) + Scalar::rational(-2, 5) * I;
  Scalar b = Scalar::rational(3, 7) - I;
  CHECK((a * b) / b == a);
  CHECK(a - a == Scalar());
  CHECK(I * I == Scalar(-1));
  for (const Scalar& s : {a, b, Scalar(), Scalar(5), I, -I, Scalar::rational(-2, 3) * I}) {
    CHECK(Scalar::parse(s.to_string()) == s);
  }
  CHECK(Scalar::rational(2, 4).to_string() == "1/2");
  CHECK_THROWS_AS(Scalar(1) / Scalar(), std::domain_error);
}

TEST_CASE("variables print and parse") {
  Variable w = Variable::u(1, 2).bar().in_set(3);
  CHECK(w.to_string() == "ubar1_2@3");
  CHECK(Variable::parse("ubar1_2@3") == w);
  CHECK(Variable::x().conj() == Variable::x());
  CHECK(Variable::parse("v") == v);
  CHECK_THROWS_AS(Variable::parse("xbar"), uvar::ParseError);
  CHECK_THROWS_AS(Variable::parse("q"), uvar::ParseError);
}

TEST_CASE("mul: canonical commutation and zero") {
  CHECK(Du() * U() == U() * Du() + DiffOp::constant(1));
  CHECK((DiffOp() * Du()).is_zero());
  // conjugate pairs are independent: d/dubar commutes with u
  CHECK(commutator(DiffOp::deriv(u.bar()), U()).is_zero());
}

TEST_CASE("mul: (u du)(u dv) matches brute-force application") {
  DiffOp a = U() * Du();
  DiffOp b = U() * Dv();
  DiffOp ab = a * b;
  DiffOp expected = U() * Dv() + DiffOp::term(1, Monomial{{u, 2}}, Monomial{{u, 1}, {v, 1}});
  CHECK(ab == expected);
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 3; ++q) {
      BrutePoly f = to_brute(mono_uv(p, q));
      CHECK(brute_apply(expected, f) == brute_apply(a, brute_apply(b, f)));
    }
  }
}

TEST_CASE("commutator examples") {
  CHECK(commutator(Du(), U()) == DiffOp::constant(1));
  DiffOp h = (U() * Du() - V() * Dv()) * Scalar::rational(1, 2);
  DiffOp e = U() * Dv();
  DiffOp c = commutator(h, e);
  CHECK(c == e);
  // oracle: action on every monomial of degree <= 3
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; p + q <= 3; ++q) {
      BrutePoly f = to_brute(mono_uv(p, q));
      BrutePoly lhs = brute_apply(h, brute_apply(e, f));
      for (const auto& [k, val] : brute_apply(e, brute_apply(h, f))) brute_add(lhs, k, -val);
      CHECK(lhs == brute_apply(e, f));
    }
  }
}

TEST_CASE("apply examples") {
  CHECK(apply(Du(), mono_uv(2, 0)) == mono_uv(1, 0) * Scalar(2));
  DiffOp laplacian = Du() * DiffOp::deriv(u.bar()) + Dv() * DiffOp::deriv(v.bar());
  CHECK(apply(laplacian, mono_uv(2, 1)).is_zero());
  CHECK_THROWS_AS(Poly{Du()}, std::invalid_argument);
}

TEST_CASE("adjoint examples") {
  Variable x = Variable::x(), y = Variable::y();
  DiffOp lz = I * (DiffOp::var(x) * DiffOp::deriv(y) - DiffOp::var(y) * DiffOp::deriv(x));
  CHECK(adjoint(lz) == lz);
  CHECK(adjoint(DiffOp::var(x) * DiffOp::deriv(y)) == -(DiffOp::var(x) * DiffOp::deriv(y)));
  CHECK(adjoint(U()) == DiffOp::var(u.bar()));
  CHECK(adjoint(Du()) == -DiffOp::deriv(u.bar()));
  // (d/du u)* = ubar (-d/dubar)
  CHECK(adjoint(Du() * U()) == -(DiffOp::var(u.bar()) * DiffOp::deriv(u.bar())));
}

TEST_CASE("text format round-trips and reads documented examples") {
  DiffOp op = DiffOp::parse("1/2 * u * d[v] - 1/2i * ubar1_2^2 * d[vbar1_2] + (1-2i)");
  CHECK(op.size() == 3);
  CHECK(DiffOp::parse(op.to_string()) == op);
  CHECK(DiffOp::parse("0").is_zero());
  CHECK(DiffOp::parse("-3 * d[u]^2") == DiffOp::deriv(u, 2) * Scalar(-3));
  CHECK_THROWS_AS(DiffOp::parse("1 * q"), uvar::ParseError);
  CHECK_THROWS_AS(DiffOp::parse("1 +"), uvar::ParseError);

  std::mt19937_64 rng(11);
  auto pool = small_pool();
  for (int trial = 0; trial < 50; ++trial) {
    DiffOp r = random_op(rng, pool);
    CHECK(DiffOp::parse(r.to_string()) == r);
  }
}

TEST_CASE("power overflow is an error") {
  DiffOp big = DiffOp::term(1, Monomial{{u, kMaxPower}});
  CHECK_THROWS_AS(big * U(), uvar::PowerOverflow);
}

TEST_CASE("property: ring axioms") {
  std::mt19937_64 rng(2026);
  auto pool = small_pool();
  for (int trial = 0; trial < 40; ++trial) {
    DiffOp a = random_op(rng, pool), b = random_op(rng, pool), c = random_op(rng, pool);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("property: apply agrees with composition and with the brute oracle") {
  std::mt19937_64 rng(7);
  auto pool = small_pool();
  for (int trial = 0; trial < 40; ++trial) {
    DiffOp a = random_op(rng, pool), b = random_op(rng, pool);
    Poly f = random_poly(rng, pool, 4);
    CHECK(apply(a * b, f) == apply(a, apply(b, f)));
    CHECK(to_brute(apply(a, f)) == brute_apply(a, to_brute(f)));
  }
}

TEST_CASE("property: Jacobi identity for vector fields") {
  std::mt19937_64 rng(99);
  auto pool = small_pool();
  for (int trial = 0; trial < 40; ++trial) {
    DiffOp a = random_vector_field(rng, pool), b = random_vector_field(rng, pool),
           c = random_vector_field(rng, pool);
    DiffOp j = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
               commutator(commutator(c, a), b);
    CHECK(j.is_zero());
  }
}

TEST_CASE("property: adjoint is an involutive anti-homomorphism") {
  std::mt19937_64 rng(5);
  auto pool = small_pool();
  for (int trial = 0; trial < 40; ++trial) {
    DiffOp a = random_op(rng, pool), b = random_op(rng, pool);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
  }
}

TEST_CASE("substitute: binomial expansion") {
  Scalar a11 = Scalar::rational(2, 3), a12 = Scalar::rational(-1, 5) + I;
  Substitution s;
  s.set(u, {{u, a11}, {v, a12}});
  Poly got = substitute(mono_uv(2, 0), s);
  Poly want = mono_uv(2, 0) * (a11 * a11) + mono_uv(1, 1) * (Scalar(2) * a11 * a12) +
              mono_uv(0, 2) * (a12 * a12);
  CHECK(got == want);
}

TEST_CASE("substitute: singular operator substitution is rejected") {
  Substitution s;
  s.set(u, {{v, 1}});
  CHECK_THROWS_AS(substitute(Du(), s), uvar::SingularSubstitution);
  // polynomials accept any linear map
  CHECK(substitute(mono_uv(1, 0), s) == mono_uv(0, 1));
}

TEST_CASE("property: substitute intertwines operators with the change of variables") {
  std::mt19937_64 rng(17);
  auto pool = small_pool();
  Matrix m{{Scalar(2), Scalar(1) + I}, {Scalar::rational(1, 3), Scalar(-1)}};
  std::vector<Variable> uv{u, v};
  Substitution s = Substitution::from_matrix(m, uv);
  for (int trial = 0; trial < 25; ++trial) {
    DiffOp op = random_op(rng, pool);
    Poly f = random_poly(rng, pool, 3);
    // (O f)(Mx) == O'(f(Mx))
    CHECK(substitute(apply(op, f), s) == apply(substitute(op, s), substitute(f, s)));
  }
}

TEST_CASE("property: substitution composes") {
  std::mt19937_64 rng(23);
  auto pool = small_pool();
  std::vector<Variable> uv{u, v};
  for (int trial = 0; trial < 15; ++trial) {
    Matrix a = uvar::testing::random_su2(rng);
    Matrix b = uvar::testing::random_su2(rng);
    Substitution sa = Substitution::from_matrix(a, uv), sb = Substitution::from_matrix(b, uv);
    // As maps of variables, x -> A x followed by x -> B x is x -> A B x.
    Substitution sab = Substitution::from_matrix(a * b, uv);
    DiffOp op = random_op(rng, pool, 4);
    Poly f = random_poly(rng, pool, 3);
    CHECK(substitute(substitute(op, sa), sb) == substitute(op, sa.then(sb)));
    CHECK(substitute(substitute(op, sa), sb) == substitute(op, sab));
    CHECK(substitute(substitute(f, sa), sb) == substitute(f, sab));
  }
}

TEST_CASE("matrix: inverse, nullspace, solve") {
  Matrix m{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
  CHECK_FALSE(m.inverse().has_value());
  CHECK(m.rank() == 1);
  auto ns = m.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == Scalar(-2));
  CHECK(ns[0][1] == Scalar(1));
  CHECK(m.solve({Scalar(1), Scalar(2)}).has_value());
  CHECK_FALSE(m.solve({Scalar(1), Scalar(3)}).has_value());
  Matrix g{{Scalar(1), I}, {Scalar(2), Scalar(3)}};
  CHECK(*g.inverse() * g == Matrix::identity(2));
  CHECK(g.determinant() == Scalar(3) - Scalar(2) * I);
}
