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

#include "uvar/oplib/spacetime.hpp"

#include <random>
#include <stdexcept>

#include "uvar/errors.hpp"

namespace uvar::oplib {

using weyl::Variable;

RationalExpr::RationalExpr(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalExpr: zero denominator");
}

RationalExpr RationalExpr::constant(const Scalar& c) {
  return {Poly::constant(c), Poly::constant(1)};
}

bool RationalExpr::equals(const RationalExpr& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string RationalExpr::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

namespace {

void require_derivation(const DiffOp& d) {
  for (const auto& [key, c] : d.terms()) {
    if (key.derivs.total_degree() != 1) {
      throw NotADerivation("operator has a term of derivative order " +
                           std::to_string(key.derivs.total_degree()));
    }
  }
}

}  // namespace

RationalExpr derive(const DiffOp& d, const RationalExpr& f) {
  require_derivation(d);
  Poly num = weyl::apply(d, f.num()) * f.den() - f.num() * weyl::apply(d, f.den());
  return {num, f.den() * f.den()};
}

std::string_view to_string(IndexReading r) {
  return r == IndexReading::literal ? "literal" : "slot_site_swapped";
}

IndexReading parse_reading(std::string_view name) {
  if (name == "literal") return IndexReading::literal;
  if (name == "slot_site_swapped") return IndexReading::slot_site_swapped;
  throw std::invalid_argument("unknown index reading '" + std::string(name) + "'");
}

SpacetimeMap build_spacetime_map(const Matrix& eta, IndexReading reading) {
  const std::size_t n = eta.rows();
  if (n == 0 || eta.cols() != n) throw std::invalid_argument("eta must be a square matrix");
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!(eta(j, k) == -eta(k, j))) throw std::invalid_argument("eta is not antisymmetric");
    }
  }
  if (reading == IndexReading::literal && n != 2) {
    throw std::invalid_argument("the literal index reading needs n = 2");
  }
  const int ni = static_cast<int>(n);

  // The variable written x_{j2} (second slot) and x_{k1} (first slot).
  auto second = [&](weyl::Family f, int j) {
    return reading == IndexReading::literal ? Variable::make(f, j, 2) : Variable::make(f, 2, j);
  };
  auto first = [&](weyl::Family f, int k) {
    return reading == IndexReading::literal ? Variable::make(f, k, 1) : Variable::make(f, 1, k);
  };
  auto P = [](const Variable& v) { return Poly::var(v); };
  using weyl::Family;

  Poly w0, w3, w1, w2, y;
  for (int j = 1; j <= ni; ++j) {
    for (int k = 1; k <= ni; ++k) {
      const Scalar& e = eta(j - 1, k - 1);
      if (e.is_zero()) continue;
      Poly uj = P(second(Family::u, j)), vj = P(second(Family::v, j));
      Poly ubk = P(first(Family::u, k).bar()), vbk = P(first(Family::v, k).bar());
      w0 += e * (uj * ubk + vj * vbk);
      w3 += e * (uj * ubk - vj * vbk);
      w1 += e * (uj * vbk + vj * ubk);
      w2 += e * (-(uj * vbk) + vj * ubk);
      // Z is built from u_{1j}, v_{1j}: slot 1, site j in either reading.
      Poly u1j = P(Variable::u(1, j)), v1j = P(Variable::v(1, j));
      Poly u1k = P(Variable::u(1, k)), v1k = P(Variable::v(1, k));
      y += e.conj() * (u1j * v1k - v1j * u1k);
    }
  }
  const Scalar i = Scalar::i();
  Poly z = (y - weyl::conj(y)) * (-i);
  if (z.is_zero()) throw DegenerateEta("Z vanishes identically for this eta");

  SpacetimeMap st{eta, reading,
                  {RationalExpr(w0 + weyl::conj(w0), z), RationalExpr(w1 + weyl::conj(w1), z),
                   RationalExpr(i * (w2 - weyl::conj(w2)), z),
                   RationalExpr(w3 + weyl::conj(w3), z)},
                  z};
  return st;
}

Matrix random_eta(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_eta: n must be >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  for (;;) {
    Matrix eta(n, n);
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Scalar re = Scalar::rational(num(rng), den(rng));
        Scalar im = Scalar::rational(num(rng), den(rng));
        eta(j, k) = re + im * Scalar::i();
        eta(k, j) = -eta(j, k);
      }
    }
    try {
      build_spacetime_map(eta);
      return eta;
    } catch (const DegenerateEta&) {
    }
  }
}

Matrix default_eta() { return Matrix{{Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)}}; }

RelationReport verify_coordinate_relation(const DiffOp& p, const RationalExpr& x,
                                          const Scalar& expected, std::string suite,
                                          std::string relation) {
  require_derivation(p);
  Poly actual = weyl::apply(p, x.num()) * x.den() - x.num() * weyl::apply(p, x.den());
  Poly want = expected * (x.den() * x.den());
  return make_report(std::move(suite), std::move(relation), want.op(), actual.op());
}

std::vector<RelationReport> verify_spacetime_relations(const NamedOperatorSet& p,
                                                       const SpacetimeMap& st, std::string suite) {
  for (int mu = 0; mu <= 3; ++mu) require_derivation(p.at("P" + std::to_string(mu)));
  const Scalar i = Scalar::i();
  std::vector<RelationReport> out;
  for (int mu = 0; mu <= 3; ++mu) {
    for (int nu = 0; nu <= 3; ++nu) {
      Scalar c;
      if (mu == 0 && nu == 0) c = i;
      if (mu > 0 && mu == nu) c = -i;
      std::string id = "[P" + std::to_string(mu) + ",x" + std::to_string(nu) + "]";
      out.push_back(verify_coordinate_relation(p.at("P" + std::to_string(mu)), st.x[nu], c,
                                               suite, std::move(id)));
    }
  }
  sort_reports(out);
  return out;
}

}  // namespace uvar::oplib
