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

#include "uvar/oplib/flow.hpp"

#include <map>

#include "uvar/errors.hpp"

namespace uvar::oplib {

using weyl::Variable;

Poly exp_apply(const DiffOp& d, const Poly& f, int max_order, int* order) {
  Poly sum = f;
  Poly term = f;
  int top = 0;
  for (int k = 1; !term.is_zero(); ++k) {
    if (k > max_order) {
      throw NonTerminatingFlow("series has a nonzero term of order " + std::to_string(max_order));
    }
    term = weyl::apply(d, term) * Scalar::rational(1, k);
    if (!term.is_zero()) {
      sum += term;
      top = k;
    }
  }
  if (order) *order = top;
  return sum;
}

FlowReport translation_flow_check(const NamedOperatorSet& p, const std::array<Scalar, 4>& x,
                                  std::string suite) {
  const Scalar i = Scalar::i();
  DiffOp gen;
  for (int mu = 0; mu <= 3; ++mu) gen += (i * x[mu]) * p.at("P" + std::to_string(mu));

  FlowReport out;
  for (int s = 1; s <= p.sites; ++s) {
    Variable u1 = Variable::u(1, s), v1 = Variable::v(1, s);
    Variable u2 = Variable::u(2, s), v2 = Variable::v(2, s);
    Poly ub1 = Poly::var(u1.bar()), vb1 = Poly::var(v1.bar());
    const std::pair<Variable, Poly> cases[] = {
        {u1, Poly::var(u1)},
        {v1, Poly::var(v1)},
        {u2, Poly::var(u2) + (i * x[0]) * vb1 + (i * x[1]) * ub1 - x[2] * ub1 - (i * x[3]) * vb1},
        {v2, Poly::var(v2) - (i * x[0]) * ub1 - (i * x[1]) * vb1 + x[2] * vb1 - (i * x[3]) * ub1},
    };
    for (const auto& [v, expected] : cases) {
      int order = 0;
      Poly actual = exp_apply(gen, Poly::var(v), 3, &order);
      out.series_order = std::max(out.series_order, order);
      out.reports.push_back(make_report(suite, "exp(iPx)" + v.to_string(), expected.op(),
                                        actual.op()));
    }
  }
  return out;
}

std::optional<ScalingGenerator> search_scaling_generator(const NamedOperatorSet& p,
                                                         const DiffOp& o1,
                                                         std::span<const DiffOp> candidates,
                                                         const Scalar& lambda) {
  if (candidates.empty()) return std::nullopt;
  const std::size_t k = candidates.size();

  // One block of rows per constraint [G, T] = rhs; one row per term key.
  std::vector<std::pair<const DiffOp*, DiffOp>> constraints;
  for (int mu = 0; mu <= 3; ++mu) {
    const DiffOp& pm = p.at("P" + std::to_string(mu));
    constraints.emplace_back(&pm, (Scalar::i() * lambda) * pm);
  }
  constraints.emplace_back(&o1, DiffOp{});

  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (const auto& [target, want] : constraints) {
    std::vector<DiffOp> cols;
    cols.reserve(k);
    std::map<weyl::TermKey, std::size_t> keys;
    for (const auto& c : candidates) {
      cols.push_back(weyl::commutator(c, *target));
      for (const auto& [key, _] : cols.back().terms()) keys.emplace(key, 0);
    }
    for (const auto& [key, _] : want.terms()) keys.emplace(key, 0);
    for (const auto& [key, _] : keys) {
      std::vector<Scalar> row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = cols[j].coeff(key);
      rows.push_back(std::move(row));
      rhs.push_back(want.coeff(key));
    }
  }

  Matrix a(rows.size(), k);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < k; ++j) a(r, j) = rows[r][j];
  }

  std::vector<Scalar> coeffs;
  if (lambda.is_zero()) {
    auto null = a.nullspace();
    if (null.empty()) return std::nullopt;
    coeffs = null.front();
  } else {
    auto sol = a.solve(rhs);
    if (!sol) return std::nullopt;
    coeffs = *sol;
  }
  DiffOp g;
  for (std::size_t j = 0; j < k; ++j) g += coeffs[j] * candidates[j];
  if (g.is_zero()) return std::nullopt;
  return ScalingGenerator{std::move(coeffs), std::move(g)};
}

std::vector<DiffOp> number_operator_candidates(int n) {
  std::vector<DiffOp> out;
  for (int b = 1; b <= 2; ++b) {
    for (int s = 1; s <= n; ++s) {
      for (const Variable& v : {Variable::u(b, s), Variable::v(b, s)}) {
        out.push_back(DiffOp::var(v) * DiffOp::deriv(v));
        out.push_back(DiffOp::var(v.bar()) * DiffOp::deriv(v.bar()));
      }
    }
  }
  return out;
}

}  // namespace uvar::oplib
