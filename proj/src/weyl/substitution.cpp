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

#include "uvar/weyl/substitution.hpp"

#include <set>

#include "uvar/errors.hpp"

namespace uvar::weyl {

Substitution& Substitution::set(const Variable& v, LinComb image) {
  images_[v] = std::move(image);
  return *this;
}

Poly Substitution::image(const Variable& v) const {
  auto it = images_.find(v);
  if (it == images_.end()) return Poly::var(v);
  Poly p;
  for (const auto& [w, c] : it->second) p += Poly::var(w) * c;
  return p;
}

Substitution Substitution::with_conjugates() const {
  Substitution r = *this;
  for (const auto& [v, image] : images_) {
    if (v.kind() != Kind::complex || images_.count(v.conj())) continue;
    LinComb cimage;
    cimage.reserve(image.size());
    for (const auto& [w, c] : image) cimage.emplace_back(w.conj(), c.conj());
    r.images_[v.conj()] = std::move(cimage);
  }
  return r;
}

Substitution Substitution::from_matrix(const Matrix& a, std::span<const Variable> vars,
                                       bool conjugates) {
  if (a.rows() != vars.size() || a.cols() != vars.size()) {
    throw std::invalid_argument("Substitution::from_matrix: shape mismatch");
  }
  Substitution s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    LinComb image;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (!a(i, j).is_zero()) image.emplace_back(vars[j], a(i, j));
    }
    s.set(vars[i], std::move(image));
  }
  return conjugates ? s.with_conjugates() : s;
}

Substitution Substitution::then(const Substitution& next) const {
  Substitution r = next;
  for (const auto& [v, image] : images_) {
    Poly composed;
    for (const auto& [w, c] : image) composed += next.image(w) * c;
    LinComb lc;
    composed.for_each([&](const Monomial& m, const Scalar& c) {
      if (m.total_degree() != 1) throw std::logic_error("Substitution::then: non-linear image");
      lc.emplace_back(m.factors().front().first, c);
    });
    r.images_[v] = std::move(lc);
  }
  return r;
}

Poly substitute(const Poly& f, const Substitution& s) {
  Poly out;
  f.for_each([&](const Monomial& m, const Scalar& c) {
    Poly term = Poly::constant(c);
    for (const auto& [v, k] : m.factors()) {
      Poly img = s.image(v);
      for (int p = 0; p < k; ++p) term = term * img;
    }
    out += term;
  });
  return out;
}

DiffOp substitute(const DiffOp& op, const Substitution& s) {
  if (s.empty()) return op;
  std::set<Variable> touched;
  for (const auto& [v, image] : s.images()) {
    touched.insert(v);
    for (const auto& [w, c] : image) touched.insert(w);
  }
  std::vector<Variable> vars(touched.begin(), touched.end());
  std::map<Variable, std::size_t> index;
  for (std::size_t k = 0; k < vars.size(); ++k) index[vars[k]] = k;

  Matrix m(vars.size(), vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = s.images().find(vars[i]);
    if (it == s.images().end()) {
      m(i, i) = 1;
      continue;
    }
    for (const auto& [w, c] : it->second) m(i, index.at(w)) += c;
  }
  auto minv = m.inverse();
  if (!minv) throw SingularSubstitution("substitution is not invertible on its variables");

  auto deriv_image = [&](const Variable& v) {
    auto it = index.find(v);
    if (it == index.end()) return DiffOp::deriv(v);
    DiffOp d;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const Scalar& c = (*minv)(k, it->second);
      if (!c.is_zero()) d += DiffOp::deriv(vars[k]) * c;
    }
    return d;
  };

  DiffOp out;
  for (const auto& [key, c] : op.terms()) {
    DiffOp mults = DiffOp::constant(c);
    for (const auto& [v, k] : key.mults.factors()) {
      DiffOp img = s.image(v).op();
      for (int p = 0; p < k; ++p) mults = mults * img;
    }
    DiffOp derivs = DiffOp::constant(1);
    for (const auto& [v, k] : key.derivs.factors()) {
      DiffOp img = deriv_image(v);
      for (int p = 0; p < k; ++p) derivs = derivs * img;
    }
    out += mults * derivs;
  }
  return out;
}

}  // namespace uvar::weyl
