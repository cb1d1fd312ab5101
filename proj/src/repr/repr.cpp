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

#include "uvar/repr/repr.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <set>
#include <stdexcept>

#include "uvar/errors.hpp"
#include "uvar/weyl/substitution.hpp"

namespace uvar::repr {

using weyl::Variable;

namespace {

const Variable kU = Variable::u();
const Variable kV = Variable::v();

Monomial uv_monomial(int a, int b) {
  Monomial m;
  if (a > 0) m.add(kU, a);
  if (b > 0) m.add(kV, b);
  return m;
}

void require_holomorphic(const Poly& f) {
  f.for_each([](const Monomial& m, const Scalar&) {
    for (const auto& [v, k] : m.factors()) {
      if (!(v == kU || v == kV)) {
        throw NonHolomorphic("polynomial contains " + v.to_string());
      }
    }
  });
}

Eigen::MatrixXcd to_eigen(const Matrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_complex();
  }
  return out;
}

RepMatrix exact_rep(Matrix m) {
  RepMatrix r;
  r.exactness = Exactness::exact;
  r.numeric = to_eigen(m);
  r.exact = std::move(m);
  return r;
}

/// Column k = expansion of images[k] over the basis.
Matrix expand(const RepSpace& space, const std::vector<Poly>& images) {
  Matrix m(space.dim(), space.dim());
  for (std::size_t k = 0; k < images.size(); ++k) {
    images[k].for_each([&](const Monomial& mono, const Scalar& c) {
      int j = space.index_of(mono);
      if (j < 0) {
        throw NotInvariantSubspace("image of basis element " + std::to_string(k) +
                                   " contains " + Poly::monomial(Scalar(1), mono).to_string());
      }
      m(static_cast<std::size_t>(j), k) = c;
    });
  }
  return m;
}

RepMatrix substitution_rep(const Matrix& a, const RepSpace& space, bool transpose) {
  if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("group element must be 2x2");
  if (!(a.determinant() == Scalar(1))) throw BadDeterminant("det A = " + a.determinant().to_string());
  std::vector<Variable> uv{kU, kV};
  weyl::Substitution s = weyl::Substitution::from_matrix(transpose ? a.transpose() : a, uv, false);
  std::vector<Poly> images;
  for (const auto& m : space.basis()) images.push_back(weyl::substitute(Poly::monomial(1, m), s));
  return exact_rep(expand(space, images));
}

}  // namespace

RepSpace RepSpace::of_degree(int d) {
  int ds[] = {d};
  return span(ds);
}

RepSpace RepSpace::span(std::span<const int> degrees) {
  RepSpace s;
  std::set<int> seen;
  for (int d : degrees) {
    if (d < 0) throw std::invalid_argument("RepSpace: negative degree");
    if (!seen.insert(d).second) throw std::invalid_argument("RepSpace: repeated degree");
    s.degrees_.push_back(d);
    for (int k = 0; k <= d; ++k) {
      s.basis_.push_back(uv_monomial(d - k, k));
      s.norms2_.push_back(monomial_norm2(d - k, k));
      s.basis_degree_.push_back(d);
    }
  }
  return s;
}

int RepSpace::index_of(const Monomial& m) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (basis_[k] == m) return static_cast<int>(k);
  }
  return -1;
}

Scalar monomial_norm2(int a, int b) { return Scalar::rational(2, long(a + 1) * long(b + 1)); }

Scalar inner_product(const Poly& f, const Poly& g) {
  require_holomorphic(f);
  require_holomorphic(g);
  Scalar sum;
  f.for_each([&](const Monomial& m, const Scalar& c) {
    Scalar d = g.coeff(m);
    if (!d.is_zero()) sum += c.conj() * d * monomial_norm2(m.power(kU), m.power(kV));
  });
  return sum;
}

bool RepMatrix::approx(const Eigen::MatrixXcd& other, double tol) const {
  if (other.rows() != numeric.rows() || other.cols() != numeric.cols()) return false;
  return (numeric - other).cwiseAbs().maxCoeff() <= tol;
}

RepMatrix matrix_rep(const DiffOp& op, const RepSpace& space, bool normalized) {
  std::vector<Poly> images;
  for (const auto& m : space.basis()) images.push_back(weyl::apply(op, Poly::monomial(1, m)));
  Matrix m = expand(space, images);
  if (!normalized) return exact_rep(std::move(m));

  // e_k = m_k / |m_k| gives N_jk = M_jk |m_j| / |m_k|.
  RepMatrix r;
  r.exactness = Exactness::numeric;
  r.numeric = to_eigen(m);
  const auto& n2 = space.norms2();
  for (std::size_t j = 0; j < space.dim(); ++j) {
    for (std::size_t k = 0; k < space.dim(); ++k) {
      r.numeric(j, k) *= std::sqrt((n2[j] / n2[k]).re().get_d());
    }
  }
  return r;
}

std::vector<Matrix> random_su2(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  const Scalar i = Scalar::i();
  std::vector<Matrix> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    // Inverse stereographic projection of a rational point t in R^3 gives a
    // rational unit quaternion (a, b, c, e).
    Scalar t[3];
    for (auto& x : t) x = Scalar::rational(num(rng), den(rng));
    const Scalar s2 = t[0] * t[0] + t[1] * t[1] + t[2] * t[2];
    const Scalar d = s2 + Scalar(1);
    const Scalar a = Scalar(2) * t[0] / d, b = Scalar(2) * t[1] / d, c = Scalar(2) * t[2] / d;
    const Scalar e = (s2 - Scalar(1)) / d;
    out.push_back(Matrix{{a + i * b, c + i * e}, {-c + i * e, a - i * b}});
  }
  return out;
}

RepMatrix rep_of_group_element(const Matrix& a, const RepSpace& space) {
  return substitution_rep(a, space, true);
}

RepMatrix rep_of_substitution(const Matrix& a, const RepSpace& space) {
  return substitution_rep(a, space, false);
}

CasimirResult casimir_spectrum(const oplib::NamedOperatorSet& gens, const RepSpace& space) {
  CasimirResult r;
  for (const auto& [label, g] : gens.ops) r.casimir += g * g;
  r.matrix = matrix_rep(r.casimir, space).exact;

  r.matches_spin = true;
  for (std::size_t j = 0; j < space.dim(); ++j) {
    for (std::size_t k = 0; k < space.dim(); ++k) {
      if (j != k && !r.matrix(j, k).is_zero()) r.matches_spin = false;
    }
  }
  for (std::size_t k = 0; k < space.dim(); ++k) {
    int d = space.degree_of(k);
    const Scalar& lambda = r.matrix(k, k);
    if (!(lambda == Scalar::rational(long(d) * (d + 2), 4))) r.matches_spin = false;
    auto it = std::find_if(r.blocks.begin(), r.blocks.end(),
                           [&](const CasimirBlock& b) { return b.eigenvalue == lambda; });
    if (it == r.blocks.end()) {
      r.blocks.push_back({lambda, {}, 0});
      it = std::prev(r.blocks.end());
    }
    if (it->degrees.empty() || it->degrees.back() != d) it->degrees.push_back(d);
    ++it->dim;
  }
  return r;
}

std::vector<Scalar> spin_spectrum(const RepSpace& space) {
  auto s = oplib::build_operators(oplib::OperatorFamily::su2_spin);
  Matrix m = matrix_rep(s.at("Sz"), space).exact;
  if (!m.is_diagonal()) throw std::logic_error("S_z is not diagonal on the monomial basis");
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < space.dim(); ++k) out.push_back(m(k, k));
  return out;
}

}  // namespace uvar::repr
