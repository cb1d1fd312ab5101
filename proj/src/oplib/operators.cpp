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

#include "uvar/oplib/operators.hpp"

#include <iterator>
#include <stdexcept>

#include "uvar/errors.hpp"

namespace uvar::oplib {

using weyl::Variable;

const DiffOp& NamedOperatorSet::at(std::string_view label) const {
  auto it = ops.find(std::string(label));
  if (it == ops.end()) {
    throw UnknownLabel("operator set '" + name + "' has no label '" + std::string(label) + "'");
  }
  return it->second;
}

std::string_view to_string(OperatorFamily f) {
  switch (f) {
    case OperatorFamily::O1: return "O1";
    case OperatorFamily::lorentz: return "lorentz";
    case OperatorFamily::translations: return "translations";
    case OperatorFamily::su_n: return "su_n";
    case OperatorFamily::xyz_angular: return "xyz_angular";
    case OperatorFamily::su2_spin: return "su2_spin";
    case OperatorFamily::b1_laplacian: return "b1_laplacian";
  }
  return "?";
}

OperatorFamily parse_family(std::string_view name) {
  for (auto f : {OperatorFamily::O1, OperatorFamily::lorentz, OperatorFamily::translations,
                 OperatorFamily::su_n, OperatorFamily::xyz_angular, OperatorFamily::su2_spin,
                 OperatorFamily::b1_laplacian}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown operator family '" + std::string(name) + "'");
}

namespace {

DiffOp X(const Variable& v) { return DiffOp::var(v); }
DiffOp D(const Variable& v) { return DiffOp::deriv(v); }
/// x d/dy
DiffOp XD(const Variable& x, const Variable& y) { return X(x) * D(y); }

const Scalar kI = Scalar::i();
const Scalar kHalf = Scalar::rational(1, 2);

DiffOp build_o1(int n) {
  DiffOp o;
  for (int i = 1; i <= n; ++i) {
    Variable u1 = Variable::u(1, i), v1 = Variable::v(1, i);
    Variable u2 = Variable::u(2, i), v2 = Variable::v(2, i);
    DiffOp second = D(u1) * D(v2) - D(v1) * D(u2) + D(u1.bar()) * D(v2.bar()) -
                    D(v1.bar()) * D(u2.bar());
    DiffOp mult = X(u1) * X(v2) - X(v1) * X(u2) + X(u1.bar()) * X(v2.bar()) -
                  X(v1.bar()) * X(u2.bar());
    o += mult - second;
  }
  return o;
}

NamedOperatorSet build_lorentz(int n, LorentzReading reading) {
  DiffOp j1, j2, j3, k1, k2, k3;
  for (int b = 1; b <= 2; ++b) {
    for (int i = 1; i <= n; ++i) {
      Variable u = Variable::u(b, i), v = Variable::v(b, i);
      Variable ub = u.bar(), vb = v.bar();
      j1 += kHalf * (XD(u, v) + XD(v, u) - XD(ub, vb) - XD(vb, ub));
      j2 += (kI * kHalf) * (-XD(u, v) + XD(v, u) - XD(ub, vb) + XD(vb, ub));
      j3 += kHalf * (XD(u, u) - XD(v, v) - XD(ub, ub) + XD(vb, vb));
      k1 += (kI * kHalf) * (XD(u, v) + XD(v, u) + XD(ub, vb) + XD(vb, ub));
      if (reading == LorentzReading::printed) {
        k2 += -kHalf * (-XD(u, v) + XD(v, u) + XD(ub, vb) - XD(vb, ub));
      } else {
        k2 += -kHalf * (-XD(u, v) + XD(v, u) - XD(ub, vb) + XD(vb, ub));
      }
      k3 += (kI * kHalf) * (XD(u, u) - XD(v, v) + XD(ub, ub) - XD(vb, vb));
    }
  }
  NamedOperatorSet s;
  s.name = reading == LorentzReading::printed ? "lorentz" : "lorentz[k2_conjugate_flipped]";
  s.sites = n;
  s.ops = {{"J1", j1}, {"J2", j2}, {"J3", j3}, {"K1", k1}, {"K2", k2}, {"K3", k3}};
  return s;
}

NamedOperatorSet build_translations(int n) {
  DiffOp p0, p1, p2, p3;
  for (int i = 1; i <= n; ++i) {
    Variable u1 = Variable::u(1, i), v1 = Variable::v(1, i);
    Variable u2 = Variable::u(2, i), v2 = Variable::v(2, i);
    p0 += XD(u1, v2.bar()) - XD(v1, u2.bar()) - XD(u1.bar(), v2) + XD(v1.bar(), u2);
    p1 += -XD(u1, u2.bar()) + XD(v1, v2.bar()) + XD(u1.bar(), u2) - XD(v1.bar(), v2);
    p2 += kI * (-XD(u1, u2.bar()) + XD(v1, v2.bar()) + XD(u1.bar(), u2) - XD(v1.bar(), v2));
    p3 += XD(u1, v2.bar()) + XD(v1, u2.bar()) - XD(u1.bar(), v2) - XD(v1.bar(), u2);
  }
  NamedOperatorSet s;
  s.name = "translations";
  s.sites = n;
  s.ops = {{"P0", p0}, {"P1", p1}, {"P2", p2}, {"P3", p3}};
  return s;
}

void check_tau(const Matrix& t, int n) {
  if (t.rows() != static_cast<std::size_t>(n) || t.cols() != static_cast<std::size_t>(n)) {
    throw BadTau("tau matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!(t.dagger() == t)) throw BadTau("tau matrix is not hermitian");
  Scalar tr;
  for (int k = 0; k < n; ++k) tr += t(k, k);
  if (!tr.is_zero()) throw BadTau("tau matrix is not traceless");
}

// Slot-1 variables (and conjugates of slot 2) carry the n representation,
// slot-2 variables (and conjugates of slot 1) the conjugate one.
DiffOp build_su_n_generator(const Matrix& tau, int n) {
  DiffOp t;
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const Scalar& c = tau(j - 1, k - 1);
      if (c.is_zero()) continue;
      Scalar cb = c.conj();
      for (auto fam : {weyl::Family::u, weyl::Family::v}) {
        Variable x1j = Variable::make(fam, 1, j), x1k = Variable::make(fam, 1, k);
        Variable x2j = Variable::make(fam, 2, j), x2k = Variable::make(fam, 2, k);
        t += c * (XD(x1k, x1j) + XD(x2k.bar(), x2j.bar()));
        t -= cb * (XD(x2k, x2j) + XD(x1k.bar(), x1j.bar()));
      }
    }
  }
  return t;
}

}  // namespace

std::vector<Matrix> pauli_matrices() {
  const Scalar i = Scalar::i();
  return {Matrix{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}},
          Matrix{{Scalar(0), -i}, {i, Scalar(0)}},
          Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}}};
}

NamedOperatorSet build_operators(OperatorFamily which, int n, std::span<const Matrix> tau,
                                 LorentzReading reading) {
  if (n < 1) throw std::invalid_argument("build_operators: site count must be >= 1");
  NamedOperatorSet s;
  s.name = std::string(to_string(which));
  s.sites = n;
  switch (which) {
    case OperatorFamily::O1:
      s.ops = {{"O1", build_o1(n)}};
      return s;
    case OperatorFamily::lorentz:
      return build_lorentz(n, reading);
    case OperatorFamily::translations:
      return build_translations(n);
    case OperatorFamily::su_n: {
      if (tau.empty()) throw BadTau("su_n requires at least one tau matrix");
      int a = 1;
      for (const auto& t : tau) {
        check_tau(t, n);
        s.ops["T" + std::to_string(a++)] = build_su_n_generator(t, n);
      }
      return s;
    }
    case OperatorFamily::xyz_angular: {
      Variable x = Variable::x(), y = Variable::y(), z = Variable::z();
      s.sites = 1;
      s.ops = {{"Lx", kI * (XD(y, z) - XD(z, y))},
               {"Ly", kI * (XD(z, x) - XD(x, z))},
               {"Lz", kI * (XD(x, y) - XD(y, x))}};
      return s;
    }
    case OperatorFamily::su2_spin: {
      Variable u = Variable::u(), v = Variable::v();
      DiffOp sx = kHalf * (XD(u, v) + XD(v, u));
      DiffOp sy = (kI * kHalf) * (XD(v, u) - XD(u, v));
      DiffOp sz = kHalf * (XD(u, u) - XD(v, v));
      s.sites = 1;
      // "+ h.a.": add the hermitian adjoint of the holomorphic part.
      s.ops = {{"Sx", sx + weyl::adjoint(sx)},
               {"Sy", sy + weyl::adjoint(sy)},
               {"Sz", sz + weyl::adjoint(sz)}};
      return s;
    }
    case OperatorFamily::b1_laplacian: {
      Variable u = Variable::u(), v = Variable::v();
      s.sites = 1;
      s.ops = {{"O", D(u) * D(u.bar()) + D(v) * D(v.bar())}};
      return s;
    }
  }
  throw std::logic_error("build_operators: unhandled family");
}

NamedOperatorSet reconstructed_translations(int n) {
  NamedOperatorSet p = build_translations(n);
  NamedOperatorSet l = build_lorentz(n, LorentzReading::printed);
  p.ops["P2"] = -kI * weyl::commutator(l.at("J3"), p.at("P1"));
  p.name = "translations[reconstructed]";
  p.reconstructed = true;
  return p;
}

NamedOperatorSet mutated_translations(int n) {
  NamedOperatorSet p = build_translations(n);
  const DiffOp good = DiffOp::var(Variable::v(1).bar()) * DiffOp::deriv(Variable::u(2));
  const DiffOp swapped = DiffOp::var(Variable::v(2).bar()) * DiffOp::deriv(Variable::u(2));
  p.ops["P0"] = p.at("P0") - good + swapped;
  p.name = "translations[mutated P0]";
  return p;
}

NamedOperatorSet merge(const NamedOperatorSet& a, const NamedOperatorSet& b, std::string name) {
  NamedOperatorSet r = a;
  r.name = std::move(name);
  r.reconstructed = a.reconstructed || b.reconstructed;
  for (const auto& [label, op] : b.ops) {
    if (!r.ops.emplace(label, op).second) {
      throw std::invalid_argument("merge: duplicate label '" + label + "'");
    }
  }
  return r;
}

NamedOperatorSet mutate_coefficient(const NamedOperatorSet& set, std::string_view label,
                                    std::size_t term, const Scalar& factor) {
  NamedOperatorSet r = set;
  const DiffOp& op = set.at(label);
  if (term >= op.size()) throw std::out_of_range("mutate_coefficient: term index out of range");
  auto it = std::next(op.terms().begin(), static_cast<std::ptrdiff_t>(term));
  DiffOp delta = DiffOp::term(it->second * (factor - Scalar(1)), it->first.mults, it->first.derivs);
  r.ops[std::string(label)] = op + delta;
  r.name = set.name + "[mutated " + std::string(label) + "#" + std::to_string(term) + "]";
  return r;
}

}  // namespace uvar::oplib
