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

#include "uvar/weyl/diffop.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "uvar/errors.hpp"

namespace uvar::weyl {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<Factor> factors) {
  for (const auto& [v, k] : factors) add(v, k);
}

int Monomial::power(const Variable& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::max_power() const {
  int d = 0;
  for (const auto& f : factors_) d = std::max(d, f.second);
  return d;
}

void Monomial::add(const Variable& v, int k) {
  if (k == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  if (it != factors_.end() && it->first == v) {
    long p = static_cast<long>(it->second) + k;
    if (p > kMaxPower) throw PowerOverflow("power of " + v.to_string() + " exceeds limit");
    if (p < 0) throw std::invalid_argument("Monomial: negative power");
    if (p == 0) {
      factors_.erase(it);
    } else {
      it->second = static_cast<int>(p);
    }
    return;
  }
  if (k < 0) throw std::invalid_argument("Monomial: negative power");
  if (k > kMaxPower) throw PowerOverflow("power of " + v.to_string() + " exceeds limit");
  factors_.insert(it, {v, k});
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (const auto& [v, k] : o.factors_) r.add(v, k);
  return r;
}

// ---------------------------------------------------------------- DiffOp

DiffOp DiffOp::constant(const Scalar& c) { return term(c, {}, {}); }

DiffOp DiffOp::var(const Variable& v) { return term(1, Monomial{{v, 1}}, {}); }

DiffOp DiffOp::deriv(const Variable& v, int order) {
  return term(1, {}, Monomial{{v, order}});
}

DiffOp DiffOp::term(const Scalar& c, Monomial mults, Monomial derivs) {
  DiffOp op;
  op.add_term({std::move(mults), std::move(derivs)}, c);
  return op;
}

int DiffOp::order() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.derivs.total_degree());
  return d;
}

Scalar DiffOp::coeff(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar() : it->second;
}

void DiffOp::add_term(const TermKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

namespace {

// d^b x^g = sum_k C(b,k) g!/(g-k)! x^(g-k) d^(b-k), one variable at a time.
struct Contraction {
  Variable var;
  int deriv_order;
  int power;
};

void multiply_terms(const TermKey& a, const Scalar& ca, const TermKey& b, const Scalar& cb,
                    DiffOp& out) {
  std::vector<Contraction> shared;
  for (const auto& [v, order] : a.derivs.factors()) {
    int p = b.mults.power(v);
    if (p > 0) shared.push_back({v, order, p});
  }
  Scalar base = ca * cb;
  if (shared.empty()) {
    out.add_term({a.mults * b.mults, a.derivs * b.derivs}, base);
    return;
  }
  std::vector<int> ks(shared.size(), 0);
  while (true) {
    mpz_class factor = 1;
    Monomial mults = a.mults;
    Monomial derivs = b.derivs;
    Monomial left_derivs = a.derivs;
    Monomial right_mults = b.mults;
    for (std::size_t s = 0; s < shared.size(); ++s) {
      const int k = ks[s];
      factor *= binomial(shared[s].deriv_order, k) * falling_factorial(shared[s].power, k);
      left_derivs.add(shared[s].var, -k);
      right_mults.add(shared[s].var, -k);
    }
    out.add_term({mults * right_mults, left_derivs * derivs}, base * Scalar(mpq_class(factor)));
    std::size_t s = 0;
    for (; s < shared.size(); ++s) {
      if (ks[s] < std::min(shared[s].deriv_order, shared[s].power)) {
        ++ks[s];
        break;
      }
      ks[s] = 0;
    }
    if (s == shared.size()) break;
  }
}

}  // namespace

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  DiffOp out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) multiply_terms(ka, ca, kb, cb, out);
  }
  return out;
}

DiffOp DiffOp::rename(const std::function<Variable(const Variable&)>& fn) const {
  DiffOp out;
  for (const auto& [key, c] : terms_) {
    TermKey k;
    for (const auto& [v, p] : key.mults.factors()) k.mults.add(fn(v), p);
    for (const auto& [v, p] : key.derivs.factors()) k.derivs.add(fn(v), p);
    out.add_term(k, c);
  }
  return out;
}

namespace {

void append_factor(std::string& s, const std::string& body, int k) {
  s += " * ";
  s += body;
  if (k != 1) s += "^" + std::to_string(k);
}

}  // namespace

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string cs = c.to_string();
    if (first) {
      s += cs;
    } else if (cs.front() == '-') {
      s += " - " + (-c).to_string();
    } else {
      s += " + " + cs;
    }
    first = false;
    for (const auto& [v, k] : key.mults.factors()) append_factor(s, v.to_string(), k);
    for (const auto& [v, k] : key.derivs.factors()) {
      append_factor(s, "d[" + v.to_string() + "]", k);
    }
  }
  return s;
}

DiffOp DiffOp::parse(std::string_view text) {
  std::vector<std::string> tokens;
  {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) throw ParseError("empty operator text");
  if (tokens.size() == 1 && tokens[0] == "0") return {};

  DiffOp out;
  std::size_t pos = 0;
  bool negate = false;
  while (pos < tokens.size()) {
    Scalar c;
    try {
      c = Scalar::parse(tokens[pos]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad coefficient: ") + e.what());
    }
    if (negate) c = -c;
    ++pos;
    TermKey key;
    while (pos < tokens.size() && tokens[pos] == "*") {
      if (++pos >= tokens.size()) throw ParseError("dangling '*'");
      std::string f = tokens[pos++];
      int k = 1;
      if (auto caret = f.rfind('^'); caret != std::string::npos && f.back() != ']') {
        k = std::stoi(f.substr(caret + 1));
        f.resize(caret);
      }
      if (k < 1) throw ParseError("non-positive exponent in '" + f + "'");
      if (f.size() > 3 && f.compare(0, 2, "d[") == 0 && f.back() == ']') {
        key.derivs.add(Variable::parse(std::string_view(f).substr(2, f.size() - 3)), k);
      } else {
        key.mults.add(Variable::parse(f), k);
      }
    }
    out.add_term(key, c);
    if (pos == tokens.size()) break;
    if (tokens[pos] != "+" && tokens[pos] != "-") {
      throw ParseError("expected '+' or '-' but found '" + tokens[pos] + "'");
    }
    negate = tokens[pos] == "-";
    if (++pos == tokens.size()) throw ParseError("dangling sign");
  }
  return out;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(DiffOp op) : op_(std::move(op)) {
  if (!op_.is_polynomial()) {
    throw std::invalid_argument("Poly: operator contains derivatives");
  }
}

void Poly::for_each(const std::function<void(const Monomial&, const Scalar&)>& fn) const {
  for (const auto& [key, c] : op_.terms()) fn(key.mults, c);
}

// ---------------------------------------------------------------- free functions

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

Poly apply(const DiffOp& op, const Poly& f) {
  DiffOp out;
  for (const auto& [key, c] : op.terms()) {
    for (const auto& [fkey, fc] : f.op().terms()) {
      mpz_class factor = 1;
      Monomial m = fkey.mults;
      bool vanishes = false;
      for (const auto& [v, order] : key.derivs.factors()) {
        int p = m.power(v);
        if (p < order) {
          vanishes = true;
          break;
        }
        factor *= falling_factorial(p, order);
        m.add(v, -order);
      }
      if (vanishes) continue;
      out.add_term({key.mults * m, {}}, c * fc * Scalar(mpq_class(factor)));
    }
  }
  return Poly(std::move(out));
}

DiffOp adjoint(const DiffOp& op) {
  DiffOp out;
  for (const auto& [key, c] : op.terms()) {
    // (c X^a D^b)* = conj(c) (D^b)* (X^a)*; each (d/dx)* contributes -d/d conj(x).
    Monomial dstar;
    int sign_exp = 0;
    for (const auto& [v, k] : key.derivs.factors()) {
      dstar.add(v.conj(), k);
      sign_exp += k;
    }
    Monomial xstar;
    for (const auto& [v, k] : key.mults.factors()) xstar.add(v.conj(), k);
    Scalar cc = c.conj();
    if (sign_exp % 2 != 0) cc = -cc;
    out += DiffOp::term(1, {}, std::move(dstar)) * DiffOp::term(cc, std::move(xstar), {});
  }
  return out;
}

Poly conj(const Poly& f) {
  DiffOp out;
  for (const auto& [key, c] : f.op().terms()) {
    Monomial m;
    for (const auto& [v, k] : key.mults.factors()) m.add(v.conj(), k);
    out.add_term({m, {}}, c.conj());
  }
  return Poly(std::move(out));
}

DiffOp part_of_order(const DiffOp& op, int order) {
  DiffOp out;
  for (const auto& [key, c] : op.terms()) {
    if (key.derivs.total_degree() == order) out.add_term(key, c);
  }
  return out;
}

}  // namespace uvar::weyl
