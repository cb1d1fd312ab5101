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

#include "uvar/fock/antisym.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace uvar::fock {

std::string OrbitalLabel::to_string() const {
  if (fields.size() == 1) return fields.front();
  std::string s = "(";
  for (std::size_t k = 0; k < fields.size(); ++k) s += (k ? "," : "") + fields[k];
  return s + ")";
}

void LabeledKet::validate() const {
  std::set<int> sets;
  for (const auto& [label, s] : factors) {
    if (!sets.insert(s).second) {
      throw std::invalid_argument("variable set " + std::to_string(s) + " appears twice");
    }
  }
}

std::string LabeledKet::to_string() const {
  std::string s = amplitude.to_string();
  for (const auto& [label, set] : factors) s += " |" + label.to_string() + ">_" + std::to_string(set);
  return s;
}

void KetSum::add(const Assignment& a, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar KetSum::norm2() const {
  Scalar s;
  for (const auto& [a, c] : terms_) s += c.norm2();
  return s * norm2_;
}

Scalar KetSum::coeff(const Assignment& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Scalar{} : it->second;
}

KetSum KetSum::exchange_sets(int a, int b) const {
  KetSum r;
  r.norm2_ = norm2_;
  for (const auto& [asg, c] : terms_) {
    Assignment n;
    for (const auto& [s, l] : asg) n.emplace(s == a ? b : s == b ? a : s, l);
    r.add(n, c);
  }
  return r;
}

KetSum KetSum::exchange_labels(const OrbitalLabel& a, const OrbitalLabel& b) const {
  KetSum r;
  r.norm2_ = norm2_;
  for (const auto& [asg, c] : terms_) {
    Assignment n;
    for (const auto& [s, l] : asg) n.emplace(s, l == a ? b : l == b ? a : l);
    r.add(n, c);
  }
  return r;
}

KetSum KetSum::scaled(const Scalar& c) const {
  KetSum r;
  r.norm2_ = norm2_;
  for (const auto& [asg, x] : terms_) r.add(asg, x * c);
  return r;
}

bool KetSum::same_vector(const KetSum& o) const {
  // sqrt(n1) c1 == sqrt(n2) c2 iff n1 |c1|^2 == n2 |c2|^2 and c1 conj(c2)
  // is a positive real.
  std::set<Assignment> keys;
  for (const auto& [a, c] : terms_) keys.insert(a);
  for (const auto& [a, c] : o.terms_) keys.insert(a);
  for (const auto& a : keys) {
    Scalar c1 = coeff(a), c2 = o.coeff(a);
    if (c1.is_zero() != c2.is_zero()) return false;
    if (c1.is_zero()) continue;
    if (!(norm2_ * c1.norm2() == o.norm2_ * c2.norm2())) return false;
    Scalar phase = c1 * c2.conj();
    if (!phase.is_real() || sgn(phase.re()) <= 0) return false;
  }
  return true;
}

std::string KetSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s = "sqrt(" + norm2_.to_string() + ") * [";
  bool first = true;
  for (const auto& [asg, c] : terms_) {
    s += first ? " " : " + ";
    first = false;
    s += c.to_string();
    for (const auto& [set, l] : asg) s += " |" + l.to_string() + ">_" + std::to_string(set);
  }
  return s + " ]";
}

namespace {

int parity(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

KetSum project(const LabeledKet& product, bool signed_sum) {
  product.validate();
  const std::size_t k = product.factors.size();
  std::vector<int> sets;
  for (const auto& f : product.factors) sets.push_back(f.second);
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);

  KetSum out;
  long factorial = 1;
  do {
    KetSum::Assignment a;
    for (std::size_t i = 0; i < k; ++i) {
      a.emplace(sets[static_cast<std::size_t>(perm[i])], product.factors[i].first);
    }
    out.add(a, signed_sum ? product.amplitude * Scalar(parity(perm)) : product.amplitude);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (std::size_t i = 2; i <= k; ++i) factorial *= static_cast<long>(i);
  out.set_normalization_squared(Scalar::rational(1, factorial));
  return out;
}

}  // namespace

KetSum antisymmetrize(const LabeledKet& product) { return project(product, true); }

KetSum symmetrize(const LabeledKet& product) { return project(product, false); }

}  // namespace uvar::fock
