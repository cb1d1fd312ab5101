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

#include "uvar/weyl/scalar.hpp"

#include <stdexcept>

namespace uvar::weyl {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) {
    throw std::domain_error("Scalar::rational: zero denominator");
  }
  return Scalar(mpq_class(num, den));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) {
    throw std::domain_error("Scalar: division by zero");
  }
  mpq_class d = o.norm2();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

std::string imag_text(const mpq_class& q) {
  if (q == 1) return "i";
  if (q == -1) return "-i";
  return q.get_str() + "i";
}

mpq_class parse_rational(std::string_view s) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  std::string str(s);
  if (str.front() == '+') str.erase(0, 1);
  mpq_class q;
  if (q.set_str(str, 10) != 0) {
    throw std::invalid_argument("Scalar::parse: bad rational '" + std::string(s) + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("Scalar::parse: zero denominator");
  }
  q.canonicalize();
  return q;
}

}  // namespace

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_text(im_);
  std::string im = imag_text(im_);
  if (im.front() != '-') im = "+" + im;
  return "(" + re_.get_str() + im + ")";
}

Scalar Scalar::parse(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  if (text.empty()) throw std::invalid_argument("Scalar::parse: empty");
  if (text.back() != 'i') return Scalar(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(0, parse_rational(body));
  return Scalar(parse_rational(body.substr(0, split)), parse_rational(body.substr(split)));
}

mpz_class falling_factorial(long n, long k) {
  mpz_class r = 1;
  for (long j = 0; j < k; ++j) r *= (n - j);
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace uvar::weyl
