// Copyright 2026 The holoalg authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holoalg/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace holoalg {

namespace {

bool valid_rational_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) return false;
  if (pos == s.size()) return true;
  if (s[pos] != '/') return false;
  ++pos;
  digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
    ++digits;
  }
  return digits > 0 && pos == s.size();
}

std::string strip_ws(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = strip_ws(text);
  if (!valid_rational_text(s))
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (s.front() == '+') s.erase(0, 1);  // GMP rejects an explicit plus
  Rational q(s, 10);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  re_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
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
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return *this *= o.inverse();
}

std::string Scalar::str() const {
  std::string out = re_.get_num().get_str() + "/" + re_.get_den().get_str();
  if (im_ >= 0) {
    out += "+" + im_.get_num().get_str();
  } else {
    out += "-" + Rational(-im_).get_num().get_str();
  }
  out += "/" + im_.get_den().get_str() + " i";
  return out;
}

std::string Scalar::compact_str() const {
  if (im_ == 0) return re_.get_str();
  std::string imag = im_.get_str() + " i";
  if (re_ == 0) return imag;
  if (im_ > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;  // the sign is carried by the imaginary part
}

Scalar Scalar::parse(const std::string& text) {
  std::string s = strip_ws(text);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  bool has_imag = s.back() == 'i';
  if (!has_imag) return Scalar(parse_rational(s));
  s.pop_back();
  // Split off the imaginary term at the last sign that is not leading.
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if (s[p] == '+' || s[p] == '-') {
      split = p;
      break;
    }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    im_part = s;
  } else {
    re_part = s.substr(0, split);
    im_part = s.substr(split);
  }
  Rational im;
  if (im_part.empty() || im_part == "+")
    im = 1;
  else if (im_part == "-")
    im = -1;
  else
    im = parse_rational(im_part);
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return Scalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace holoalg
