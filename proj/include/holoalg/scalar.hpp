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

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace holoalg {

using Rational = mpq_class;

/// Parses "a", "-a", or "a/b" into an exact rational. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Renders a rational in lowest terms, omitting a denominator of 1.
std::string rational_str(const Rational& q);

/// Exact complex number with rational real and imaginary parts.
///
/// Values are always kept in lowest terms with positive denominators
/// (GMP's canonical form). All operations are exact; division by zero
/// throws std::domain_error.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(int v) : re_(v), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}
  Scalar(Rational re) : re_(std::move(re)), im_(0) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  Scalar(long num, long den);

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical rendering "a/b+c/d i" with explicit denominators,
  /// e.g. "5/1+0/1 i" or "1/2-2/3 i".
  std::string str() const;

  /// Compact rendering that drops a zero imaginary part and unit
  /// denominators: "3/2", "0", "-1", "1/2 i", "1/2-1/3 i".
  std::string compact_str() const;

  /// Accepts both renderings above. Throws std::invalid_argument.
  static Scalar parse(const std::string& text);

 private:
  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace holoalg
