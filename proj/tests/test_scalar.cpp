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

#include <stdexcept>

#include "doctest.h"
#include "holoalg/random.hpp"

using namespace holoalg;

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(rational_str(Rational(2, 3)) == "2/3");
  CHECK(rational_str(Rational(5)) == "5");
  CHECK(rational_str(Rational(-1, 2)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("scalar arithmetic is exact") {
  const Scalar a(Rational(1, 3), Rational(1, 2));
  const Scalar b(Rational(2, 5), Rational(-3, 7));

  // (1/3 + 1/2 i)(2/5 - 3/7 i) = (2/15 + 3/14) + (1/5 - 1/7) i.
  const Scalar prod = a * b;
  CHECK(prod.real() == Rational(2, 15) + Rational(3, 14));
  CHECK(prod.imag() == Rational(1, 5) - Rational(1, 7));

  CHECK((a + b) - b == a);
  CHECK(a * b == b * a);
  CHECK(-(-a) == a);
  CHECK(a - a == Scalar());
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
}

TEST_CASE("scalar division and inverse") {
  const Scalar a(Rational(3, 4), Rational(-2, 5));
  CHECK(a * a.inverse() == Scalar(1));
  CHECK(a / a == Scalar(1));
  const Scalar b(Rational(0), Rational(1));
  CHECK(Scalar(1) / b == -Scalar::i());
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("scalar renderings") {
  CHECK(Scalar(5).str() == "5/1+0/1 i");
  CHECK(Scalar(Rational(1, 2), Rational(-2, 3)).str() == "1/2-2/3 i");
  CHECK(Scalar(Rational(3, 2)).compact_str() == "3/2");
  CHECK(Scalar(0).compact_str() == "0");
  CHECK(Scalar(-1).compact_str() == "-1");
  CHECK(Scalar(Rational(0), Rational(1, 2)).compact_str() == "1/2 i");
  CHECK(Scalar(Rational(1, 2), Rational(-1, 3)).compact_str() == "1/2-1/3 i");
}

TEST_CASE("scalar parse accepts both renderings") {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    const Scalar s = random_scalar(rng);
    CHECK(Scalar::parse(s.str()) == s);
    CHECK(Scalar::parse(s.compact_str()) == s);
  }
  CHECK_THROWS_AS(Scalar::parse("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
}
