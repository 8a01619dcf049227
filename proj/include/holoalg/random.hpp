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

#include <random>

#include "holoalg/linalg.hpp"
#include "holoalg/scalar.hpp"

namespace holoalg {

using Rng = std::mt19937_64;

/// Small rational with numerator in [-3, 3] and denominator in [1, 3].
inline Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Mostly real, sometimes complex, zero with its natural density.
inline Scalar random_scalar(Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  if (pick(rng) == 0) return Scalar(random_rational(rng), random_rational(rng));
  return Scalar(random_rational(rng));
}

inline Scalar random_nonzero_scalar(Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(rng);
    if (!s.is_zero()) return s;
  }
}

inline ScalarMatrix random_matrix(Rng& rng, std::size_t rows,
                                  std::size_t cols) {
  ScalarMatrix m(rows, cols);
  for (auto& v : m.data) v = random_scalar(rng);
  return m;
}

inline ScalarMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    ScalarMatrix m = random_matrix(rng, n, n);
    if (!determinant(m).is_zero()) return m;
  }
}

}  // namespace holoalg
