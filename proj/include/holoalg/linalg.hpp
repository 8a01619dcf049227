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

#include <cstddef>
#include <optional>
#include <vector>

#include "holoalg/scalar.hpp"

namespace holoalg {

/// Dense row-major matrix of exact complex rationals.
struct ScalarMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  ScalarMatrix() = default;
  ScalarMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), data(r * c) {}
  ScalarMatrix(std::size_t r, std::size_t c, std::vector<Scalar> values);

  Scalar& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }

  static ScalarMatrix identity(std::size_t n);

  bool is_zero() const;
  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;
};

ScalarMatrix mul(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix kron_power(const ScalarMatrix& a, int k);
ScalarMatrix transpose(const ScalarMatrix& a);

/// Exact rank over the complex-rational field via Gaussian elimination.
std::size_t rank(ScalarMatrix a);

/// Exact determinant of a square matrix.
Scalar determinant(ScalarMatrix a);

/// Indices of a maximal independent set of rows, greedy in row order.
std::vector<std::size_t> pivot_rows(const ScalarMatrix& a);

/// Solves C * B = M for C (expresses M's rows over B's rows). Returns
/// nullopt when some row of M lies outside the row span of B. The
/// solution is unique when B's rows are independent.
std::optional<ScalarMatrix> solve_left(const ScalarMatrix& b,
                                       const ScalarMatrix& m);

}  // namespace holoalg
