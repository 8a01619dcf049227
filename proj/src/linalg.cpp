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

#include "holoalg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace holoalg {

ScalarMatrix::ScalarMatrix(std::size_t r, std::size_t c,
                           std::vector<Scalar> values)
    : rows(r), cols(c), data(std::move(values)) {
  if (data.size() != rows * cols)
    throw std::invalid_argument("matrix data size mismatch");
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool ScalarMatrix::is_zero() const {
  for (const Scalar& v : data)
    if (!v.is_zero()) return false;
  return true;
}

ScalarMatrix mul(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols != b.rows)
    throw std::invalid_argument("matrix product dimension mismatch");
  ScalarMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix out(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) {
      const Scalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows; ++k)
        for (std::size_t l = 0; l < b.cols; ++l)
          out.at(i * b.rows + k, j * b.cols + l) = aij * b.at(k, l);
    }
  return out;
}

ScalarMatrix kron_power(const ScalarMatrix& a, int k) {
  if (k < 0) throw std::invalid_argument("negative kronecker power");
  ScalarMatrix out = ScalarMatrix::identity(1);
  for (int i = 0; i < k; ++i) out = kron(out, a);
  return out;
}

ScalarMatrix transpose(const ScalarMatrix& a) {
  ScalarMatrix out(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

std::size_t rank(ScalarMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows && a.at(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < a.cols; ++j)
        std::swap(a.at(pivot, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t i = r + 1; i < a.rows; ++i) {
      if (a.at(i, c).is_zero()) continue;
      Scalar factor = a.at(i, c) * inv;
      for (std::size_t j = c; j < a.cols; ++j)
        a.at(i, j) -= factor * a.at(r, j);
    }
    ++r;
  }
  return r;
}

Scalar determinant(ScalarMatrix a) {
  if (a.rows != a.cols)
    throw std::invalid_argument("determinant of non-square matrix");
  Scalar det(1);
  for (std::size_t c = 0; c < a.cols; ++c) {
    std::size_t pivot = c;
    while (pivot < a.rows && a.at(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows) return Scalar(0);
    if (pivot != c) {
      for (std::size_t j = c; j < a.cols; ++j)
        std::swap(a.at(pivot, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    Scalar inv = a.at(c, c).inverse();
    for (std::size_t i = c + 1; i < a.rows; ++i) {
      if (a.at(i, c).is_zero()) continue;
      Scalar factor = a.at(i, c) * inv;
      for (std::size_t j = c; j < a.cols; ++j)
        a.at(i, j) -= factor * a.at(c, j);
    }
  }
  return det;
}

namespace {

// Reduces `row` against the unit-pivot basis rows; returns the pivot
// column if the reduced row is nonzero (and normalizes it), else nullopt.
std::optional<std::size_t> reduce_row(
    std::vector<std::vector<Scalar>>& basis,
    std::vector<std::size_t>& basis_pivots, std::vector<Scalar>& row) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Scalar& coeff = row[basis_pivots[k]];
    if (coeff.is_zero()) continue;
    Scalar factor = coeff;
    for (std::size_t j = 0; j < row.size(); ++j)
      row[j] -= factor * basis[k][j];
  }
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) {
      Scalar inv = row[j].inverse();
      for (std::size_t l = j; l < row.size(); ++l) row[l] *= inv;
      return j;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::size_t> pivot_rows(const ScalarMatrix& a) {
  std::vector<std::vector<Scalar>> basis;
  std::vector<std::size_t> basis_pivots;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < a.rows; ++i) {
    std::vector<Scalar> row(a.data.begin() + i * a.cols,
                            a.data.begin() + (i + 1) * a.cols);
    auto pivot = reduce_row(basis, basis_pivots, row);
    if (pivot) {
      basis.push_back(std::move(row));
      basis_pivots.push_back(*pivot);
      picked.push_back(i);
    }
  }
  return picked;
}

std::optional<ScalarMatrix> solve_left(const ScalarMatrix& b,
                                       const ScalarMatrix& m) {
  if (b.cols != m.cols)
    throw std::invalid_argument("solve_left column count mismatch");
  // Row-reduce [B^T | I] so each row of M can be expressed exactly.
  std::size_t k = b.rows, c = b.cols;
  // Augmented columns track the combination of B's rows forming each
  // reduced basis row.
  std::vector<std::vector<Scalar>> basis;       // reduced copies of B rows
  std::vector<std::vector<Scalar>> combo;       // matching combinations
  std::vector<std::size_t> basis_pivots;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Scalar> row(b.data.begin() + i * c,
                            b.data.begin() + (i + 1) * c);
    std::vector<Scalar> comb(k);
    comb[i] = Scalar(1);
    for (std::size_t l = 0; l < basis.size(); ++l) {
      Scalar factor = row[basis_pivots[l]];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j) row[j] -= factor * basis[l][j];
      for (std::size_t j = 0; j < k; ++j) comb[j] -= factor * combo[l][j];
    }
    std::optional<std::size_t> pivot;
    for (std::size_t j = 0; j < c; ++j)
      if (!row[j].is_zero()) {
        pivot = j;
        break;
      }
    if (!pivot) continue;  // dependent row of B; skip
    Scalar inv = row[*pivot].inverse();
    for (std::size_t j = 0; j < c; ++j) row[j] *= inv;
    for (std::size_t j = 0; j < k; ++j) comb[j] *= inv;
    basis.push_back(std::move(row));
    combo.push_back(std::move(comb));
    basis_pivots.push_back(*pivot);
  }
  ScalarMatrix out(m.rows, k);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::vector<Scalar> row(m.data.begin() + i * c,
                            m.data.begin() + (i + 1) * c);
    std::vector<Scalar> coeff(k);
    for (std::size_t l = 0; l < basis.size(); ++l) {
      Scalar factor = row[basis_pivots[l]];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j) row[j] -= factor * basis[l][j];
      for (std::size_t j = 0; j < k; ++j)
        coeff[j] += factor * combo[l][j];
    }
    for (std::size_t j = 0; j < c; ++j)
      if (!row[j].is_zero()) return std::nullopt;  // outside the row span
    for (std::size_t j = 0; j < k; ++j) out.at(i, j) = std::move(coeff[j]);
  }
  return out;
}

}  // namespace holoalg
