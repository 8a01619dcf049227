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
#include <vector>

#include "holoalg/linalg.hpp"
#include "holoalg/scalar.hpp"

namespace holoalg {

/// Dense tensor of exact scalars over finitely many variables.
///
/// Variable k (1-based) ranges over [0, domains[k-1]). Values are stored
/// flat in mixed-radix order with variable 1 most significant, so for an
/// all-binary signature the flat index is simply the bit string
/// x1 x2 ... xd read as an integer.
class Signature {
 public:
  Signature() : domains_(), values_(1) {}
  explicit Signature(std::vector<int> domains);
  Signature(std::vector<int> domains, std::vector<Scalar> values);

  static Signature constant(Scalar v);

  int arity() const { return static_cast<int>(domains_.size()); }
  const std::vector<int>& domains() const { return domains_; }
  std::size_t size() const { return values_.size(); }

  const Scalar& value(std::size_t flat) const { return values_[flat]; }
  Scalar& value(std::size_t flat) { return values_[flat]; }
  const std::vector<Scalar>& values() const { return values_; }

  std::size_t flat_index(const std::vector<int>& point) const;
  std::vector<int> unflatten(std::size_t flat) const;
  const Scalar& value(const std::vector<int>& point) const {
    return values_[flat_index(point)];
  }

  /// Mixed-radix stride of variable var (1-based).
  std::size_t stride(int var) const;

  bool is_zero() const;
  bool all_binary() const;

  /// Reinterprets the same flat data under new domains (the total size
  /// must match). Splitting a domain-2^t variable into t binary
  /// variables this way keeps every value in place.
  Signature reshape(std::vector<int> new_domains) const;

  /// Returns the signature with variables reordered; perm[k] is the
  /// 0-based old position of the variable placed at position k.
  Signature permute(const std::vector<int>& perm) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> domains_;
  std::vector<Scalar> values_;
};

/// Natural tensor product: variables of `a` followed by variables of `b`.
Signature tensor_product(const Signature& a, const Signature& b);

Signature scale(const Signature& a, const Scalar& c);

/// Matrix reading of a signature with the first s variables as the row
/// bundle. The row index is e1...es with e1 most significant. The column
/// index reverses the output bundle: digit k of the column (digit 1 most
/// significant) is variable s+t+1-k, so the LAST variable is the most
/// significant column digit and variable s+1 is the least significant.
class MatrixView {
 public:
  MatrixView(Signature sig, int s);

  int s() const { return s_; }
  int t() const { return sig_.arity() - s_; }
  const Signature& signature() const { return sig_; }

  std::size_t row_count() const { return rows_; }
  std::size_t col_count() const { return cols_; }
  std::vector<int> row_domains() const;
  /// Domains of the column digits in digit order (digit 1 first).
  std::vector<int> col_domains() const;

  std::size_t flat_of(std::size_t row, std::size_t col) const;
  const Scalar& entry(std::size_t row, std::size_t col) const {
    return sig_.value(flat_of(row, col));
  }

  ScalarMatrix to_matrix() const;

  /// Builds the signature whose view under (row_domains, col_domains)
  /// equals the given matrix. col_domains are in digit order.
  static MatrixView from_matrix(const ScalarMatrix& m,
                                const std::vector<int>& row_domains,
                                const std::vector<int>& col_domains);

  friend bool operator==(const MatrixView&, const MatrixView&) = default;

 private:
  Signature sig_;
  int s_;
  std::size_t rows_, cols_;
};

/// Reads a signature as a matrix with an s/t split (the view above).
MatrixView regroup(const Signature& sig, int s);

/// Contracts a's column bundle against b's row bundle. Digit k of a's
/// column pairs with digit k of b's row, so the domains must match in
/// digit order.
MatrixView matrix_product(const MatrixView& a, const MatrixView& b);

/// Kronecker product of views: rows (and column digits) of `a` become
/// the most significant digits of the result.
MatrixView kron(const MatrixView& a, const MatrixView& b);

/// Identity matrix as a view with the given row domains.
MatrixView identity_view(const std::vector<int>& domains);

std::size_t rank(const MatrixView& m);

}  // namespace holoalg
