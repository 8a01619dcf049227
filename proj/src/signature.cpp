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

#include "holoalg/signature.hpp"

#include <stdexcept>
#include <utility>

namespace holoalg {

namespace {

constexpr std::size_t kMaxValues = std::size_t{1} << 24;

std::size_t checked_size(const std::vector<int>& domains) {
  std::size_t total = 1;
  for (int d : domains) {
    if (d < 2) throw std::invalid_argument("variable domain must be >= 2");
    if (total > kMaxValues / static_cast<std::size_t>(d))
      throw std::invalid_argument("signature too large");
    total *= static_cast<std::size_t>(d);
  }
  return total;
}

}  // namespace

Signature::Signature(std::vector<int> domains)
    : domains_(std::move(domains)), values_(checked_size(domains_)) {}

Signature::Signature(std::vector<int> domains, std::vector<Scalar> values)
    : domains_(std::move(domains)), values_(std::move(values)) {
  if (values_.size() != checked_size(domains_))
    throw std::invalid_argument("signature value count mismatch");
}

Signature Signature::constant(Scalar v) {
  Signature out;
  out.values_[0] = std::move(v);
  return out;
}

std::size_t Signature::flat_index(const std::vector<int>& point) const {
  if (point.size() != domains_.size())
    throw std::invalid_argument("point arity mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < point.size(); ++k) {
    if (point[k] < 0 || point[k] >= domains_[k])
      throw std::invalid_argument("point outside domain");
    flat = flat * static_cast<std::size_t>(domains_[k]) +
           static_cast<std::size_t>(point[k]);
  }
  return flat;
}

std::vector<int> Signature::unflatten(std::size_t flat) const {
  std::vector<int> point(domains_.size());
  for (std::size_t k = domains_.size(); k-- > 0;) {
    point[k] = static_cast<int>(flat % static_cast<std::size_t>(domains_[k]));
    flat /= static_cast<std::size_t>(domains_[k]);
  }
  return point;
}

std::size_t Signature::stride(int var) const {
  std::size_t s = 1;
  for (std::size_t k = domains_.size(); k-- > static_cast<std::size_t>(var);)
    s *= static_cast<std::size_t>(domains_[k]);
  return s;
}

bool Signature::is_zero() const {
  for (const Scalar& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

bool Signature::all_binary() const {
  for (int d : domains_)
    if (d != 2) return false;
  return true;
}

Signature Signature::reshape(std::vector<int> new_domains) const {
  if (checked_size(new_domains) != values_.size())
    throw std::invalid_argument("reshape size mismatch");
  Signature out;
  out.domains_ = std::move(new_domains);
  out.values_ = values_;
  return out;
}

Signature Signature::permute(const std::vector<int>& perm) const {
  if (perm.size() != domains_.size())
    throw std::invalid_argument("permutation arity mismatch");
  std::vector<int> new_domains(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] < 0 || static_cast<std::size_t>(perm[k]) >= perm.size() ||
        seen[perm[k]])
      throw std::invalid_argument("invalid permutation");
    seen[perm[k]] = true;
    new_domains[k] = domains_[perm[k]];
  }
  Signature out(new_domains);
  std::vector<int> point(perm.size());
  for (std::size_t flat = 0; flat < out.values_.size(); ++flat) {
    std::vector<int> new_point = out.unflatten(flat);
    for (std::size_t k = 0; k < perm.size(); ++k)
      point[perm[k]] = new_point[k];
    out.values_[flat] = values_[flat_index(point)];
  }
  return out;
}

Signature tensor_product(const Signature& a, const Signature& b) {
  std::vector<int> domains = a.domains();
  domains.insert(domains.end(), b.domains().begin(), b.domains().end());
  std::vector<Scalar> values;
  values.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      values.push_back(a.value(i) * b.value(j));
  return Signature(std::move(domains), std::move(values));
}

Signature scale(const Signature& a, const Scalar& c) {
  std::vector<Scalar> values = a.values();
  for (Scalar& v : values) v *= c;
  return Signature(a.domains(), std::move(values));
}

MatrixView::MatrixView(Signature sig, int s) : sig_(std::move(sig)), s_(s) {
  if (s < 0 || s > sig_.arity())
    throw std::invalid_argument("row bundle size out of range");
  rows_ = 1;
  for (int k = 0; k < s_; ++k)
    rows_ *= static_cast<std::size_t>(sig_.domains()[k]);
  cols_ = sig_.size() / rows_;
}

std::vector<int> MatrixView::row_domains() const {
  return {sig_.domains().begin(), sig_.domains().begin() + s_};
}

std::vector<int> MatrixView::col_domains() const {
  // Digit k of the column index is variable s+t+1-k.
  std::vector<int> out(sig_.domains().rbegin(),
                       sig_.domains().rend() - s_);
  return out;
}

std::size_t MatrixView::flat_of(std::size_t row, std::size_t col) const {
  // The row bundle occupies the high mixed-radix digits in variable
  // order, so the row index is already the high part of the flat index.
  // Column digit k is variable s+t+1-k: the most significant column
  // digit belongs to the LAST variable, so peel digits from the top
  // while walking variables inward from the end.
  const auto& domains = sig_.domains();
  int arity = sig_.arity();
  std::size_t low = 0;
  std::size_t place = cols_;
  std::size_t stride = 1;
  for (int var = arity; var > s_; --var) {
    std::size_t d = static_cast<std::size_t>(domains[var - 1]);
    place /= d;
    low += (col / place) * stride;
    col %= place;
    stride *= d;
  }
  return row * cols_ + low;
}

ScalarMatrix MatrixView::to_matrix() const {
  ScalarMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out.at(r, c) = sig_.value(flat_of(r, c));
  return out;
}

MatrixView MatrixView::from_matrix(const ScalarMatrix& m,
                                   const std::vector<int>& row_domains,
                                   const std::vector<int>& col_domains) {
  std::vector<int> domains = row_domains;
  domains.insert(domains.end(), col_domains.rbegin(), col_domains.rend());
  MatrixView view(Signature(domains), static_cast<int>(row_domains.size()));
  if (view.row_count() != m.rows || view.col_count() != m.cols)
    throw std::invalid_argument("matrix shape does not match domains");
  Signature sig(domains);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      sig.value(view.flat_of(r, c)) = m.at(r, c);
  return MatrixView(std::move(sig), static_cast<int>(row_domains.size()));
}

MatrixView regroup(const Signature& sig, int s) { return MatrixView(sig, s); }

MatrixView matrix_product(const MatrixView& a, const MatrixView& b) {
  if (a.col_domains() != b.row_domains())
    throw std::invalid_argument(
        "matrix product bundle mismatch: column digits of the left view "
        "must match row digits of the right view");
  return MatrixView::from_matrix(mul(a.to_matrix(), b.to_matrix()),
                                 a.row_domains(), b.col_domains());
}

MatrixView kron(const MatrixView& a, const MatrixView& b) {
  std::vector<int> row_domains = a.row_domains();
  {
    auto br = b.row_domains();
    row_domains.insert(row_domains.end(), br.begin(), br.end());
  }
  std::vector<int> col_domains = a.col_domains();
  {
    auto bc = b.col_domains();
    col_domains.insert(col_domains.end(), bc.begin(), bc.end());
  }
  return MatrixView::from_matrix(kron(a.to_matrix(), b.to_matrix()),
                                 row_domains, col_domains);
}

MatrixView identity_view(const std::vector<int>& domains) {
  std::size_t n = 1;
  for (int d : domains) n *= static_cast<std::size_t>(d);
  return MatrixView::from_matrix(ScalarMatrix::identity(n), domains, domains);
}

std::size_t rank(const MatrixView& m) { return rank(m.to_matrix()); }

}  // namespace holoalg
