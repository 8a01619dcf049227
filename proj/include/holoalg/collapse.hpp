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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holoalg/canonical.hpp"
#include "holoalg/linalg.hpp"
#include "holoalg/signature.hpp"
#include "holoalg/transforms.hpp"

namespace holoalg {

/// A base matrix whose 2^t columns are indexed by t binary digits,
/// digit 1 most significant. A problem over a base pairs left
/// signatures on domain m.rows against right signatures composed with
/// the base: the right side plays transform_right(m, h).
struct Base {
  ScalarMatrix m;
  int t = 0;

  Base() = default;
  /// Throws unless matrix.cols == 2^t.
  Base(ScalarMatrix matrix, int t);
};

/// Everything needed to audit a collapse: the column steps that were
/// replayed on the base, the digit values pinned away, and for the
/// factored entry points the factors themselves.
struct CollapseCertificate {
  TransformLog col_log;
  std::vector<int> constants;  // digits r+1..t, in digit order
  TransformLog row_log;        // cover: row steps of the factor's form
  std::optional<ScalarMatrix> q;       // cover: left factor
  std::optional<ScalarMatrix> c1;      // symmetric: coefficients on kept rows
  std::vector<std::size_t> s_rows;     // symmetric: pivot rows kept from A*M
  std::optional<ScalarMatrix> t_rows;  // symmetric: completion rows from M
};

/// A problem equivalent to the original one over a narrower base.
/// new_left empty means the left side is unchanged.
struct CollapsedProblem {
  Base new_base;
  std::vector<Signature> new_left;
  std::vector<Signature> new_right;
  CollapseCertificate certificate;
  int r = 0;
};

/// Pins the trailing t-r column digits of the base to the given
/// constants: keeps only the columns in that block and restricts every
/// right signature accordingly. Requires all other columns of the base
/// to be zero; the first offending column is named otherwise.
CollapsedProblem strip_columns(const Base& base,
                               const std::vector<Signature>& hs,
                               const std::vector<int>& constants);

/// Collapse through a realizer A (2^a rows) for which A * base.m is a
/// matchgate: replays the column steps of its matching form on the base
/// and strips the pinned digits. Requires rank(A * M) == rank(M), which
/// makes the nonzero columns of the transformed base exactly the
/// matching-form block; both ranks must equal 2^r.
CollapsedProblem collapse_via_realizer(const Base& base,
                                       const ScalarMatrix& a,
                                       const std::vector<Signature>& fs,
                                       const std::vector<Signature>& hs);

/// Collapse through a factorization base.m == q * p; p is given as a
/// matchgate view whose column bundle matches the base digits. The
/// nonzero columns of the transformed base are covered by p's
/// matching-form block, so no rank condition is needed.
CollapsedProblem collapse_via_cover(const Base& base, const MatrixView& p,
                                    const ScalarMatrix& q,
                                    const std::vector<Signature>& fs,
                                    const std::vector<Signature>& hs);

/// Collapse driven by a symmetric left signature f: contracts all but
/// one of f's variables with the base to get a realizer A, rewrites f
/// over the pivot rows of A * M (f itself moves to domain 2^r) and
/// recurses into the realizer collapse over those rows. The rewriting
/// identity on f is verified exactly before it is used.
CollapsedProblem collapse_symmetric(const Signature& f, const Base& base,
                                    const std::vector<Signature>& hs);

/// Draws random closed instances of matching topology for the original
/// and the collapsed problem and compares their values exactly.
/// Failures are described on `log` when given. Deterministic in `seed`.
bool verify_collapse(const Base& base, const std::vector<Signature>& fs,
                     const std::vector<Signature>& hs,
                     const CollapsedProblem& collapsed, int trials,
                     std::uint64_t seed, std::ostream* log = nullptr);

std::string collapsed_problem_to_json_text(const CollapsedProblem& c);
CollapsedProblem collapsed_problem_from_json_text(const std::string& text);

}  // namespace holoalg
