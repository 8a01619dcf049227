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
#include <map>
#include <string>
#include <utility>

#include "holoalg/holant.hpp"
#include "holoalg/signature.hpp"
#include "holoalg/transforms.hpp"

namespace holoalg {

/// Weighted graph on vertices 1..n read as a skew-symmetric matrix:
/// weight(j, i) == -weight(i, j) and the diagonal is zero. Only nonzero
/// weights with i < j are stored. An optional split s declares vertices
/// 1..s as inputs and s+1..n as outputs of the matchgate the graph
/// introduces; split() < 0 means no declared bipartition.
class UnderlyingGraph {
 public:
  UnderlyingGraph() = default;
  explicit UnderlyingGraph(int n, int split = -1);

  int size() const { return n_; }
  int split() const { return split_; }
  void set_split(int split);
  int inputs() const { return split_; }
  int outputs() const { return n_ - split_; }

  /// Signed lookup; zero for absent pairs and the diagonal.
  Scalar weight(int i, int j) const;
  /// Stores w at (min(i,j), max(i,j)) with the sign adjusted; erases the
  /// pair when w becomes zero. i == j requires w == 0.
  void set_weight(int i, int j, const Scalar& w);

  /// Nonzero weights keyed by (i, j) with i < j.
  const std::map<std::pair<int, int>, Scalar>& weights() const {
    return weights_;
  }

  /// No edge joins two inputs or two outputs (requires a split).
  bool is_bipartite() const;

  friend bool operator==(const UnderlyingGraph&,
                         const UnderlyingGraph&) = default;

 private:
  int n_ = 0;
  int split_ = -1;
  std::map<std::pair<int, int>, Scalar> weights_;
};

/// Signed sum over perfect matchings, each counted once; the sign of
/// {(i1,i2),...} is the parity of the permutation (i1, i2, ...). Zero
/// for odd n. Exact recursive expansion along the lowest vertex with
/// memoization on vertex subsets; n is capped at 16.
Scalar pfaffian(const UnderlyingGraph& g);

/// The arity-n binary signature of the matchgate introduced by g: the
/// value on X is the pfaffian of g restricted to the vertices at which
/// X is 0. All-ones maps to 1 (empty pfaffian), two zeros at i, j map
/// to weight(i, j), odd zero counts map to 0.
Signature signature_from_graph(const UnderlyingGraph& g);

/// The values of a nonzero signature within Hamming distance 2 of a
/// fixed nonzero base point; a matchgate signature is determined by
/// them. The base point is the support point of maximal Hamming weight,
/// ties broken by smallest flat index.
struct Core {
  std::size_t base_point = 0;
  Scalar base_value;
  std::map<std::size_t, Scalar> values;  // every Y with dist(base, Y) <= 2
};

/// The core's base point: support point of maximal Hamming weight, ties
/// broken by smallest flat index. Throws on the zero signature.
std::size_t support_anchor(const Signature& f);

/// Throws std::invalid_argument on the zero signature.
Core extract_core(const Signature& f);

struct MatchgateCheck {
  bool ok = false;
  /// The zero signature counts as a matchgate but carries no witness.
  bool zero = false;
  /// On success: apply_as_inputs(log, f) == signature_from_graph(graph).
  UnderlyingGraph graph;
  TransformLog log;
  /// On failure: the first input (flat index of f) where f departs from
  /// the unique matchgate extension of its core, with both values.
  std::size_t mismatch = 0;
  Scalar expected;
  Scalar actual;
};

/// Decides whether f is the signature of some matchgate: normalizes by
/// flips and a global factor so the base point moves to all-ones with
/// value 1, reads the underlying graph off the two-zero inputs, rebuilds
/// the full signature and compares exactly. Requires binary domains.
MatchgateCheck is_matchgate(const Signature& f);

/// Weight matrix of a bipartite graph in column-digit order:
/// B(i, k) = weight(i, s+t+1-k), matching MatrixView's column
/// convention. Throws unless g.is_bipartite().
ScalarMatrix bipartite_matrix(const UnderlyingGraph& g);

/// Inverse of bipartite_matrix: vertices 1..rows are inputs.
UnderlyingGraph bipartite_from_matrix(const ScalarMatrix& b);

/// The bipartite graph whose weight matrix is the product of the two
/// weight matrices; its signature equals the matrix_product of the two
/// signatures. Requires g1.outputs() == g2.inputs().
UnderlyingGraph multiply_introduced(const UnderlyingGraph& g1,
                                    const UnderlyingGraph& g2);

/// The sign crossover function: 1 on 0000, 0101, 1010; -1 on 1111.
Signature crossover_signature();

/// The six-vertex Exactly-One gadget realizing the sign crossover
/// function, with the centre edge weighted -1. Four dangling edges in
/// variable order; gadget_signature of it equals crossover_signature().
Instance crossover_instance();

/// Planarization of g: vertices on a circle, chords for edges, each
/// chord crossing replaced by a sign-crossover vertex, each original
/// vertex by an Exactly-One vertex, each chord carrying its weight once.
/// The value of the closed instance realizes pfaffian(g) through
/// perfect-matching gadgets; the measured ratio is what the acceptance
/// experiment reports.
Instance pfaffian_crossover_instance(const UnderlyingGraph& g);

/// Text format: "n <count>", then optionally "split <s> <t>", then one
/// "i j re im" line per nonzero weight (i < j, compact rationals).
std::string graph_to_text(const UnderlyingGraph& g);
UnderlyingGraph graph_from_text(const std::string& text);

}  // namespace holoalg
