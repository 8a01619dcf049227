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

#include "holoalg/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace holoalg {

std::pair<UnderlyingGraph, TransformLog> to_underlying_graph(
    const Signature& f) {
  MatchgateCheck mc = is_matchgate(f);
  if (mc.zero)
    throw std::invalid_argument("zero signature has no underlying graph");
  if (!mc.ok)
    throw std::invalid_argument(
        "not a matchgate signature: wrong value at input " +
        std::to_string(mc.mismatch));
  return {std::move(mc.graph), std::move(mc.log)};
}

namespace {

// Dense skew adjacency with every transform step mirrored onto it as a
// vertex congruence, so that replay(row_log ++ col_log, original view)
// stays equal to the signature the current graph introduces. Input
// steps touch vertices 1..s only and output steps vertices s+1..n, which
// keeps the two logs independent.
class WorkingGraph {
 public:
  WorkingGraph(const UnderlyingGraph& g, int s, TransformLog* row_log,
               TransformLog* col_log)
      : n_(g.size()),
        s_(s),
        w_(static_cast<std::size_t>(n_) * n_),
        row_log_(row_log),
        col_log_(col_log) {
    for (const auto& [key, wt] : g.weights()) {
      at(key.first, key.second) = wt;
      at(key.second, key.first) = -wt;
    }
  }

  const Scalar& weight(int i, int j) const {
    return w_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
  }

  // B(i, k) = weight(i, n+1-k): the bipartite block in column-digit
  // order, valid once no same-side edge remains.
  const Scalar& b(int i, int k) const { return weight(i, n_ + 1 - k); }

  // Swaps vertices a and a+1 (both on one side) and negates every edge
  // with exactly one endpoint in the pair; this is the congruence the
  // exchange-plus-factor step pair induces.
  void swap_adjacent(int a) {
    if (a + 1 <= s_)
      append(row_log_, exchange_with_factor(StepSide::Input, a));
    else
      append(col_log_, exchange_with_factor(StepSide::Output, n_ - a));
    for (int x = 1; x <= n_; ++x) std::swap(at(a, x), at(a + 1, x));
    for (int x = 1; x <= n_; ++x) std::swap(at(x, a), at(x, a + 1));
    for (int x = 1; x <= n_; ++x) {
      at(a, x) = -at(a, x);
      at(a + 1, x) = -at(a + 1, x);
      at(x, a) = -at(x, a);
      at(x, a + 1) = -at(x, a + 1);
    }
  }

  // Adds u to the weight between same-side vertices a and a+1.
  void bar_between(int a, const Scalar& u) {
    if (u.is_zero()) return;
    if (a + 1 <= s_)
      row_log_->push_back(TransformStep::bar(StepSide::Input, a, u));
    else
      col_log_->push_back(TransformStep::bar(StepSide::Output, n_ - a, u));
    at(a, a + 1) += u;
    at(a + 1, a) -= u;
  }

  // Congruence by I + u e_{i+1,i} for inputs i, i+1: B row i+1 gains
  // u times row i.
  void add_row(int i, const Scalar& u) {
    if (u.is_zero()) return;
    row_log_->push_back(TransformStep::slash(StepSide::Input, i, u));
    elementary(i + 1, i, u);
  }

  // Congruence by I + u e_{a,a+1} for outputs a, a+1: B column n+1-a
  // gains u times column n-a, its left neighbour.
  void add_col(int a, const Scalar& u) {
    if (u.is_zero()) return;
    col_log_->push_back(TransformStep::slash(StepSide::Output, n_ - a, u));
    elementary(a, a + 1, u);
  }

 private:
  Scalar& at(int i, int j) {
    return w_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
  }

  // W <- E W E^T with E = I + u e_{dst,src}; row and column dst gain u
  // times row and column src. In-place is sound: the source line is
  // never modified (its dst entries pick up u * diagonal = 0).
  void elementary(int dst, int src, const Scalar& u) {
    for (int x = 1; x <= n_; ++x) at(dst, x) += u * weight(src, x);
    for (int x = 1; x <= n_; ++x) at(x, dst) += u * weight(x, src);
  }

  static void append(TransformLog* log, const TransformLog& steps) {
    log->insert(log->end(), steps.begin(), steps.end());
  }

  int n_, s_;
  std::vector<Scalar> w_;
  TransformLog* row_log_;
  TransformLog* col_log_;
};

}  // namespace

CanonicalForm canonicalize(const MatrixView& view) {
  const Signature& f = view.signature();
  const int s = view.s();
  const int t = view.t();
  const int n = s + t;

  CanonicalForm form;
  form.s = s;
  form.t = t;
  if (f.is_zero()) {
    form.zero = true;
    return form;
  }

  MatchgateCheck mc = is_matchgate(f);
  if (!mc.ok)
    throw std::invalid_argument(
        "not a matchgate signature: wrong value at input " +
        std::to_string(mc.mismatch));

  // Anchoring, side-aware: a flip of variable v is an input step for
  // v <= s and an output step for v > s; both toggle the same bit, so
  // the graph read off by the matchgate check is unaffected.
  const std::size_t anchor = support_anchor(f);
  for (int v = 1; v <= n; ++v) {
    if ((anchor >> (n - v)) & 1u) continue;
    if (v <= s)
      form.row_log.push_back(TransformStep::flip(StepSide::Input, v));
    else
      form.col_log.push_back(
          TransformStep::flip(StepSide::Output, n + 1 - v));
  }
  const Scalar anchor_value = f.value(anchor);
  if (anchor_value != Scalar(1))
    form.row_log.push_back(
        TransformStep::global_factor(anchor_value.inverse()));

  WorkingGraph wg(mc.graph, s, &form.row_log, &form.col_log);

  // Same-side edges, smallest pair first: hoist the far endpoint next
  // to the near one with adjacent swaps, then bar the edge away. Each
  // round removes exactly one edge; swaps only permute and flip signs.
  auto clear_side = [&wg](int lo, int hi) {
    for (bool more = true; more;) {
      more = false;
      for (int i = lo; i <= hi && !more; ++i)
        for (int j = i + 1; j <= hi && !more; ++j) {
          if (wg.weight(i, j).is_zero()) continue;
          for (int k = j - 1; k > i; --k) wg.swap_adjacent(k);
          wg.bar_between(i, -wg.weight(i, i + 1));
          more = true;
        }
    }
  };
  clear_side(1, s);
  clear_side(s + 1, n);

  // Diagonalize B stage by stage: hoist the first nonzero entry of the
  // live submatrix to the (d, d) pivot, then clear its column bottom-up
  // and its row right-to-left. Finished rows and columns hold zeros
  // wherever later stages touch them, so they stay final.
  int r = 0;
  for (int d = 1; d <= std::min(s, t); ++d) {
    int pi = 0, pk = 0;
    for (int k = d; k <= t && pk == 0; ++k)
      for (int i = d; i <= s; ++i)
        if (!wg.b(i, k).is_zero()) {
          pi = i;
          pk = k;
          break;
        }
    if (pk == 0) break;
    for (int x = pi - 1; x >= d; --x) wg.swap_adjacent(x);
    for (int k = pk; k > d; --k) wg.swap_adjacent(n + 1 - k);
    for (int j = s; j > d; --j) {
      if (wg.b(j, d).is_zero()) continue;
      if (!wg.b(j - 1, d).is_zero())
        wg.add_row(j - 1, -wg.b(j, d) / wg.b(j - 1, d));
      else
        wg.swap_adjacent(j - 1);  // j - 1 > d: the pivot is nonzero
    }
    for (int k = t; k > d; --k) {
      if (wg.b(d, k).is_zero()) continue;
      if (!wg.b(d, k - 1).is_zero())
        wg.add_col(n + 1 - k, -wg.b(d, k) / wg.b(d, k - 1));
      else
        wg.swap_adjacent(n + 1 - k);  // swaps columns k-1 and k
    }
    r = d;
  }

  form.r = r;
  for (int d = 1; d <= r; ++d) form.weights.push_back(wg.b(d, d));
  return form;
}

Signature canonical_signature(const CanonicalForm& c) {
  const int n = c.s + c.t;
  if (c.zero) return Signature(std::vector<int>(n, 2));
  UnderlyingGraph g(n, c.s);
  for (int i = 0; i < c.r; ++i) g.set_weight(i + 1, n - i, c.weights[i]);
  return signature_from_graph(g);
}

Signature reconstruct(const CanonicalForm& c) {
  Signature sig = canonical_signature(c);
  if (c.zero) return sig;
  TransformLog undo = invert(c.row_log);
  const TransformLog undo_cols = invert(c.col_log);
  undo.insert(undo.end(), undo_cols.begin(), undo_cols.end());
  return replay(undo, MatrixView(std::move(sig), c.s)).signature();
}

std::string canonical_form_to_json_text(const CanonicalForm& c) {
  nlohmann::ordered_json j;
  j["kind"] = "canonical-form";
  j["s"] = c.s;
  j["t"] = c.t;
  j["r"] = c.r;
  j["zero"] = c.zero;
  std::vector<std::string> weights;
  for (const Scalar& w : c.weights) weights.push_back(w.compact_str());
  j["weights"] = weights;
  j["row_log"] = log_to_text(c.row_log);
  j["col_log"] = log_to_text(c.col_log);
  return j.dump(2) + "\n";
}

CanonicalForm canonical_form_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad json: ") + e.what());
  }
  if (j.value("kind", "") != "canonical-form")
    throw std::invalid_argument("expected a canonical-form artifact");
  CanonicalForm c;
  try {
    c.s = j.at("s").get<int>();
    c.t = j.at("t").get<int>();
    c.r = j.at("r").get<int>();
    c.zero = j.at("zero").get<bool>();
    for (const auto& w : j.at("weights"))
      c.weights.push_back(Scalar::parse(w.get<std::string>()));
    c.row_log = log_from_text(j.at("row_log").get<std::string>());
    c.col_log = log_from_text(j.at("col_log").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad canonical form: ") +
                                e.what());
  }
  if (c.s < 0 || c.t < 0 || c.r < 0 || c.r > std::min(c.s, c.t) ||
      static_cast<int>(c.weights.size()) != c.r)
    throw std::invalid_argument("inconsistent canonical form");
  return c;
}

}  // namespace holoalg
