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

#include "holoalg/matchgate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace holoalg {

namespace {

constexpr int kMaxPfaffianOrder = 16;

void check_vertex(const UnderlyingGraph& g, int v) {
  if (v < 1 || v > g.size())
    throw std::out_of_range("vertex index out of range");
}

}  // namespace

UnderlyingGraph::UnderlyingGraph(int n, int split) : n_(n), split_(split) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (split > n) throw std::invalid_argument("split exceeds vertex count");
}

void UnderlyingGraph::set_split(int split) {
  if (split > n_) throw std::invalid_argument("split exceeds vertex count");
  split_ = split;
}

Scalar UnderlyingGraph::weight(int i, int j) const {
  check_vertex(*this, i);
  check_vertex(*this, j);
  if (i == j) return Scalar(0);
  auto it = weights_.find({std::min(i, j), std::max(i, j)});
  if (it == weights_.end()) return Scalar(0);
  return i < j ? it->second : -it->second;
}

void UnderlyingGraph::set_weight(int i, int j, const Scalar& w) {
  check_vertex(*this, i);
  check_vertex(*this, j);
  if (i == j) {
    if (!w.is_zero())
      throw std::invalid_argument("nonzero diagonal weight");
    return;
  }
  std::pair<int, int> key{std::min(i, j), std::max(i, j)};
  if (w.is_zero()) {
    weights_.erase(key);
    return;
  }
  weights_[key] = i < j ? w : -w;
}

bool UnderlyingGraph::is_bipartite() const {
  if (split_ < 0) return false;
  for (const auto& [key, w] : weights_) {
    const bool left_i = key.first <= split_;
    const bool left_j = key.second <= split_;
    if (left_i == left_j) return false;
  }
  return true;
}

namespace {

// Shared recursion for pfaffian and signature_from_graph: pf over the
// vertex subset `mask` (bit v-1 = vertex v), expanded along the lowest
// vertex, memoized so all 2^n restrictions of one graph reuse subcalls.
class PfaffianTable {
 public:
  explicit PfaffianTable(const UnderlyingGraph& g) : g_(g) {
    if (g.size() > kMaxPfaffianOrder)
      throw std::invalid_argument("pfaffian order capped at 16 vertices");
  }

  const Scalar& pf(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    Scalar acc;
    if (mask == 0) {
      acc = Scalar(1);
    } else if (std::popcount(mask) % 2 == 0) {
      const int a = std::countr_zero(mask) + 1;
      std::uint32_t rest = mask & (mask - 1);
      // Position of the partner within the ascending vertex list fixes
      // the sign: (-1)^k for the k-th vertex, so position 2 is positive.
      int pos = 1;
      for (std::uint32_t m = rest; m != 0; m &= m - 1) {
        ++pos;
        const int b = std::countr_zero(m) + 1;
        const Scalar w = g_.weight(a, b);
        if (w.is_zero()) continue;
        const Scalar term = w * pf(mask ^ (1u << (a - 1)) ^ (1u << (b - 1)));
        if (pos % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
    }
    return memo_.emplace(mask, std::move(acc)).first->second;
  }

 private:
  const UnderlyingGraph& g_;
  std::unordered_map<std::uint32_t, Scalar> memo_;
};

std::uint32_t full_mask(int n) {
  return n == 32 ? ~0u : (1u << n) - 1u;
}

// Vertices at which the flat input (variable 1 = most significant bit)
// is zero, as a vertex mask.
std::uint32_t zero_vertices(std::size_t flat, int n) {
  std::uint32_t mask = 0;
  for (int v = 1; v <= n; ++v)
    if (((flat >> (n - v)) & 1u) == 0) mask |= 1u << (v - 1);
  return mask;
}

}  // namespace

Scalar pfaffian(const UnderlyingGraph& g) {
  PfaffianTable table(g);
  return table.pf(full_mask(g.size()));
}

Signature signature_from_graph(const UnderlyingGraph& g) {
  const int n = g.size();
  PfaffianTable table(g);
  Signature sig(std::vector<int>(n, 2));
  for (std::size_t flat = 0; flat < sig.size(); ++flat)
    sig.value(flat) = table.pf(zero_vertices(flat, n));
  return sig;
}

// Ascending scan with a strict comparison keeps the smallest flat index
// among Hamming-weight ties.
std::size_t support_anchor(const Signature& f) {
  std::size_t best = 0;
  int best_weight = -1;
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    if (f.value(flat).is_zero()) continue;
    const int w = std::popcount(static_cast<std::uint64_t>(flat));
    if (w > best_weight) {
      best_weight = w;
      best = flat;
    }
  }
  if (best_weight < 0)
    throw std::invalid_argument("zero signature has no core");
  return best;
}

namespace {

void require_binary(const Signature& f) {
  if (!f.all_binary())
    throw std::invalid_argument("binary domains required");
}

}  // namespace

Core extract_core(const Signature& f) {
  require_binary(f);
  Core core;
  core.base_point = support_anchor(f);
  core.base_value = f.value(core.base_point);
  const int n = f.arity();
  core.values[core.base_point] = core.base_value;
  for (int i = 0; i < n; ++i) {
    const std::size_t one = core.base_point ^ (std::size_t{1} << i);
    core.values[one] = f.value(one);
    for (int j = i + 1; j < n; ++j) {
      const std::size_t two = one ^ (std::size_t{1} << j);
      core.values[two] = f.value(two);
    }
  }
  return core;
}

MatchgateCheck is_matchgate(const Signature& f) {
  require_binary(f);
  MatchgateCheck result;
  if (f.is_zero()) {
    result.ok = true;
    result.zero = true;
    return result;
  }

  const int n = f.arity();
  const std::size_t anchor = support_anchor(f);
  TransformLog log;
  for (int v = 1; v <= n; ++v)
    if (((anchor >> (n - v)) & 1u) == 0)
      log.push_back(TransformStep::flip(StepSide::Input, v));
  const Scalar anchor_value = f.value(anchor);
  if (anchor_value != Scalar(1))
    log.push_back(TransformStep::global_factor(anchor_value.inverse()));

  const Signature normalized = apply_as_inputs(log, f);
  const std::size_t ones = f.size() - 1;

  UnderlyingGraph graph(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const std::size_t two_zeros =
          ones ^ (std::size_t{1} << (n - i)) ^ (std::size_t{1} << (n - j));
      graph.set_weight(i, j, normalized.value(two_zeros));
    }

  const Signature rebuilt = signature_from_graph(graph);
  const std::size_t flip_mask = ones ^ anchor;
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    if (normalized.value(flat) == rebuilt.value(flat)) continue;
    result.ok = false;
    result.mismatch = flat ^ flip_mask;
    result.expected = rebuilt.value(flat) * anchor_value;
    result.actual = f.value(flat ^ flip_mask);
    return result;
  }
  result.ok = true;
  result.graph = std::move(graph);
  result.log = std::move(log);
  return result;
}

ScalarMatrix bipartite_matrix(const UnderlyingGraph& g) {
  if (!g.is_bipartite())
    throw std::invalid_argument("bipartite graph required");
  const int s = g.inputs();
  const int t = g.outputs();
  ScalarMatrix b(s, t);
  for (int i = 1; i <= s; ++i)
    for (int k = 1; k <= t; ++k)
      b.at(i - 1, k - 1) = g.weight(i, s + t + 1 - k);
  return b;
}

UnderlyingGraph bipartite_from_matrix(const ScalarMatrix& b) {
  const int s = static_cast<int>(b.rows);
  const int t = static_cast<int>(b.cols);
  UnderlyingGraph g(s + t, s);
  for (int i = 1; i <= s; ++i)
    for (int k = 1; k <= t; ++k)
      g.set_weight(i, s + t + 1 - k, b.at(i - 1, k - 1));
  return g;
}

UnderlyingGraph multiply_introduced(const UnderlyingGraph& g1,
                                    const UnderlyingGraph& g2) {
  if (!g1.is_bipartite() || !g2.is_bipartite())
    throw std::invalid_argument("bipartite graphs required");
  if (g1.outputs() != g2.inputs())
    throw std::invalid_argument("inner dimensions disagree");
  return bipartite_from_matrix(
      mul(bipartite_matrix(g1), bipartite_matrix(g2)));
}

Signature crossover_signature() {
  std::vector<Scalar> values(16);
  values[0b0000] = Scalar(1);
  values[0b0101] = Scalar(1);
  values[0b1010] = Scalar(1);
  values[0b1111] = Scalar(-1);
  return Signature({2, 2, 2, 2}, std::move(values));
}

namespace {

Signature exactly_one(int arity) {
  Signature sig(std::vector<int>(arity, 2));
  for (int i = 0; i < arity; ++i)
    sig.value(std::size_t{1} << i) = Scalar(1);
  return sig;
}

Signature edge_weight(const Scalar& w) {
  Signature sig({2, 2});
  sig.value(0) = Scalar(1);
  sig.value(3) = w;
  return sig;
}

}  // namespace

Instance crossover_instance() {
  Instance inst;
  inst.domain_size = 2;
  inst.signatures.emplace("one3", exactly_one(3));
  inst.signatures.emplace("w_one", edge_weight(Scalar(1)));
  inst.signatures.emplace("w_neg", edge_weight(Scalar(-1)));

  inst.right.assign(6, "one3");
  std::vector<int> next_slot(6, 0);
  for (int v = 0; v < 4; ++v) {
    inst.dangling.push_back({VertexSide::Right, {v, 0}});
    next_slot[v] = 1;
  }

  // The six Exactly-One vertices of the crossover gadget; the centre
  // edge (5,6) carries the -1. Each edge passes through its own weight
  // vertex.
  const std::pair<int, int> gadget_edges[] = {
      {1, 5}, {1, 2}, {2, 6}, {3, 6}, {3, 4}, {4, 5}, {5, 6}};
  for (const auto& [u, v] : gadget_edges) {
    const int w = static_cast<int>(inst.left.size());
    inst.left.push_back(u == 5 && v == 6 ? "w_neg" : "w_one");
    inst.edges.push_back({{w, 0}, {u - 1, next_slot[u - 1]++}});
    inst.edges.push_back({{w, 1}, {v - 1, next_slot[v - 1]++}});
  }
  inst.validate();
  return inst;
}

namespace {

struct Chord {
  int a = 0, b = 0;  // endpoints, a < b
  Scalar weight;
};

struct Crossing {
  int vertex = 0;     // right-vertex index of the crossover node
  double param = 0;   // position along the chord being threaded
  bool first = false; // true when that chord owns slots 0/2
};

}  // namespace

Instance pfaffian_crossover_instance(const UnderlyingGraph& g) {
  const int n = g.size();
  std::vector<Chord> chords;
  for (const auto& [key, w] : g.weights())
    chords.push_back({key.first, key.second, w});

  // Circle layout with a small aperiodic shake so that no three chords
  // meet in a point and crossing parameters are distinct.
  std::vector<double> px(n + 1), py(n + 1);
  for (int v = 1; v <= n; ++v) {
    const double theta =
        2.0 * M_PI * (v - 1) / n + 0.01 * std::sin(3.7 * v);
    px[v] = std::cos(theta);
    py[v] = std::sin(theta);
  }

  Instance inst;
  inst.domain_size = 2;
  std::vector<int> degree(n + 1, 0);
  for (const Chord& c : chords) {
    ++degree[c.a];
    ++degree[c.b];
  }
  for (int v = 1; v <= n; ++v) {
    const std::string name = "one" + std::to_string(degree[v]);
    inst.signatures.emplace(name, exactly_one(degree[v]));
    inst.right.push_back(name);
  }
  inst.signatures.emplace("cross", crossover_signature());

  // Chords (a,b) and (c,d) with a < b, c < d cross iff their endpoints
  // interleave around the circle.
  std::vector<std::vector<Crossing>> along(chords.size());
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const Chord& ci = chords[i];
      const Chord& cj = chords[j];
      const bool crossing = (ci.a < cj.a && cj.a < ci.b && ci.b < cj.b) ||
                            (cj.a < ci.a && ci.a < cj.b && cj.b < ci.b);
      if (!crossing) continue;
      const double rx = px[ci.b] - px[ci.a], ry = py[ci.b] - py[ci.a];
      const double sx = px[cj.b] - px[cj.a], sy = py[cj.b] - py[cj.a];
      const double denom = rx * sy - ry * sx;
      const double qx = px[cj.a] - px[ci.a], qy = py[cj.a] - py[ci.a];
      const double ti = (qx * sy - qy * sx) / denom;
      const double tj = (qx * ry - qy * rx) / denom;
      const int vertex = static_cast<int>(inst.right.size());
      inst.right.push_back("cross");
      along[i].push_back({vertex, ti, true});
      along[j].push_back({vertex, tj, false});
    }
  for (auto& list : along)
    std::sort(list.begin(), list.end(),
              [](const Crossing& x, const Crossing& y) {
                return x.param < y.param;
              });

  std::vector<int> next_slot(inst.right.size(), 0);
  auto weight_name = [&inst](const Scalar& w) {
    const std::string name = "w " + w.compact_str();
    inst.signatures.emplace(name, edge_weight(w));
    return name;
  };

  // Thread each chord from a to b: Exactly-One endpoint, the crossover
  // nodes in geometric order, Exactly-One endpoint, with a weight vertex
  // on every segment. The chord's weight rides the first segment only.
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const Chord& c = chords[i];
    std::vector<std::pair<int, int>> stops;  // (vertex, slot)
    stops.push_back({c.a - 1, next_slot[c.a - 1]++});
    for (const Crossing& x : along[i]) {
      stops.push_back({x.vertex, x.first ? 0 : 1});
      stops.push_back({x.vertex, x.first ? 2 : 3});
    }
    stops.push_back({c.b - 1, next_slot[c.b - 1]++});
    for (std::size_t k = 0; k + 1 < stops.size(); k += 2) {
      const int w = static_cast<int>(inst.left.size());
      inst.left.push_back(weight_name(k == 0 ? c.weight : Scalar(1)));
      inst.edges.push_back({{w, 0}, {stops[k].first, stops[k].second}});
      inst.edges.push_back({{w, 1}, {stops[k + 1].first, stops[k + 1].second}});
    }
  }
  inst.validate();
  return inst;
}

std::string graph_to_text(const UnderlyingGraph& g) {
  std::ostringstream os;
  os << "n " << g.size() << "\n";
  if (g.split() >= 0)
    os << "split " << g.inputs() << " " << g.outputs() << "\n";
  for (const auto& [key, w] : g.weights())
    os << key.first << " " << key.second << " " << rational_str(w.real())
       << " " << rational_str(w.imag()) << "\n";
  return os.str();
}

UnderlyingGraph graph_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto fail = [&lineno](const std::string& what) {
    throw std::invalid_argument("graph line " + std::to_string(lineno) +
                                ": " + what);
  };

  UnderlyingGraph g;
  bool have_n = false;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "n") {
      if (have_n) fail("duplicate n header");
      int n = -1;
      if (!(ls >> n) || n < 0) fail("expected vertex count");
      g = UnderlyingGraph(n);
      have_n = true;
    } else if (head == "split") {
      if (!have_n) fail("split before n");
      int s = -1, t = -1;
      if (!(ls >> s >> t) || s < 0 || t < 0) fail("expected split sizes");
      if (s + t != g.size()) fail("split sizes do not sum to n");
      g.set_split(s);
    } else {
      if (!have_n) fail("expected n header first");
      int i = 0, j = 0;
      std::string re, im;
      std::istringstream ws(line);
      if (!(ws >> i >> j >> re >> im)) fail("expected: i j re im");
      std::string extra;
      if (ws >> extra) fail("trailing text");
      if (i < 1 || j < 1 || i > g.size() || j > g.size() || i == j)
        fail("bad vertex pair");
      if (!g.weight(i, j).is_zero()) fail("duplicate weight");
      try {
        g.set_weight(i, j, Scalar(parse_rational(re), parse_rational(im)));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
  }
  if (!have_n) throw std::invalid_argument("graph text has no n header");
  return g;
}

}  // namespace holoalg
