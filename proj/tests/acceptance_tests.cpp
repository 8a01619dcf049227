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

// End-to-end checks of the library's contract, one line of output per
// criterion. Everything is exact rational arithmetic; a single
// mismatching bit anywhere fails the criterion.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "holoalg/canonical.hpp"
#include "holoalg/collapse.hpp"
#include "holoalg/holant.hpp"
#include "holoalg/matchgate.hpp"
#include "holoalg/random.hpp"
#include "holoalg/transforms.hpp"

using namespace holoalg;

namespace {

Signature random_binary_signature(Rng& rng, int arity) {
  Signature f(std::vector<int>(arity, 2));
  for (std::size_t m = 0; m < f.size(); ++m) f.value(m) = random_scalar(rng);
  return f;
}

Signature random_signature(Rng& rng, std::vector<int> domains) {
  Signature f(std::move(domains));
  for (std::size_t m = 0; m < f.size(); ++m) f.value(m) = random_scalar(rng);
  return f;
}

UnderlyingGraph random_graph(Rng& rng, int n, bool dense = false) {
  UnderlyingGraph g(n);
  std::uniform_int_distribution<int> keep(0, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!dense && keep(rng) == 0) continue;
      g.set_weight(i, j, dense ? random_nonzero_scalar(rng)
                               : random_scalar(rng));
    }
  return g;
}

TransformStep random_step_of_kind(Rng& rng, StepKind kind, int s, int t) {
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    const StepSide side = coin(rng) ? StepSide::Input : StepSide::Output;
    const int digits = side == StepSide::Input ? s : t;
    const int span = kind == StepKind::Flip ? 1 : 2;
    if (kind != StepKind::GlobalFactor && digits < span) continue;
    switch (kind) {
      case StepKind::Flip: {
        std::uniform_int_distribution<int> pos(1, digits);
        return TransformStep::flip(side, pos(rng));
      }
      case StepKind::GlobalFactor:
        return TransformStep::global_factor(random_nonzero_scalar(rng));
      case StepKind::Exchange: {
        std::uniform_int_distribution<int> pos(1, digits - 1);
        return TransformStep::exchange(side, pos(rng));
      }
      case StepKind::Bar: {
        std::uniform_int_distribution<int> pos(1, digits - 1);
        return TransformStep::bar(side, pos(rng), random_scalar(rng));
      }
      case StepKind::Slash: {
        std::uniform_int_distribution<int> pos(1, digits - 1);
        return TransformStep::slash(side, pos(rng), random_scalar(rng));
      }
    }
  }
}

// 1. The six-vertex gadget with the weighted centre edge realizes the
//    sign crossover on all sixteen inputs.
bool crossover_criterion(std::ostream& out) {
  const Instance gadget = crossover_instance();
  gadget.validate();
  const Signature realized = gadget_signature(gadget);
  const Signature direct = crossover_signature();
  if (realized.arity() != 4) return false;
  for (std::size_t m = 0; m < 16; ++m) {
    Scalar expected(0);
    if (m == 0b0000 || m == 0b0101 || m == 0b1010) expected = Scalar(1);
    if (m == 0b1111) expected = Scalar(-1);
    if (realized.value(m) != expected || direct.value(m) != expected) {
      out << "  input " << m << ": got " << realized.value(m).str() << "\n";
      return false;
    }
  }
  return true;
}

// 2. Rewriting either side of a closed instance by the same basis gives
//    the same value, on random instances and bases.
bool holant_criterion(std::ostream& out) { return verify_holant(2026, 50, &out); }

// 3. Each of the five step types preserves rank and undoes exactly.
bool step_criterion(std::ostream& out) {
  Rng rng(303);
  const int s = 3, t = 3;
  for (StepKind kind : {StepKind::Flip, StepKind::GlobalFactor,
                        StepKind::Exchange, StepKind::Bar, StepKind::Slash}) {
    for (int trial = 0; trial < 30; ++trial) {
      const MatrixView view(random_binary_signature(rng, s + t), s);
      const TransformStep step = random_step_of_kind(rng, kind, s, t);
      const MatrixView stepped = apply(step, view);
      if (rank(stepped) != rank(view)) {
        out << "  rank changed under a step of kind "
            << static_cast<int>(kind) << "\n";
        return false;
      }
      if (apply(invert_step(step), stepped) != view) {
        out << "  inverse failed for a step of kind "
            << static_cast<int>(kind) << "\n";
        return false;
      }
    }
  }
  return true;
}

// 4. A bar step adds onto exactly one weight of the underlying graph,
//    and multiplying weight matrices multiplies the introduced
//    signatures.
bool graph_effect_criterion(std::ostream& out) {
  Rng rng(304);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 5;
    std::uniform_int_distribution<int> split(2, n - 2);
    const int s = split(rng);
    UnderlyingGraph g = random_graph(rng, n);
    const Signature f = signature_from_graph(g);

    // Input side: zero the weight between adjacent inputs i, i+1.
    std::uniform_int_distribution<int> ipos(1, s - 1);
    const int i = ipos(rng);
    UnderlyingGraph zi = g;
    zi.set_weight(i, i + 1, Scalar(0));
    const Signature fi =
        apply(TransformStep::bar(StepSide::Input, i, -g.weight(i, i + 1)),
              MatrixView(f, s))
            .signature();
    if (fi != signature_from_graph(zi)) {
      out << "  input bar at " << i << " did not zero only W(" << i << ","
          << i + 1 << ")\n";
      return false;
    }

    // Output side: position p touches vertices (s+t-p, s+t+1-p).
    std::uniform_int_distribution<int> opos(1, n - s - 1);
    const int p = opos(rng);
    UnderlyingGraph zo = g;
    zo.set_weight(n - p, n + 1 - p, Scalar(0));
    const Signature fo =
        apply(TransformStep::bar(StepSide::Output, p,
                                 -g.weight(n - p, n + 1 - p)),
              MatrixView(f, s))
            .signature();
    if (fo != signature_from_graph(zo)) {
      out << "  output bar at " << p << " did not zero only W(" << n - p
          << "," << n + 1 - p << ")\n";
      return false;
    }
  }

  for (int trial = 0; trial < 15; ++trial) {
    const ScalarMatrix w1 = random_matrix(rng, 3, 3);
    const ScalarMatrix w2 = random_matrix(rng, 3, 3);
    const UnderlyingGraph g1 = bipartite_from_matrix(w1);
    const UnderlyingGraph g2 = bipartite_from_matrix(w2);
    const UnderlyingGraph g12 = bipartite_from_matrix(mul(w1, w2));
    const Signature product =
        matrix_product(MatrixView(signature_from_graph(g1), 3),
                       MatrixView(signature_from_graph(g2), 3))
            .signature();
    if (signature_from_graph(g12) != product) {
      out << "  product law failed on a 3x3 pair\n";
      return false;
    }
  }
  return true;
}

// 5. Canonical forms: matching form reached, rank is exactly 2^r, and
//    the inverse log reproduces the input bit for bit.
bool canonical_criterion(std::ostream& out) {
  Rng rng(305);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> size(2, 8);
    const int n = size(rng);
    std::uniform_int_distribution<int> split(0, n);
    const int s = split(rng);
    const UnderlyingGraph g = random_graph(rng, n);

    TransformLog tweak;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int p = 1; p <= s; ++p)
      if (coin(rng)) tweak.push_back(TransformStep::flip(StepSide::Input, p));
    for (int p = 1; p <= n - s; ++p)
      if (coin(rng)) tweak.push_back(TransformStep::flip(StepSide::Output, p));
    tweak.push_back(TransformStep::global_factor(random_nonzero_scalar(rng)));
    const MatrixView view =
        replay(tweak, MatrixView(signature_from_graph(g), s));

    const CanonicalForm c = canonicalize(view);
    TransformLog all = c.row_log;
    all.insert(all.end(), c.col_log.begin(), c.col_log.end());
    if (replay(all, view).signature() != canonical_signature(c)) {
      out << "  trial " << trial << ": logs do not reach the matching form\n";
      return false;
    }
    if (rank(view) != std::size_t{1} << c.r) {
      out << "  trial " << trial << ": rank is not 2^r\n";
      return false;
    }
    if (reconstruct(c) != view.signature()) {
      out << "  trial " << trial << ": reconstruction differs\n";
      return false;
    }
  }
  return true;
}

// 6. Introduced signatures pass the membership test; dense arity-4
//    tensors fail it with an honest witness.
bool membership_criterion(std::ostream& out) {
  Rng rng(306);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> size(0, 6);
    const UnderlyingGraph g = random_graph(rng, size(rng));
    if (!is_matchgate(signature_from_graph(g)).ok) {
      out << "  an introduced signature was rejected\n";
      return false;
    }
  }
  for (int trial = 0; trial < 30; ++trial) {
    Signature f(std::vector<int>(4, 2));
    for (std::size_t m = 0; m < 16; ++m)
      f.value(m) = random_nonzero_scalar(rng);
    const MatchgateCheck check = is_matchgate(f);
    if (check.ok) {
      out << "  a dense tensor passed\n";
      return false;
    }
    if (check.actual != f.value(check.mismatch) ||
        check.expected == check.actual) {
      out << "  witness is not honest\n";
      return false;
    }
  }
  return true;
}

std::size_t embed_column(std::size_t narrow, const std::vector<int>& constants) {
  std::size_t low = 0;
  for (int c : constants) low = low << 1 | static_cast<std::size_t>(c);
  return narrow << constants.size() | low;
}

// 7. The four collapse constructions, each verified on random instances.
bool collapse_criterion(std::ostream& out) {
  Rng rng(307);
  bool ok = true;

  auto run = [&](const char* name, const Base& base,
                 const std::vector<Signature>& fs,
                 const std::vector<Signature>& hs,
                 const CollapsedProblem& coll, int max_r) {
    if (coll.new_base.m.cols != std::size_t{1} << coll.r) {
      out << "  " << name << ": base width is not 2^r\n";
      ok = false;
      return;
    }
    if (coll.r > max_r) {
      out << "  " << name << ": r exceeds its bound\n";
      ok = false;
      return;
    }
    std::ostringstream log;
    if (!verify_collapse(base, fs, hs, coll, 12, 1234, &log)) {
      out << "  " << name << ": counterexample found\n" << log.str();
      ok = false;
    }
  };

  // Column stripping over a two-row base, pinned constants (1,1) and
  // the relaxed all-zero variant.
  for (std::vector<int> constants :
       {std::vector<int>{1, 1}, std::vector<int>{0, 0}}) {
    ScalarMatrix m(2, 16);
    for (std::size_t jp = 0; jp < 4; ++jp)
      for (std::size_t i = 0; i < 2; ++i)
        m.at(i, embed_column(jp, constants)) = random_scalar(rng);
    const Base base(m, 4);
    const std::vector<Signature> fs{random_signature(rng, {2, 2})};
    const std::vector<Signature> hs{random_signature(rng, {16})};
    run(constants[0] ? "strip (1,1)" : "strip (0,0)", base, fs, hs,
        strip_columns(base, hs, constants), 2);
  }

  // Realizer collapse of a rank-2 matchgate base.
  {
    const ScalarMatrix m(2, 4, {Scalar(0), Scalar(2), Scalar(3), Scalar(0),
                                Scalar(5), Scalar(0), Scalar(0), Scalar(1)});
    const Base base(m, 2);
    const ScalarMatrix a(2, 2, {Scalar(7), Scalar(0), Scalar(0), Scalar(1)});
    const std::vector<Signature> fs{random_signature(rng, {2}),
                                    random_signature(rng, {2, 2})};
    const std::vector<Signature> hs{random_signature(rng, {4})};
    run("realizer", base, fs, hs, collapse_via_realizer(base, a, fs, hs), 1);
  }

  // Cover collapse: a three-row base factored through a rank-2
  // matchgate.
  {
    const ScalarMatrix p_mat(2, 4, {Scalar(0), Scalar(2), Scalar(3), Scalar(0),
                                    Scalar(5), Scalar(0), Scalar(0), Scalar(1)});
    const MatrixView p = MatrixView::from_matrix(p_mat, {2}, {2, 2});
    const ScalarMatrix q(3, 2, {Scalar(1), Scalar(2), Scalar(3), Scalar(4),
                                Scalar(5), Scalar(6)});
    const Base base(mul(q, p_mat), 2);
    const std::vector<Signature> fs{random_signature(rng, {3})};
    const std::vector<Signature> hs{random_signature(rng, {4})};
    run("cover", base, fs, hs, collapse_via_cover(base, p, q, fs, hs), 1);
  }

  // Symmetric collapse over a domain of size three, with two and three
  // base digits; r must stay within log2(3).
  {
    Signature f(std::vector<int>{3, 3});
    f.value(f.flat_index({0, 0})) = Scalar(2);
    f.value(f.flat_index({1, 1})) = Scalar(1);

    const ScalarMatrix m2(3, 4, {Scalar(0), Scalar(1), Scalar(0), Scalar(0),
                                 Scalar(0), Scalar(0), Scalar(0), Scalar(1),
                                 Scalar(0), Scalar(1), Scalar(0), Scalar(1)});
    const Base base2(m2, 2);
    const std::vector<Signature> hs2{random_signature(rng, {4})};
    run("symmetric t=2", base2, {f}, hs2, collapse_symmetric(f, base2, hs2),
        1);

    ScalarMatrix m3(3, 8);
    m3.at(0, 3) = Scalar(1);
    m3.at(1, 7) = Scalar(1);
    m3.at(2, 3) = Scalar(1);
    m3.at(2, 7) = Scalar(1);
    const Base base3(m3, 3);
    const std::vector<Signature> hs3{random_signature(rng, {8})};
    run("symmetric t=3", base3, {f}, hs3, collapse_symmetric(f, base3, hs3),
        1);
  }

  return ok;
}

// Pfaffian by the fully expanded signed sum over all permutations:
// sum over pi of sgn(pi) prod_i w(pi(2i-1), pi(2i)) equals 2^k k!
// times the pfaffian for n = 2k.
Scalar permutation_sum(const UnderlyingGraph& g) {
  const int n = g.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  Scalar total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i + 1 < perm.size(); i += 2)
      term *= g.weight(perm[i], perm[i + 1]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// 8. Recursive pfaffian against the permutation expansion and the
//    determinant, then the planarization ratio experiment.
bool pfaffian_criterion(std::ostream& out) {
  Rng rng(308);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const UnderlyingGraph g = random_graph(rng, n, true);
      const Scalar pf = pfaffian(g);
      if (n % 2 == 1) {
        if (!pf.is_zero()) {
          out << "  odd size " << n << " gave a nonzero pfaffian\n";
          return false;
        }
        continue;
      }
      Scalar norm(1);
      for (int i = 2; i <= n / 2; ++i) norm *= Scalar(i);
      for (int i = 0; i < n / 2; ++i) norm *= Scalar(2);
      if (permutation_sum(g) != norm * pf) {
        out << "  permutation expansion disagrees at n=" << n << "\n";
        return false;
      }
      ScalarMatrix skew(static_cast<std::size_t>(n),
                        static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          skew.at(static_cast<std::size_t>(i) - 1,
                  static_cast<std::size_t>(j) - 1) = g.weight(i, j);
      if (pf * pf != determinant(skew)) {
        out << "  pfaffian squared is not the determinant at n=" << n << "\n";
        return false;
      }
    }
  }

  // Ratio experiment: evaluate the planarized instance against the
  // pfaffian on graphs with a nonzero pfaffian and report the ratio.
  std::vector<Scalar> ratios;
  out << "  planarization ratio report:";
  for (int n : {2, 4}) {
    Scalar ratio;
    bool first = true;
    bool consistent = true;
    for (int trial = 0; trial < 5; ++trial) {
      UnderlyingGraph g = random_graph(rng, n, true);
      while (pfaffian(g).is_zero()) g = random_graph(rng, n, true);
      const Scalar r = evaluate(pfaffian_crossover_instance(g)) / pfaffian(g);
      if (first) {
        ratio = r;
        first = false;
      } else if (r != ratio) {
        consistent = false;
      }
    }
    out << " n=" << n << " -> " << ratio.compact_str()
        << (consistent ? "" : " (inconsistent)");
    ratios.push_back(ratio);
    if (!consistent) {
      out << "\n";
      return false;
    }
  }
  out << (ratios[0] == ratios[1] ? "; consistent across sizes\n"
                                 : "; differs across sizes\n");
  return ratios[0] == ratios[1];
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*fn)(std::ostream&);
    double cap_seconds;
  };
  const Criterion criteria[] = {
      {"crossover gadget realizes the sign crossover", crossover_criterion, 1},
      {"side rewrites agree on closed instances", holant_criterion, 30},
      {"steps preserve rank and invert exactly", step_criterion, 0},
      {"bar zeroes one weight; products multiply signatures",
       graph_effect_criterion, 0},
      {"canonical form: matching form, rank 2^r, exact round trip",
       canonical_criterion, 60},
      {"membership accepts introduced, rejects dense with witness",
       membership_criterion, 0},
      {"base collapses verified on random instances", collapse_criterion, 120},
      {"pfaffian expansions agree; planarization ratio consistent",
       pfaffian_criterion, 0},
  };

  int failures = 0;
  int number = 0;
  for (const Criterion& c : criteria) {
    ++number;
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = c.fn(detail);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.cap_seconds > 0 && seconds >= c.cap_seconds) {
      detail << "  exceeded the " << c.cap_seconds << "s budget\n";
      ok = false;
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << c.name
              << " (" << seconds << "s)\n";
    if (!detail.str().empty()) std::cout << detail.str();
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
