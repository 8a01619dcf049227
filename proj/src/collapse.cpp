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

#include "holoalg/collapse.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holoalg/holant.hpp"
#include "holoalg/random.hpp"
#include "json.hpp"

namespace holoalg {

Base::Base(ScalarMatrix matrix, int t_) : m(std::move(matrix)), t(t_) {
  if (t < 0 || t >= 32 || m.cols != (std::size_t{1} << t))
    throw std::invalid_argument("base needs 2^t columns");
}

namespace {

// The matrix by which the logged output steps multiply a view on the
// right: replaying them on an identity view collects every factor,
// global ones included.
ScalarMatrix right_factor(const TransformLog& col_log, int t) {
  return replay(col_log, identity_view(std::vector<int>(t, 2))).to_matrix();
}

// Left signatures meet the base along its rows, so every variable of
// every left signature must range over the row count.
void check_left_domains(const std::vector<Signature>& fs, std::size_t rows) {
  for (const Signature& f : fs)
    for (int d : f.domains())
      if (d != static_cast<int>(rows))
        throw std::invalid_argument(
            "left signature domains must match the base rows");
}

// Digits r+1..t shared by every nonzero column of mc, in digit order.
// All nonzero columns must agree and at least one must exist.
std::vector<int> detect_constants(const ScalarMatrix& mc, int t, int r) {
  const int k = t - r;
  const std::size_t mask = (std::size_t{1} << k) - 1;
  bool found = false;
  std::size_t low = 0;
  for (std::size_t j = 0; j < mc.cols; ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < mc.rows && !nonzero; ++i)
      nonzero = !mc.at(i, j).is_zero();
    if (!nonzero) continue;
    if (!found) {
      found = true;
      low = j & mask;
    } else if (low != (j & mask)) {
      throw std::invalid_argument(
          "transformed base columns disagree in the pinned digits");
    }
  }
  if (!found)
    throw std::invalid_argument("transformed base has no nonzero column");
  std::vector<int> constants(k);
  for (int i = 0; i < k; ++i)
    constants[i] = static_cast<int>((low >> (k - 1 - i)) & 1);
  return constants;
}

// Shared tail of the realizer and cover paths: replay the column steps
// on the base, pin the digits the matching form fixes, restrict the
// right signatures through the inverse factor. The left side is not
// touched by either path, so new_left stays empty.
CollapsedProblem collapse_columns(const Base& base, const CanonicalForm& cf,
                                  const std::vector<Signature>& hs) {
  const ScalarMatrix k = right_factor(cf.col_log, base.t);
  ScalarMatrix mc = mul(base.m, k);
  const std::vector<int> constants = detect_constants(mc, base.t, cf.r);
  const ScalarMatrix k_inv = right_factor(invert(cf.col_log), base.t);
  std::vector<Signature> restricted;
  for (const Signature& h : hs)
    restricted.push_back(transform_right(k_inv, h));
  CollapsedProblem out =
      strip_columns(Base(std::move(mc), base.t), restricted, constants);
  out.certificate.col_log = cf.col_log;
  return out;
}

}  // namespace

CollapsedProblem strip_columns(const Base& base,
                               const std::vector<Signature>& hs,
                               const std::vector<int>& constants) {
  const int t = base.t;
  const int k = static_cast<int>(constants.size());
  if (k > t) throw std::invalid_argument("more pinned digits than digits");
  for (int c : constants)
    if (c != 0 && c != 1)
      throw std::invalid_argument("pinned digits must be 0 or 1");
  const int r = t - k;
  std::size_t low = 0;
  for (int c : constants) low = (low << 1) | static_cast<unsigned>(c);
  const std::size_t mask = (std::size_t{1} << k) - 1;
  for (std::size_t j = 0; j < base.m.cols; ++j) {
    if ((j & mask) == low) continue;
    for (std::size_t i = 0; i < base.m.rows; ++i)
      if (!base.m.at(i, j).is_zero())
        throw std::invalid_argument(
            "column " + std::to_string(j) +
            " of the base is nonzero outside the pinned block");
  }

  ScalarMatrix e(std::size_t{1} << t, std::size_t{1} << r);
  for (std::size_t jp = 0; jp < e.cols; ++jp) e.at((jp << k) | low, jp) = Scalar(1);

  CollapsedProblem out;
  out.new_base = Base(mul(base.m, e), r);
  for (const Signature& h : hs) out.new_right.push_back(transform_left(h, e));
  out.certificate.constants = constants;
  out.r = r;
  return out;
}

CollapsedProblem collapse_via_realizer(const Base& base,
                                       const ScalarMatrix& a,
                                       const std::vector<Signature>& fs,
                                       const std::vector<Signature>& hs) {
  if (a.cols != base.m.rows)
    throw std::invalid_argument("realizer columns must match base rows");
  if (a.rows == 0 || !std::has_single_bit(a.rows))
    throw std::invalid_argument("realizer needs a power-of-two row count");
  check_left_domains(fs, base.m.rows);
  const int arity_a = std::countr_zero(a.rows);
  const ScalarMatrix am = mul(a, base.m);
  const MatrixView view = MatrixView::from_matrix(
      am, std::vector<int>(arity_a, 2), std::vector<int>(base.t, 2));
  const CanonicalForm cf = canonicalize(view);
  if (cf.zero)
    throw std::invalid_argument("realized signature is zero");
  const std::size_t rank_am = rank(am);
  const std::size_t rank_m = rank(base.m);
  if (rank_am != rank_m || rank_am != (std::size_t{1} << cf.r))
    throw std::invalid_argument(
        "rank(A*M) = " + std::to_string(rank_am) +
        ", rank(M) = " + std::to_string(rank_m) +
        ", but the matching form needs both equal to 2^r = " +
        std::to_string(std::size_t{1} << cf.r));
  return collapse_columns(base, cf, hs);
}

CollapsedProblem collapse_via_cover(const Base& base, const MatrixView& p,
                                    const ScalarMatrix& q,
                                    const std::vector<Signature>& fs,
                                    const std::vector<Signature>& hs) {
  if (p.t() != base.t)
    throw std::invalid_argument("cover factor digits must match the base");
  const ScalarMatrix pm = p.to_matrix();
  if (q.rows != base.m.rows || q.cols != pm.rows)
    throw std::invalid_argument("cover factor dimensions do not compose");
  check_left_domains(fs, base.m.rows);
  const ScalarMatrix qp = mul(q, pm);
  for (std::size_t i = 0; i < qp.rows; ++i)
    for (std::size_t j = 0; j < qp.cols; ++j)
      if (qp.at(i, j) != base.m.at(i, j))
        throw std::invalid_argument(
            "q*p differs from the base at (" + std::to_string(i) + ", " +
            std::to_string(j) + "): " + qp.at(i, j).compact_str() + " vs " +
            base.m.at(i, j).compact_str());
  const CanonicalForm cf = canonicalize(p);
  if (cf.zero) throw std::invalid_argument("cover factor is zero");
  CollapsedProblem out = collapse_columns(base, cf, hs);
  out.certificate.row_log = cf.row_log;
  out.certificate.q = q;
  return out;
}

CollapsedProblem collapse_symmetric(const Signature& f, const Base& base,
                                    const std::vector<Signature>& hs) {
  const int s = f.arity();
  if (s < 1)
    throw std::invalid_argument("symmetric collapse needs arity >= 1");
  const std::size_t n = base.m.rows;
  for (int d : f.domains())
    if (d != static_cast<int>(n))
      throw std::invalid_argument(
          "left signature domains must match the base rows");
  std::vector<int> perm(s);
  for (int v = 0; v + 1 < s; ++v) {
    for (int i = 0; i < s; ++i) perm[i] = i;
    std::swap(perm[v], perm[v + 1]);
    if (!(f.permute(perm) == f))
      throw std::invalid_argument(
          "left signature is not symmetric: swapping variables " +
          std::to_string(v + 1) + " and " + std::to_string(v + 2) +
          " changes it");
  }

  // Contract s-1 variables of f with the base: a realizer whose rows
  // are indexed by t(s-1) digits.
  const ScalarMatrix f_mat = regroup(f, s - 1).to_matrix();
  const ScalarMatrix a = mul(transpose(kron_power(base.m, s - 1)), f_mat);
  const ScalarMatrix am = mul(a, base.m);
  const MatrixView view = MatrixView::from_matrix(
      am, std::vector<int>(base.t * (s - 1), 2), std::vector<int>(base.t, 2));
  const CanonicalForm cf = canonicalize(view);
  if (cf.zero)
    throw std::invalid_argument("contracted left signature is zero");

  const std::size_t rk = std::size_t{1} << cf.r;
  const std::vector<std::size_t> s_rows = pivot_rows(am);
  if (s_rows.size() != rk)
    throw std::invalid_argument(
        "rank(A*M) = " + std::to_string(s_rows.size()) +
        " does not match the matching form's 2^r = " + std::to_string(rk));
  ScalarMatrix sam(rk, am.cols);
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < am.cols; ++j)
      sam.at(i, j) = am.at(s_rows[i], j);

  // Complete the kept rows to a spanning set with rows of the base
  // itself, greedily in row order.
  ScalarMatrix span = sam;
  std::size_t span_rank = rank(span);
  std::vector<std::size_t> t_rows;
  for (std::size_t i = 0; i < n; ++i) {
    ScalarMatrix cand(span.rows + 1, span.cols);
    cand.data.assign(span.data.begin(), span.data.end());
    cand.data.insert(cand.data.end(), base.m.data.begin() + i * base.m.cols,
                     base.m.data.begin() + (i + 1) * base.m.cols);
    if (rank(cand) > span_rank) {
      span = std::move(cand);
      ++span_rank;
      t_rows.push_back(i);
    }
  }

  const auto coeffs = solve_left(span, base.m);
  if (!coeffs)
    throw std::logic_error("base rows escaped their own span");
  ScalarMatrix c1(n, rk);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rk; ++j) c1.at(i, j) = coeffs->at(i, j);

  // The completion rows cannot contribute: A*M lives in the span of its
  // pivot rows, and that span meets the completion span only in zero.
  if (!(mul(a, mul(c1, sam)) == am))
    throw std::logic_error("kept-row coefficients do not reproduce A*M");

  // The substitution this collapse rests on, checked exactly.
  const Signature f_small = transform_left(f, c1);
  const Signature lhs = transform_left(f_small, sam);
  const Signature rhs = transform_left(f, base.m);
  if (!(lhs == rhs)) {
    for (std::size_t x = 0; x < lhs.size(); ++x)
      if (lhs.value(x) != rhs.value(x))
        throw std::invalid_argument(
            "rewriting f over the kept rows changes f M^(x" +
            std::to_string(s) + ") at flat index " + std::to_string(x) +
            ": " + lhs.value(x).compact_str() + " vs " +
            rhs.value(x).compact_str());
  }

  CollapsedProblem out =
      collapse_via_realizer(Base(sam, base.t), mul(a, c1), {f_small}, hs);
  out.new_left = {f_small};
  out.certificate.c1 = c1;
  out.certificate.s_rows = s_rows;
  if (!t_rows.empty()) {
    ScalarMatrix tm(t_rows.size(), base.m.cols);
    for (std::size_t i = 0; i < t_rows.size(); ++i)
      for (std::size_t j = 0; j < base.m.cols; ++j)
        tm.at(i, j) = base.m.at(t_rows[i], j);
    out.certificate.t_rows = std::move(tm);
  }
  return out;
}

namespace {

struct Topology {
  std::vector<int> left_kind;   // signature index per left vertex
  std::vector<int> right_kind;  // signature index per right vertex
  std::vector<Edge> edges;
};

Instance build_instance(const Topology& topo,
                        const std::vector<Signature>& lefts,
                        const std::vector<Signature>& rights, int domain) {
  Instance inst;
  inst.domain_size = domain;
  for (std::size_t i = 0; i < lefts.size(); ++i)
    inst.signatures.emplace("L" + std::to_string(i), lefts[i]);
  for (std::size_t i = 0; i < rights.size(); ++i)
    inst.signatures.emplace("R" + std::to_string(i), rights[i]);
  for (int kind : topo.left_kind)
    inst.left.push_back("L" + std::to_string(kind));
  for (int kind : topo.right_kind)
    inst.right.push_back("R" + std::to_string(kind));
  inst.edges = topo.edges;
  inst.validate();
  return inst;
}

int bits_of(std::size_t domain) {
  int b = 0;
  while ((std::size_t{1} << b) < domain) ++b;
  return b;
}

}  // namespace

bool verify_collapse(const Base& base, const std::vector<Signature>& fs,
                     const std::vector<Signature>& hs,
                     const CollapsedProblem& collapsed, int trials,
                     std::uint64_t seed, std::ostream* log) {
  if (!collapsed.new_left.empty() && collapsed.new_left.size() != fs.size())
    throw std::invalid_argument("left signature lists differ in length");
  if (collapsed.new_right.size() != hs.size())
    throw std::invalid_argument("right signature lists differ in length");

  std::vector<Signature> orig_left = fs;
  std::vector<Signature> orig_right;
  for (const Signature& h : hs) orig_right.push_back(transform_right(base.m, h));
  std::vector<Signature> coll_left =
      collapsed.new_left.empty() ? fs : collapsed.new_left;
  std::vector<Signature> coll_right;
  for (const Signature& r : collapsed.new_right)
    coll_right.push_back(transform_right(collapsed.new_base.m, r));

  std::size_t left_slots = 0, right_slots = 0;
  for (const Signature& f : fs) left_slots += f.arity();
  for (const Signature& h : hs) right_slots += h.arity();
  if ((left_slots == 0) != (right_slots == 0))
    throw std::invalid_argument(
        "cannot balance: only one side has slots to pair");
  const std::size_t g =
      left_slots == 0 ? 1 : std::gcd(left_slots, right_slots);
  const std::size_t left_copies = right_slots / g;
  const std::size_t right_copies = left_slots / g;
  const std::size_t unit_edges = left_slots * left_copies;

  const int domain_bits =
      std::max(bits_of(base.m.rows), bits_of(collapsed.new_base.m.rows));
  std::size_t max_mult = 3;
  if (unit_edges > 0 && domain_bits > 0)
    max_mult = std::max<std::size_t>(
        1, std::min<std::size_t>(3, 20 / (unit_edges * domain_bits)));

  Rng rng(seed);
  bool all_ok = true;
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t mult = 1 + rng() % max_mult;
    Topology topo;
    std::vector<SlotRef> lslots, rslots;
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t c = 0; c < left_copies * mult; ++c) {
        const int v = static_cast<int>(topo.left_kind.size());
        topo.left_kind.push_back(static_cast<int>(i));
        for (int slot = 0; slot < fs[i].arity(); ++slot)
          lslots.push_back({v, slot});
      }
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t c = 0; c < right_copies * mult; ++c) {
        const int v = static_cast<int>(topo.right_kind.size());
        topo.right_kind.push_back(static_cast<int>(i));
        for (int slot = 0; slot < hs[i].arity(); ++slot)
          rslots.push_back({v, slot});
      }
    std::shuffle(rslots.begin(), rslots.end(), rng);
    for (std::size_t k = 0; k < lslots.size(); ++k)
      topo.edges.push_back({lslots[k], rslots[k]});

    const Scalar original =
        evaluate(build_instance(topo, orig_left, orig_right,
                                static_cast<int>(base.m.rows)));
    const Scalar reduced =
        evaluate(build_instance(topo, coll_left, coll_right,
                                static_cast<int>(collapsed.new_base.m.rows)));
    if (original == reduced) continue;
    all_ok = false;
    if (log)
      *log << "trial " << trial << ": " << topo.edges.size()
           << " edges, original value " << original.str()
           << ", collapsed value " << reduced.str() << "\n";
  }
  return all_ok;
}

namespace {

nlohmann::ordered_json matrix_json(const ScalarMatrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  std::vector<std::string> values;
  for (const Scalar& v : m.data) values.push_back(v.compact_str());
  j["values"] = values;
  return j;
}

ScalarMatrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  std::vector<Scalar> values;
  for (const auto& v : j.at("values"))
    values.push_back(Scalar::parse(v.get<std::string>()));
  return ScalarMatrix(rows, cols, std::move(values));
}

nlohmann::ordered_json signature_json(const Signature& s) {
  nlohmann::ordered_json j;
  j["domains"] = s.domains();
  std::vector<std::string> values;
  for (std::size_t i = 0; i < s.size(); ++i)
    values.push_back(s.value(i).compact_str());
  j["values"] = values;
  return j;
}

Signature signature_from_json(const nlohmann::json& j) {
  const auto domains = j.at("domains").get<std::vector<int>>();
  std::vector<Scalar> values;
  for (const auto& v : j.at("values"))
    values.push_back(Scalar::parse(v.get<std::string>()));
  return Signature(domains, std::move(values));
}

}  // namespace

std::string collapsed_problem_to_json_text(const CollapsedProblem& c) {
  nlohmann::ordered_json j;
  j["kind"] = "collapsed-problem";
  j["r"] = c.r;
  j["base"] = matrix_json(c.new_base.m);
  j["t"] = c.new_base.t;
  j["left"] = nlohmann::ordered_json::array();
  for (const Signature& f : c.new_left) j["left"].push_back(signature_json(f));
  j["right"] = nlohmann::ordered_json::array();
  for (const Signature& h : c.new_right)
    j["right"].push_back(signature_json(h));
  nlohmann::ordered_json cert;
  cert["col_log"] = log_to_text(c.certificate.col_log);
  cert["constants"] = c.certificate.constants;
  cert["row_log"] = log_to_text(c.certificate.row_log);
  cert["q"] = c.certificate.q ? matrix_json(*c.certificate.q)
                              : nlohmann::ordered_json();
  cert["c1"] = c.certificate.c1 ? matrix_json(*c.certificate.c1)
                                : nlohmann::ordered_json();
  cert["s_rows"] = c.certificate.s_rows;
  cert["t_rows"] = c.certificate.t_rows ? matrix_json(*c.certificate.t_rows)
                                        : nlohmann::ordered_json();
  j["certificate"] = cert;
  return j.dump(2) + "\n";
}

CollapsedProblem collapsed_problem_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad json: ") + e.what());
  }
  if (j.value("kind", "") != "collapsed-problem")
    throw std::invalid_argument("expected a collapsed-problem artifact");
  CollapsedProblem c;
  try {
    c.r = j.at("r").get<int>();
    c.new_base = Base(matrix_from_json(j.at("base")), j.at("t").get<int>());
    for (const auto& f : j.at("left")) c.new_left.push_back(signature_from_json(f));
    for (const auto& h : j.at("right"))
      c.new_right.push_back(signature_from_json(h));
    const auto& cert = j.at("certificate");
    c.certificate.col_log = log_from_text(cert.at("col_log").get<std::string>());
    c.certificate.constants = cert.at("constants").get<std::vector<int>>();
    c.certificate.row_log = log_from_text(cert.at("row_log").get<std::string>());
    if (!cert.at("q").is_null())
      c.certificate.q = matrix_from_json(cert.at("q"));
    if (!cert.at("c1").is_null())
      c.certificate.c1 = matrix_from_json(cert.at("c1"));
    c.certificate.s_rows = cert.at("s_rows").get<std::vector<std::size_t>>();
    if (!cert.at("t_rows").is_null())
      c.certificate.t_rows = matrix_from_json(cert.at("t_rows"));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad collapsed problem: ") +
                                e.what());
  }
  return c;
}

}  // namespace holoalg
