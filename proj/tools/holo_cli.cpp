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

// Command-line front end. Exit codes: 0 on success, 1 when a check or
// verification produces a counterexample, 2 on input errors. Every
// referenced file is parsed before any computation starts, and all
// output is deterministic for a fixed seed.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "holoalg/canonical.hpp"
#include "holoalg/collapse.hpp"
#include "holoalg/holant.hpp"
#include "holoalg/matchgate.hpp"
#include "holoalg/signature.hpp"
#include "holoalg/transforms.hpp"

namespace {

using namespace holoalg;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' || c == '[';
  }
  return false;
}

// Signature files: {"split": s?, "values": nested arrays}. The nesting
// depth is the arity; leaves are compact scalars (strings) or integers.
void nested_shape(const nlohmann::json& node, std::vector<int>& dims) {
  if (!node.is_array()) return;
  if (node.empty()) throw std::invalid_argument("empty dimension in values");
  dims.push_back(static_cast<int>(node.size()));
  nested_shape(node[0], dims);
}

Scalar leaf_scalar(const nlohmann::json& node) {
  if (node.is_string()) return Scalar::parse(node.get<std::string>());
  if (node.is_number_integer())
    return Scalar::parse(std::to_string(node.get<long long>()));
  throw std::invalid_argument("signature values must be strings or integers");
}

void nested_fill(const nlohmann::json& node, std::size_t level,
                 const std::vector<int>& dims, std::vector<Scalar>& out) {
  if (level == dims.size()) {
    out.push_back(leaf_scalar(node));
    return;
  }
  if (!node.is_array() ||
      static_cast<int>(node.size()) != dims[level])
    throw std::invalid_argument("ragged values array");
  for (const auto& child : node) nested_fill(child, level + 1, dims, out);
}

Signature parse_signature_json(const nlohmann::json& j,
                               std::optional<int>* split) {
  if (!j.contains("values"))
    throw std::invalid_argument("signature file needs a values field");
  std::vector<int> dims;
  nested_shape(j.at("values"), dims);
  std::vector<Scalar> values;
  nested_fill(j.at("values"), 0, dims, values);
  if (split) {
    *split = std::nullopt;
    if (j.contains("split")) *split = j.at("split").get<int>();
  }
  return Signature(dims, std::move(values));
}

Signature parse_signature_text(const std::string& text,
                               std::optional<int>* split) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad json: ") + e.what());
  }
  return parse_signature_json(j, split);
}

nlohmann::ordered_json nested_values(const Signature& sig, std::size_t level,
                                     std::size_t offset,
                                     const std::vector<std::size_t>& strides) {
  if (level == strides.size())
    return sig.value(offset).compact_str();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int i = 0; i < sig.domains()[level]; ++i)
    arr.push_back(
        nested_values(sig, level + 1, offset + i * strides[level], strides));
  return arr;
}

std::string signature_file_text(const Signature& sig,
                                std::optional<int> split) {
  std::vector<std::size_t> strides(sig.arity());
  std::size_t acc = 1;
  for (int v = sig.arity(); v >= 1; --v) {
    strides[v - 1] = acc;
    acc *= sig.domains()[v - 1];
  }
  nlohmann::ordered_json j;
  if (split) j["split"] = *split;
  j["values"] = nested_values(sig, 0, 0, strides);
  return j.dump(2) + "\n";
}

// Matrix files: "rows cols" then rows lines of cols (re, im) rational
// pairs.
ScalarMatrix parse_matrix_text(const std::string& text) {
  std::istringstream is(text);
  std::size_t rows = 0, cols = 0;
  if (!(is >> rows >> cols))
    throw std::invalid_argument("matrix file needs a rows/cols header");
  ScalarMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::string re, im;
      if (!(is >> re >> im))
        throw std::invalid_argument("matrix entry (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ") is missing");
      try {
        m.at(i, j) = Scalar(parse_rational(re), parse_rational(im));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("matrix entry (" + std::to_string(i) +
                                    ", " + std::to_string(j) +
                                    "): " + e.what());
      }
    }
  std::string extra;
  if (is >> extra)
    throw std::invalid_argument("trailing text in matrix file: " + extra);
  return m;
}

int infer_digits(const ScalarMatrix& m) {
  int t = 0;
  while ((std::size_t{1} << t) < m.cols) ++t;
  if ((std::size_t{1} << t) != m.cols)
    throw std::invalid_argument("base matrix needs a power-of-two width");
  return t;
}

// A signature with a split, from either a signature json file or a
// graph text file (whose introduced signature is taken).
std::pair<Signature, int> load_split_signature(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_json(text)) {
    std::optional<int> split;
    Signature sig = parse_signature_text(text, &split);
    if (!split)
      throw std::invalid_argument(path + ": needs a split field");
    if (*split < 0 || *split > sig.arity())
      throw std::invalid_argument(path + ": split out of range");
    return {std::move(sig), *split};
  }
  UnderlyingGraph g = graph_from_text(text);
  if (g.split() < 0)
    throw std::invalid_argument(path + ": graph needs a split line");
  return {signature_from_graph(g), g.split()};
}

Signature load_any_signature(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_json(text)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("bad json: ") + e.what());
    }
    if (j.contains("values")) return parse_signature_json(j, nullptr);
    return gadget_signature(instance_from_json_text(text));
  }
  return signature_from_graph(graph_from_text(text));
}

int run_eval(const std::string& path) {
  const Instance inst = instance_from_json_text(read_file(path));
  std::cout << evaluate(inst).str() << "\n";
  return 0;
}

int run_signature(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_json(text)) {
    const Instance inst = instance_from_json_text(text);
    std::cout << signature_file_text(gadget_signature(inst), std::nullopt);
    return 0;
  }
  const UnderlyingGraph g = graph_from_text(text);
  std::optional<int> split;
  if (g.split() >= 0) split = g.split();
  std::cout << signature_file_text(signature_from_graph(g), split);
  return 0;
}

int run_pfaffian(const std::string& path) {
  const UnderlyingGraph g = graph_from_text(read_file(path));
  std::cout << pfaffian(g).compact_str() << "\n";
  return 0;
}

int run_check_matchgate(const std::string& path) {
  const Signature sig = load_any_signature(path);
  const MatchgateCheck mc = is_matchgate(sig);
  if (!mc.ok) {
    std::cout << "not a matchgate: value at input " << mc.mismatch << " is "
              << mc.actual.compact_str() << ", the matchgate extension of its core gives "
              << mc.expected.compact_str() << "\n";
    return 1;
  }
  if (mc.zero) {
    std::cout << "matchgate (zero signature)\n";
    return 0;
  }
  std::cout << "matchgate\n" << graph_to_text(mc.graph);
  return 0;
}

int run_canonicalize(const std::string& path, const std::string& out_path) {
  auto [sig, split] = load_split_signature(path);
  const CanonicalForm cf = canonicalize(MatrixView(std::move(sig), split));
  const std::string text = canonical_form_to_json_text(cf);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
  }
  return 0;
}

struct CollapseArgs {
  std::string mode;
  std::string base_path;
  std::vector<std::string> left_paths;
  std::vector<std::string> right_paths;
  std::string realizer_path;
  std::string cover_p_path;
  std::string cover_q_path;
  std::vector<int> constants;
  std::string out_path;
};

int run_collapse(const CollapseArgs& args) {
  const ScalarMatrix m = parse_matrix_text(read_file(args.base_path));
  const Base base(m, infer_digits(m));
  std::vector<Signature> lefts, rights;
  for (const std::string& p : args.left_paths)
    lefts.push_back(load_any_signature(p));
  for (const std::string& p : args.right_paths)
    rights.push_back(load_any_signature(p));

  CollapsedProblem cp;
  if (args.mode == "strip") {
    cp = strip_columns(base, rights, args.constants);
    cp.new_left = lefts;
  } else if (args.mode == "realizer") {
    if (args.realizer_path.empty())
      throw std::invalid_argument("realizer mode needs --realizer");
    cp = collapse_via_realizer(
        base, parse_matrix_text(read_file(args.realizer_path)), lefts, rights);
  } else if (args.mode == "cover") {
    if (args.cover_p_path.empty() || args.cover_q_path.empty())
      throw std::invalid_argument("cover mode needs --cover-p and --cover-q");
    auto [psig, psplit] = load_split_signature(args.cover_p_path);
    cp = collapse_via_cover(
        base, MatrixView(std::move(psig), psplit),
        parse_matrix_text(read_file(args.cover_q_path)), lefts, rights);
  } else if (args.mode == "symmetric") {
    if (lefts.size() != 1)
      throw std::invalid_argument("symmetric mode needs exactly one --left");
    cp = collapse_symmetric(lefts[0], base, rights);
  } else {
    throw std::invalid_argument("unknown mode " + args.mode);
  }

  const std::string text = collapsed_problem_to_json_text(cp);
  if (args.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + args.out_path);
    out << text;
  }
  return 0;
}

struct VerifyArgs {
  std::string artifact_path;
  std::string original_path;
  std::string base_path;
  std::vector<std::string> left_paths;
  std::vector<std::string> right_paths;
  int trials = 20;
  std::uint64_t seed = 1;
};

int run_verify(const VerifyArgs& args) {
  const std::string text = read_file(args.artifact_path);
  nlohmann::json probe;
  try {
    probe = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad artifact json: ") + e.what());
  }
  const std::string kind = probe.value("kind", "");

  if (kind == "canonical-form") {
    if (args.original_path.empty())
      throw std::invalid_argument(
          "verifying a canonical form needs --original");
    const CanonicalForm cf = canonical_form_from_json_text(text);
    auto [sig, split] = load_split_signature(args.original_path);
    if (split != cf.s || sig.arity() != cf.s + cf.t) {
      std::cout << "shape mismatch: artifact is " << cf.s << "+" << cf.t
                << ", original is " << split << "+" << (sig.arity() - split)
                << "\n";
      return 1;
    }
    const Signature rebuilt = reconstruct(cf);
    if (rebuilt == sig) {
      std::cout << "canonical form reconstructs the original exactly (r = "
                << cf.r << ")\n";
      return 0;
    }
    for (std::size_t x = 0; x < sig.size(); ++x)
      if (!(rebuilt.value(x) == sig.value(x))) {
        std::cout << "reconstruction differs at flat index " << x << ": "
                  << rebuilt.value(x).compact_str() << " vs "
                  << sig.value(x).compact_str() << "\n";
        break;
      }
    return 1;
  }

  if (kind == "collapsed-problem") {
    if (args.base_path.empty())
      throw std::invalid_argument(
          "verifying a collapsed problem needs --base (and --left/--right)");
    const CollapsedProblem cp = collapsed_problem_from_json_text(text);
    const ScalarMatrix m = parse_matrix_text(read_file(args.base_path));
    const Base base(m, infer_digits(m));
    std::vector<Signature> lefts, rights;
    for (const std::string& p : args.left_paths)
      lefts.push_back(load_any_signature(p));
    for (const std::string& p : args.right_paths)
      rights.push_back(load_any_signature(p));
    const bool ok = verify_collapse(base, lefts, rights, cp, args.trials,
                                    args.seed, &std::cout);
    if (ok) {
      std::cout << "verified " << args.trials
                << " random instances: values match exactly\n";
      return 0;
    }
    std::cout << "counterexample found\n";
    return 1;
  }

  throw std::invalid_argument("artifact kind '" + kind +
                              "' is not verifiable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact holant and matchgate toolkit"};
  app.require_subcommand(1);

  std::string eval_path;
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate a closed instance exactly");
  eval_cmd->add_option("instance", eval_path, "instance json file")
      ->required();

  std::string signature_path;
  auto* signature_cmd = app.add_subcommand(
      "signature",
      "signature of an instance's dangling edges or of a graph");
  signature_cmd->add_option("file", signature_path, "instance json or graph text")
      ->required();

  std::string pfaffian_path;
  auto* pfaffian_cmd =
      app.add_subcommand("pfaffian", "pfaffian of a weighted graph");
  pfaffian_cmd->add_option("graph", pfaffian_path, "graph text file")
      ->required();

  std::string check_path;
  auto* check_cmd = app.add_subcommand(
      "check-matchgate", "decide whether a signature is a matchgate");
  check_cmd->add_option("file", check_path, "signature json, instance json or graph text")
      ->required();

  std::string canon_path, canon_out;
  auto* canon_cmd = app.add_subcommand(
      "canonicalize", "matching form of a matchgate view with logged steps");
  canon_cmd->add_option("file", canon_path, "signature json with split, or graph text with split")
      ->required();
  canon_cmd->add_option("-o,--out", canon_out, "write the artifact here");

  CollapseArgs collapse_args;
  auto* collapse_cmd =
      app.add_subcommand("collapse", "collapse a base to width 2^r");
  collapse_cmd
      ->add_option("-m,--mode", collapse_args.mode,
                   "strip | realizer | cover | symmetric")
      ->required();
  collapse_cmd->add_option("--base", collapse_args.base_path, "base matrix file")
      ->required();
  collapse_cmd->add_option("--left", collapse_args.left_paths,
                           "left signature files");
  collapse_cmd->add_option("--right", collapse_args.right_paths,
                           "right signature files");
  collapse_cmd->add_option("--realizer", collapse_args.realizer_path,
                           "realizer matrix file");
  collapse_cmd->add_option("--cover-p", collapse_args.cover_p_path,
                           "cover factor as a signature with split");
  collapse_cmd->add_option("--cover-q", collapse_args.cover_q_path,
                           "cover factor matrix file");
  collapse_cmd
      ->add_option("--constants", collapse_args.constants,
                   "digit values to pin (strip mode)")
      ->delimiter(',');
  collapse_cmd->add_option("-o,--out", collapse_args.out_path,
                           "write the artifact here");

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "replay an artifact against its original");
  verify_cmd
      ->add_option("artifact", verify_args.artifact_path,
                   "artifact json file, or - for stdin")
      ->required();
  verify_cmd->add_option("--original", verify_args.original_path,
                         "original signature or graph (canonical forms)");
  verify_cmd->add_option("--base", verify_args.base_path,
                         "original base matrix (collapsed problems)");
  verify_cmd->add_option("--left", verify_args.left_paths,
                         "original left signatures");
  verify_cmd->add_option("--right", verify_args.right_paths,
                         "original right signatures");
  verify_cmd->add_option("--trials", verify_args.trials, "random instances");
  verify_cmd->add_option("--seed", verify_args.seed, "random seed");

  int rc = 0;
  eval_cmd->callback([&] { rc = run_eval(eval_path); });
  signature_cmd->callback([&] { rc = run_signature(signature_path); });
  pfaffian_cmd->callback([&] { rc = run_pfaffian(pfaffian_path); });
  check_cmd->callback([&] { rc = run_check_matchgate(check_path); });
  canon_cmd->callback([&] { rc = run_canonicalize(canon_path, canon_out); });
  collapse_cmd->callback([&] { rc = run_collapse(collapse_args); });
  verify_cmd->callback([&] { rc = run_verify(verify_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
