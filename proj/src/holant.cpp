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

#include "holoalg/holant.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "holoalg/random.hpp"
#include "json.hpp"

namespace holoalg {

namespace {

constexpr std::size_t kMaxAssignments = std::size_t{1} << 24;

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

std::string slot_name(VertexSide side, const SlotRef& at) {
  std::ostringstream os;
  os << (side == VertexSide::Left ? "left" : "right") << " vertex "
     << at.vertex << " slot " << at.slot;
  return os.str();
}

// Per-vertex recipe: flat index = sum of assignment[var] * stride.
struct VertexEval {
  const Signature* sig = nullptr;
  std::vector<std::pair<int, std::size_t>> terms;  // (variable id, stride)
};

}  // namespace

const Signature& Instance::left_signature(int vertex) const {
  return signatures.at(left.at(static_cast<std::size_t>(vertex)));
}

const Signature& Instance::right_signature(int vertex) const {
  return signatures.at(right.at(static_cast<std::size_t>(vertex)));
}

void Instance::validate() const {
  if (domain_size < 2) fail("domain_size must be at least 2");
  for (const auto& [name, sig] : signatures) {
    for (int d : sig.domains())
      if (d != domain_size)
        fail("signature " + name + " has a variable outside the edge domain");
  }
  auto check_names = [&](const std::vector<std::string>& side,
                         const char* which) {
    for (const auto& name : side)
      if (!signatures.count(name))
        fail(std::string("unknown signature on the ") + which + ": " + name);
  };
  check_names(left, "left");
  check_names(right, "right");

  // Slot occupancy: exactly one edge end or dangling edge per slot.
  auto side_slots = [&](const std::vector<std::string>& side) {
    std::vector<std::vector<int>> uses(side.size());
    for (std::size_t v = 0; v < side.size(); ++v)
      uses[v].assign(
          static_cast<std::size_t>(signatures.at(side[v]).arity()), 0);
    return uses;
  };
  auto uses_left = side_slots(left);
  auto uses_right = side_slots(right);
  auto touch = [&](VertexSide side, const SlotRef& at) {
    auto& uses = side == VertexSide::Left ? uses_left : uses_right;
    if (at.vertex < 0 || static_cast<std::size_t>(at.vertex) >= uses.size())
      fail("no such vertex: " + slot_name(side, at));
    auto& slots = uses[static_cast<std::size_t>(at.vertex)];
    if (at.slot < 0 || static_cast<std::size_t>(at.slot) >= slots.size())
      fail("no such slot: " + slot_name(side, at));
    ++slots[static_cast<std::size_t>(at.slot)];
  };
  for (const auto& e : edges) {
    touch(VertexSide::Left, e.left);
    touch(VertexSide::Right, e.right);
  }
  for (const auto& d : dangling) touch(d.side, d.at);
  auto check_full = [&](const std::vector<std::vector<int>>& uses,
                        VertexSide side) {
    for (std::size_t v = 0; v < uses.size(); ++v)
      for (std::size_t s = 0; s < uses[v].size(); ++s)
        if (uses[v][s] != 1)
          fail((uses[v][s] ? "reused " : "unused ") +
               slot_name(side, {static_cast<int>(v), static_cast<int>(s)}));
  };
  check_full(uses_left, VertexSide::Left);
  check_full(uses_right, VertexSide::Right);
}

Signature gadget_signature(const Instance& inst) {
  inst.validate();
  const std::size_t n = static_cast<std::size_t>(inst.domain_size);
  const std::size_t n_dang = inst.dangling.size();
  const std::size_t n_int = inst.edges.size();

  std::size_t total = 1;
  for (std::size_t k = 0; k < n_dang + n_int; ++k) {
    if (total > kMaxAssignments / n)
      throw std::length_error("too many edge assignments to enumerate");
    total *= n;
  }

  // Variable ids: dangling edges first (in order), then internal edges.
  std::vector<VertexEval> evals;
  evals.reserve(inst.left.size() + inst.right.size());
  for (std::size_t v = 0; v < inst.left.size(); ++v)
    evals.push_back({&inst.left_signature(static_cast<int>(v)), {}});
  for (std::size_t v = 0; v < inst.right.size(); ++v)
    evals.push_back({&inst.right_signature(static_cast<int>(v)), {}});
  auto eval_of = [&](VertexSide side, int vertex) -> VertexEval& {
    std::size_t base = side == VertexSide::Left ? 0 : inst.left.size();
    return evals[base + static_cast<std::size_t>(vertex)];
  };
  auto wire = [&](VertexSide side, const SlotRef& at, int var) {
    VertexEval& ev = eval_of(side, at.vertex);
    ev.terms.emplace_back(var, ev.sig->stride(at.slot + 1));
  };
  for (std::size_t k = 0; k < n_dang; ++k)
    wire(inst.dangling[k].side, inst.dangling[k].at, static_cast<int>(k));
  for (std::size_t k = 0; k < n_int; ++k) {
    wire(VertexSide::Left, inst.edges[k].left, static_cast<int>(n_dang + k));
    wire(VertexSide::Right, inst.edges[k].right, static_cast<int>(n_dang + k));
  }

  std::vector<int> assign(n_dang + n_int, 0);
  auto advance = [&](std::size_t lo, std::size_t hi) {
    // Increments assign[lo, hi) as a counter, last digit fastest.
    for (std::size_t k = hi; k-- > lo;) {
      if (++assign[k] < inst.domain_size) return true;
      assign[k] = 0;
    }
    return false;
  };

  std::vector<int> result_domains(n_dang, inst.domain_size);
  Signature result(std::move(result_domains));
  std::size_t bucket = 0;
  do {
    Scalar sum;
    do {
      Scalar prod(1);
      for (const auto& ev : evals) {
        std::size_t flat = 0;
        for (const auto& [var, stride] : ev.terms)
          flat += static_cast<std::size_t>(assign[var]) * stride;
        const Scalar& value = ev.sig->value(flat);
        if (value.is_zero()) {
          prod = Scalar();
          break;
        }
        prod *= value;
      }
      sum += prod;
    } while (n_int > 0 && advance(n_dang, n_dang + n_int));
    result.value(bucket++) = std::move(sum);
  } while (n_dang > 0 && advance(0, n_dang));
  return result;
}

Scalar evaluate(const Instance& inst) {
  if (!inst.dangling.empty())
    fail("evaluate needs a closed instance; use gadget_signature");
  return gadget_signature(inst).value(0);
}

namespace {

// new(..,y,..) = sum_x old(..,x,..) * m(x,y) at one variable.
Signature contract_var(const Signature& sig, int var, const ScalarMatrix& m) {
  const std::size_t d_old = static_cast<std::size_t>(sig.domains()[var - 1]);
  if (m.rows != d_old)
    fail("matrix rows do not match the variable domain");
  const std::size_t d_new = m.cols;
  const std::size_t inner = sig.stride(var);
  const std::size_t block_old = d_old * inner;
  const std::size_t block_new = d_new * inner;
  const std::size_t prefix = sig.size() / block_old;

  std::vector<int> domains = sig.domains();
  domains[var - 1] = static_cast<int>(d_new);
  std::vector<Scalar> out(prefix * block_new);
  for (std::size_t p = 0; p < prefix; ++p)
    for (std::size_t y = 0; y < d_new; ++y)
      for (std::size_t i = 0; i < inner; ++i) {
        Scalar acc;
        for (std::size_t x = 0; x < d_old; ++x) {
          const Scalar& c = m.at(x, y);
          if (c.is_zero()) continue;
          acc += c * sig.value(p * block_old + x * inner + i);
        }
        out[p * block_new + y * inner + i] = std::move(acc);
      }
  return Signature(std::move(domains), std::move(out));
}

}  // namespace

Signature transform_left(const Signature& sig, const ScalarMatrix& m) {
  Signature cur = sig;
  for (int var = 1; var <= sig.arity(); ++var) cur = contract_var(cur, var, m);
  return cur;
}

Signature transform_right(const ScalarMatrix& m, const Signature& sig) {
  return transform_left(sig, transpose(m));
}

Instance transform_left_side(const Instance& inst, const ScalarMatrix& m) {
  Instance out = inst;
  for (const auto& name : inst.left)
    out.signatures[name] = transform_left(inst.signatures.at(name), m);
  return out;
}

Instance transform_right_side(const Instance& inst, const ScalarMatrix& m) {
  Instance out = inst;
  for (const auto& name : inst.right)
    out.signatures[name] = transform_right(m, inst.signatures.at(name));
  return out;
}

namespace {

// Closed bipartite instance with at most `max_edges` edges, left arities
// at most 3 and right arities at most 2.
Instance random_instance(Rng& rng, int domain_size, int max_edges) {
  std::uniform_int_distribution<int> edge_count(1, max_edges);
  const int n_edges = edge_count(rng);

  Instance inst;
  inst.domain_size = domain_size;
  auto grow_side = [&](std::vector<std::string>& side, int max_arity,
                       const char* prefix) {
    std::vector<SlotRef> slots;
    int remaining = n_edges;
    while (remaining > 0) {
      std::uniform_int_distribution<int> pick(1, std::min(max_arity,
                                                          remaining));
      const int arity = pick(rng);
      const int vertex = static_cast<int>(side.size());
      std::string name = prefix + std::to_string(vertex);
      std::vector<int> domains(static_cast<std::size_t>(arity), domain_size);
      Signature sig(std::move(domains));
      for (std::size_t i = 0; i < sig.size(); ++i)
        sig.value(i) = random_scalar(rng);
      inst.signatures.emplace(name, std::move(sig));
      side.push_back(std::move(name));
      for (int s = 0; s < arity; ++s) slots.push_back({vertex, s});
      remaining -= arity;
    }
    return slots;
  };
  std::vector<SlotRef> lslots = grow_side(inst.left, 3, "f");
  std::vector<SlotRef> rslots = grow_side(inst.right, 2, "h");
  std::shuffle(rslots.begin(), rslots.end(), rng);
  for (int k = 0; k < n_edges; ++k)
    inst.edges.push_back({lslots[static_cast<std::size_t>(k)],
                          rslots[static_cast<std::size_t>(k)]});
  return inst;
}

}  // namespace

std::pair<Scalar, Scalar> holant_pair(const Instance& inst,
                                      const ScalarMatrix& basis) {
  return {evaluate(transform_right_side(inst, basis)),
          evaluate(transform_left_side(inst, basis))};
}

bool verify_holant(std::uint64_t seed, int trials, std::ostream* log) {
  Rng rng(seed);
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> domain(2, 4);
    const int n = domain(rng);
    Instance inst = random_instance(rng, n, 6);
    ScalarMatrix basis = random_invertible(rng, static_cast<std::size_t>(n));
    auto [lhs, rhs] = holant_pair(inst, basis);
    if (lhs != rhs) {
      ok = false;
      if (log)
        *log << "trial " << t << ": transformed values differ, " << lhs.str()
             << " vs " << rhs.str() << "\n";
    }
  }
  return ok;
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json signature_to_json(const Signature& sig) {
  // Nested arrays, variable 1 outermost; an arity-0 signature is a
  // bare scalar string.
  struct Rec {
    const Signature& sig;
    ordered_json operator()(int var, std::size_t offset) const {
      if (var > sig.arity()) return sig.value(offset).str();
      ordered_json arr = ordered_json::array();
      const std::size_t stride = sig.stride(var);
      for (int x = 0; x < sig.domains()[var - 1]; ++x)
        arr.push_back((*this)(var + 1,
                              offset + static_cast<std::size_t>(x) * stride));
      return arr;
    }
  };
  return Rec{sig}(1, 0);
}

void scan_signature(const json& node, int depth, std::vector<int>& domains,
                    std::vector<Scalar>& values) {
  if (node.is_string()) {
    if (depth != static_cast<int>(domains.size()))
      fail("ragged signature array");
    values.push_back(Scalar::parse(node.get<std::string>()));
    return;
  }
  if (!node.is_array() || node.empty()) fail("bad signature value");
  if (depth == static_cast<int>(domains.size()))
    domains.push_back(static_cast<int>(node.size()));
  else if (domains[static_cast<std::size_t>(depth)] !=
           static_cast<int>(node.size()))
    fail("ragged signature array");
  for (const auto& child : node)
    scan_signature(child, depth + 1, domains, values);
}

Signature signature_from_json(const json& node) {
  std::vector<int> domains;
  std::vector<Scalar> values;
  scan_signature(node, 0, domains, values);
  return Signature(std::move(domains), std::move(values));
}

SlotRef slotref_from_json(const json& node) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number_integer() ||
      !node[1].is_number_integer())
    fail("a slot reference is a [vertex, slot] pair");
  return {node[0].get<int>(), node[1].get<int>()};
}

}  // namespace

std::string instance_to_json_text(const Instance& inst) {
  ordered_json j;
  j["domain_size"] = inst.domain_size;
  ordered_json sigs = ordered_json::object();
  for (const auto& [name, sig] : inst.signatures)
    sigs[name] = signature_to_json(sig);
  j["signatures"] = std::move(sigs);
  j["left"] = inst.left;
  j["right"] = inst.right;
  ordered_json edges = ordered_json::array();
  for (const auto& e : inst.edges)
    edges.push_back({{e.left.vertex, e.left.slot},
                     {e.right.vertex, e.right.slot}});
  j["edges"] = std::move(edges);
  ordered_json dang = ordered_json::array();
  for (const auto& d : inst.dangling)
    dang.push_back({d.side == VertexSide::Left ? "left" : "right",
                    d.at.vertex, d.at.slot});
  j["dangling"] = std::move(dang);
  return j.dump(2) + "\n";
}

Instance instance_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("bad instance JSON: ") + e.what());
  }
  if (!j.is_object()) fail("instance JSON must be an object");
  Instance inst;
  inst.domain_size = j.at("domain_size").get<int>();
  for (const auto& [name, node] : j.at("signatures").items())
    inst.signatures.emplace(name, signature_from_json(node));
  inst.left = j.at("left").get<std::vector<std::string>>();
  inst.right = j.at("right").get<std::vector<std::string>>();
  for (const auto& node : j.at("edges")) {
    if (!node.is_array() || node.size() != 2) fail("bad edge entry");
    inst.edges.push_back(
        {slotref_from_json(node[0]), slotref_from_json(node[1])});
  }
  if (j.count("dangling")) {
    for (const auto& node : j.at("dangling")) {
      if (!node.is_array() || node.size() != 3 || !node[0].is_string())
        fail("a dangling entry is [side, vertex, slot]");
      const std::string side = node[0].get<std::string>();
      if (side != "left" && side != "right")
        fail("dangling side must be left or right");
      DanglingRef d;
      d.side = side == "left" ? VertexSide::Left : VertexSide::Right;
      d.at = {node[1].get<int>(), node[2].get<int>()};
      inst.dangling.push_back(d);
    }
  }
  inst.validate();
  return inst;
}

}  // namespace holoalg
