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
#include <map>
#include <string>
#include <vector>

#include "holoalg/signature.hpp"

namespace holoalg {

enum class VertexSide { Left, Right };

/// A slot is one variable position of one vertex. Both indices 0-based.
struct SlotRef {
  int vertex = 0;
  int slot = 0;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

/// Internal edges always join a left slot to a right slot.
struct Edge {
  SlotRef left;
  SlotRef right;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct DanglingRef {
  VertexSide side = VertexSide::Left;
  SlotRef at;
  friend bool operator==(const DanglingRef&, const DanglingRef&) = default;
};

/// A bipartite constraint network. Every edge carries one variable over
/// [0, domain_size); the value of the network is the sum over all edge
/// assignments of the product of the vertex function values. Dangling
/// edges are held fixed and become the variables of the induced
/// signature, in list order.
struct Instance {
  int domain_size = 2;
  std::map<std::string, Signature> signatures;
  std::vector<std::string> left;   // signature name per left vertex
  std::vector<std::string> right;  // signature name per right vertex
  std::vector<Edge> edges;
  std::vector<DanglingRef> dangling;

  const Signature& left_signature(int vertex) const;
  const Signature& right_signature(int vertex) const;

  /// Checks naming, domain sizes, and that every slot of every vertex
  /// is used by exactly one edge or dangling edge. Throws
  /// std::invalid_argument with a description of the first violation.
  void validate() const;
};

/// Sum over all edge assignments; requires a closed instance (no
/// dangling edges). Enumeration is capped at 2^24 assignments.
Scalar evaluate(const Instance& inst);

/// The signature induced on the dangling edges, in list order.
Signature gadget_signature(const Instance& inst);

/// Contracts every variable of sig with m on the left of m:
/// new(..,y,..) = sum_x old(..,x,..) * m(x,y). Requires m.rows equal to
/// every variable's domain; the new domains are all m.cols.
Signature transform_left(const Signature& sig, const ScalarMatrix& m);

/// new(..,x,..) = sum_y m(x,y) * old(..,y,..).
Signature transform_right(const ScalarMatrix& m, const Signature& sig);

/// Replaces every left vertex function f by f m (per variable), resp.
/// every right vertex function h by m h. Because each edge pairs one
/// left slot with one right slot, the two rewrites of a closed instance
/// have the same value for any square m:
///   evaluate(transform_right_side(inst, m)) ==
///   evaluate(transform_left_side(inst, m))
Instance transform_left_side(const Instance& inst, const ScalarMatrix& m);
Instance transform_right_side(const Instance& inst, const ScalarMatrix& m);

/// Both rewrites of a closed instance under one basis, as
/// (right-side-transformed value, left-side-transformed value).
std::pair<Scalar, Scalar> holant_pair(const Instance& inst,
                                      const ScalarMatrix& basis);

/// Draws `trials` random closed bipartite instances together with a
/// random invertible basis and checks the value identity above exactly.
/// Failures are described on `log` when given. Deterministic in `seed`.
bool verify_holant(std::uint64_t seed, int trials, std::ostream* log = nullptr);

/// JSON round-trip. Values are scalar strings like "1/2+-3/4 i";
/// signatures are nested arrays with variable 1 outermost; edges are
/// [[left_vertex, slot], [right_vertex, slot]] pairs and dangling
/// entries are ["left"|"right", vertex, slot].
std::string instance_to_json_text(const Instance& inst);
Instance instance_from_json_text(const std::string& text);

}  // namespace holoalg
