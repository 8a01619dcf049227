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

#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "holoalg/random.hpp"

using namespace holoalg;

namespace {

Signature sig1(std::vector<Scalar> v) {
  const int domain = static_cast<int>(v.size());
  return Signature({domain}, std::move(v));
}

Signature sig22(Scalar a, Scalar b, Scalar c, Scalar d) {
  return Signature({2, 2}, {a, b, c, d});
}

}  // namespace

TEST_CASE("evaluate sums products over edge assignments") {
  Instance inst;
  inst.domain_size = 2;
  inst.signatures.emplace("f", sig22(Scalar(1), Scalar(2), Scalar(3), Scalar(4)));
  inst.signatures.emplace("h", sig22(Scalar(5), Scalar(6), Scalar(7), Scalar(8)));
  inst.left = {"f"};
  inst.right = {"h"};

  SUBCASE("parallel edges") {
    inst.edges = {{{0, 0}, {0, 0}}, {{0, 1}, {0, 1}}};
    // sum f(x,y) h(x,y) = 1*5 + 2*6 + 3*7 + 4*8.
    CHECK(evaluate(inst) == Scalar(70));
  }
  SUBCASE("crossed edges pair slots, not variables") {
    inst.edges = {{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    // sum f(x,y) h(y,x) = 1*5 + 2*7 + 3*6 + 4*8.
    CHECK(evaluate(inst) == Scalar(69));
  }
}

TEST_CASE("evaluate over a larger domain") {
  Instance inst;
  inst.domain_size = 3;
  inst.signatures.emplace("f", sig1({Scalar(1), Scalar(2), Scalar(3)}));
  inst.signatures.emplace("h", sig1({Scalar(4), Scalar(5), Scalar(6)}));
  inst.left = {"f"};
  inst.right = {"h"};
  inst.edges = {{{0, 0}, {0, 0}}};
  CHECK(evaluate(inst) == Scalar(32));
}

TEST_CASE("gadget signature lists dangling edges in order") {
  Instance inst;
  inst.domain_size = 2;
  inst.signatures.emplace("f", sig22(Scalar(1), Scalar(2), Scalar(3), Scalar(4)));
  inst.left = {"f"};
  inst.edges = {};
  inst.dangling = {{VertexSide::Left, {0, 0}}, {VertexSide::Left, {0, 1}}};
  CHECK(gadget_signature(inst) ==
        sig22(Scalar(1), Scalar(2), Scalar(3), Scalar(4)));

  // Reversing the dangling list transposes the signature.
  inst.dangling = {{VertexSide::Left, {0, 1}}, {VertexSide::Left, {0, 0}}};
  CHECK(gadget_signature(inst) ==
        sig22(Scalar(1), Scalar(3), Scalar(2), Scalar(4)));
}

TEST_CASE("gadget signature contracts internal edges") {
  Instance inst;
  inst.domain_size = 2;
  inst.signatures.emplace("f", sig1({Scalar(2), Scalar(3)}));
  inst.signatures.emplace("h", sig22(Scalar(1), Scalar(5), Scalar(7), Scalar(11)));
  inst.left = {"f"};
  inst.right = {"h"};
  inst.edges = {{{0, 0}, {0, 0}}};
  inst.dangling = {{VertexSide::Right, {0, 1}}};
  // g(y) = 2 h(0,y) + 3 h(1,y).
  CHECK(gadget_signature(inst) == sig1({Scalar(23), Scalar(43)}));
  // Closing the remaining slot with a second copy of f contracts the
  // gadget against f: 2*23 + 3*43. A closed instance has the empty
  // signature: one value, the total.
  inst.dangling.clear();
  inst.left.push_back("f");
  inst.edges.push_back({{1, 0}, {0, 1}});
  CHECK(gadget_signature(inst).arity() == 0);
  CHECK(gadget_signature(inst).value(std::size_t{0}) == Scalar(175));
  CHECK(evaluate(inst) == Scalar(175));
}

TEST_CASE("validate catches malformed instances") {
  Instance inst;
  inst.domain_size = 2;
  inst.signatures.emplace("f", sig1({Scalar(1), Scalar(2)}));
  inst.left = {"f"};

  SUBCASE("unused slot") { CHECK_THROWS_AS(inst.validate(), std::invalid_argument); }
  SUBCASE("slot used twice") {
    inst.signatures.emplace("h", sig1({Scalar(1), Scalar(2)}));
    inst.right = {"h"};
    inst.edges = {{{0, 0}, {0, 0}}};
    inst.dangling = {{VertexSide::Left, {0, 0}}};
    CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
  }
  SUBCASE("unknown signature name") {
    inst.left = {"missing"};
    CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
  }
  SUBCASE("domain mismatch") {
    inst.signatures.emplace("g", sig1({Scalar(1), Scalar(2), Scalar(3)}));
    inst.right = {"g"};
    inst.edges = {{{0, 0}, {0, 0}}};
    CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
  }
  SUBCASE("evaluate rejects dangling edges") {
    inst.dangling = {{VertexSide::Left, {0, 0}}};
    CHECK_THROWS_AS(evaluate(inst), std::invalid_argument);
  }
}

TEST_CASE("transforms contract matrices into signatures") {
  Rng rng(41);
  const ScalarMatrix m = random_matrix(rng, 2, 2);
  Signature f(std::vector<int>{2, 2});
  for (std::size_t k = 0; k < 4; ++k) f.value(k) = random_scalar(rng);
  const ScalarMatrix fm = MatrixView(f, 1).to_matrix();

  // Contracting both variables on the left computes m^T F m.
  const Signature lf = transform_left(f, m);
  CHECK(MatrixView(lf, 1).to_matrix() == mul(mul(transpose(m), fm), m));

  // And on the right, m F m^T.
  const Signature rf = transform_right(m, f);
  CHECK(MatrixView(rf, 1).to_matrix() == mul(mul(m, fm), transpose(m)));

  // Rectangular matrices change the domain.
  const ScalarMatrix wide = random_matrix(rng, 2, 3);
  CHECK(transform_left(f, wide).domains() == std::vector<int>{3, 3});
  CHECK(transform_right(transpose(wide), f).domains() == std::vector<int>{3, 3});
}

TEST_CASE("both side rewrites agree on closed instances") {
  std::ostringstream log;
  CHECK(verify_holant(2026, 25, &log));
  CHECK(log.str().empty());
}

TEST_CASE("instance json round trip") {
  Instance inst;
  inst.domain_size = 2;
  inst.signatures.emplace("f", sig22(Scalar(1), Scalar(Rational(1, 2)),
                                     Scalar(0), Scalar(Rational(0), Rational(2))));
  inst.signatures.emplace("u", sig1({Scalar(3), Scalar(-1)}));
  inst.left = {"f"};
  inst.right = {"u", "u"};
  inst.edges = {{{0, 0}, {0, 0}}, {{0, 1}, {1, 0}}};
  const std::string text = instance_to_json_text(inst);
  const Instance back = instance_from_json_text(text);
  CHECK(back.domain_size == inst.domain_size);
  CHECK(back.signatures == inst.signatures);
  CHECK(back.left == inst.left);
  CHECK(back.right == inst.right);
  CHECK(back.edges == inst.edges);
  CHECK(back.dangling == inst.dangling);
  CHECK_THROWS_AS(instance_from_json_text("{"), std::invalid_argument);
  CHECK_THROWS_AS(instance_from_json_text("[]"), std::invalid_argument);
}
