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

#include <sstream>
#include <string>

#include "doctest.h"
#include "holoalg/canonical.hpp"
#include "holoalg/collapse.hpp"
#include "holoalg/holant.hpp"
#include "holoalg/matchgate.hpp"
#include "holoalg/random.hpp"
#include "holoalg/transforms.hpp"

using namespace holoalg;

TEST_CASE("log text format is stable") {
  const TransformLog log{
      TransformStep::flip(StepSide::Input, 1),
      TransformStep::global_factor(Scalar(Rational(1, 2))),
      TransformStep::exchange(StepSide::Output, 2),
      TransformStep::bar(StepSide::Input, 1, Scalar(Rational(-2), Rational(1, 3))),
      TransformStep::slash(StepSide::Output, 3, Scalar(Rational(0), Rational(1))),
  };
  const std::string expected =
      "FLIP in 1\n"
      "GF 1/2 0\n"
      "EXCH out 2\n"
      "BAR in 1 -2 1/3\n"
      "SLASH out 3 0 1\n";
  CHECK(log_to_text(log) == expected);
  CHECK(log_from_text(expected) == log);
}

TEST_CASE("graph text format is stable") {
  UnderlyingGraph g(4, 2);
  g.set_weight(1, 3, Scalar(Rational(3, 2)));
  g.set_weight(2, 4, Scalar(Rational(0), Rational(-1)));
  const std::string expected =
      "n 4\n"
      "split 2 2\n"
      "1 3 3/2 0\n"
      "2 4 0 -1\n";
  CHECK(graph_to_text(g) == expected);
  CHECK(graph_from_text(expected) == g);
}

TEST_CASE("artifact json carries a kind discriminator") {
  CanonicalForm c;
  c.s = 1;
  c.t = 1;
  c.r = 1;
  c.weights = {Scalar(2)};
  const std::string canon = canonical_form_to_json_text(c);
  CHECK(canon.find("\"kind\": \"canonical-form\"") != std::string::npos);

  CollapsedProblem p;
  p.new_base = Base(ScalarMatrix::identity(2), 1);
  p.r = 1;
  const std::string coll = collapsed_problem_to_json_text(p);
  CHECK(coll.find("\"kind\": \"collapsed-problem\"") != std::string::npos);

  // Kinds are not interchangeable.
  CHECK_THROWS_AS(canonical_form_from_json_text(coll), std::invalid_argument);
  CHECK_THROWS_AS(collapsed_problem_from_json_text(canon),
                  std::invalid_argument);
}

TEST_CASE("instances with constant signatures round trip") {
  Instance inst;
  inst.domain_size = 2;
  inst.signatures.emplace("k", Signature::constant(Scalar(Rational(7, 3))));
  inst.signatures.emplace("u", Signature({2}, {Scalar(1), Scalar(2)}));
  inst.left = {"k", "u"};
  inst.right = {"u"};
  inst.edges = {{{1, 0}, {0, 0}}};
  const Instance back = instance_from_json_text(instance_to_json_text(inst));
  CHECK(back.signatures == inst.signatures);
  CHECK(evaluate(back) == evaluate(inst));
}

TEST_CASE("verification reports are deterministic in the seed") {
  Rng rng(91);
  ScalarMatrix m(2, 4);
  m.at(0, 1) = Scalar(2);
  m.at(1, 3) = Scalar(3);
  const Base base(m, 2);
  const std::vector<Signature> fs{Signature({2}, {Scalar(1), Scalar(2)})};
  const std::vector<Signature> hs{
      Signature({4}, {Scalar(1), Scalar(2), Scalar(3), Scalar(4)})};
  CollapsedProblem c = strip_columns(base, hs, {1});
  c.new_base.m.at(0, 0) += Scalar(1);  // force counterexamples

  std::ostringstream first, second;
  CHECK_FALSE(verify_collapse(base, fs, hs, c, 8, 42, &first));
  CHECK_FALSE(verify_collapse(base, fs, hs, c, 8, 42, &second));
  CHECK(first.str() == second.str());
  CHECK_FALSE(first.str().empty());

  std::ostringstream other;
  CHECK_FALSE(verify_collapse(base, fs, hs, c, 8, 43, &other));
  // A different seed draws different instances.
  CHECK(other.str() != first.str());
}
