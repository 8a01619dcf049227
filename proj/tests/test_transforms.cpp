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

#include "holoalg/transforms.hpp"

#include <cstddef>
#include <vector>

#include "doctest.h"
#include "holoalg/random.hpp"
#include "holoalg/signature.hpp"

using namespace holoalg;

namespace {

Signature random_binary_signature(Rng& rng, int arity) {
  Signature f(std::vector<int>(arity, 2));
  for (std::size_t m = 0; m < f.size(); ++m) f.value(m) = random_scalar(rng);
  return f;
}

// The step matrix padded with identity factors to cover all `digits`
// positions of one side, digit 1 most significant.
ScalarMatrix padded_matrix(const TransformStep& step, int digits) {
  const ScalarMatrix core = step_matrix(step);
  const int width = core.rows == 4 ? 2 : 1;
  const int before = step.position - 1;
  const int after = digits - before - width;
  ScalarMatrix m = ScalarMatrix::identity(std::size_t{1} << before);
  m = kron(m, core);
  return kron(m, ScalarMatrix::identity(std::size_t{1} << after));
}

TransformStep random_step(Rng& rng, int s, int t) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  const StepSide side = coin(rng) ? StepSide::Input : StepSide::Output;
  const int digits = side == StepSide::Input ? s : t;
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<int> pos(1, digits);
      return TransformStep::flip(side, pos(rng));
    }
    case 1:
      return TransformStep::global_factor(random_nonzero_scalar(rng));
    case 2: {
      std::uniform_int_distribution<int> pos(1, digits - 1);
      return TransformStep::exchange(side, pos(rng));
    }
    case 3: {
      std::uniform_int_distribution<int> pos(1, digits - 1);
      return TransformStep::bar(side, pos(rng), random_scalar(rng));
    }
    default: {
      std::uniform_int_distribution<int> pos(1, digits - 1);
      return TransformStep::slash(side, pos(rng), random_scalar(rng));
    }
  }
}

}  // namespace

TEST_CASE("step matrices") {
  const ScalarMatrix flip = step_matrix(TransformStep::flip(StepSide::Input, 1));
  CHECK(flip == ScalarMatrix(2, 2, {Scalar(0), Scalar(1),
                                    Scalar(1), Scalar(0)}));

  const ScalarMatrix exch =
      step_matrix(TransformStep::exchange(StepSide::Input, 1));
  ScalarMatrix exch_expected(4, 4);
  exch_expected.at(0, 0) = Scalar(1);
  exch_expected.at(1, 2) = Scalar(1);
  exch_expected.at(2, 1) = Scalar(1);
  exch_expected.at(3, 3) = Scalar(-1);
  CHECK(exch == exch_expected);

  const Scalar u(Rational(2, 3));
  ScalarMatrix bar_expected = ScalarMatrix::identity(4);
  bar_expected.at(0, 3) = u;
  CHECK(step_matrix(TransformStep::bar(StepSide::Output, 1, u)) ==
        bar_expected);

  ScalarMatrix slash_expected = ScalarMatrix::identity(4);
  slash_expected.at(2, 1) = u;
  CHECK(step_matrix(TransformStep::slash(StepSide::Output, 1, u)) ==
        slash_expected);

  CHECK(step_matrix(TransformStep::global_factor(Scalar(-2))) ==
        ScalarMatrix(1, 1, {Scalar(-2)}));
  CHECK_THROWS(TransformStep::global_factor(Scalar(0)));
}

TEST_CASE("apply equals padded matrix multiplication") {
  Rng rng(31);
  const int s = 3, t = 3;
  for (int k = 0; k < 60; ++k) {
    const MatrixView view(random_binary_signature(rng, s + t), s);
    const TransformStep step = random_step(rng, s, t);
    const ScalarMatrix before = view.to_matrix();
    const ScalarMatrix after = apply(step, view).to_matrix();
    if (step.kind == StepKind::GlobalFactor) {
      ScalarMatrix scaled = before;
      for (auto& v : scaled.data) v *= step.value;
      CHECK(after == scaled);
    } else if (step.side == StepSide::Input) {
      CHECK(after == mul(padded_matrix(step, s), before));
    } else {
      CHECK(after == mul(before, transpose(padded_matrix(step, t))));
    }
  }
}

TEST_CASE("output flip toggles one signature bit") {
  Rng rng(32);
  const int s = 2, t = 3;
  const Signature f = random_binary_signature(rng, s + t);
  for (int p = 1; p <= t; ++p) {
    const Signature g =
        apply(TransformStep::flip(StepSide::Output, p), MatrixView(f, s))
            .signature();
    const std::size_t bit = std::size_t{1} << (p - 1);
    for (std::size_t m = 0; m < f.size(); ++m)
      CHECK(g.value(m) == f.value(m ^ bit));
  }
  // Input position p toggles the bit of variable p.
  for (int p = 1; p <= s; ++p) {
    const Signature g =
        apply(TransformStep::flip(StepSide::Input, p), MatrixView(f, s))
            .signature();
    const std::size_t bit = std::size_t{1} << (s + t - p);
    for (std::size_t m = 0; m < f.size(); ++m)
      CHECK(g.value(m) == f.value(m ^ bit));
  }
}

TEST_CASE("every step is invertible and rank preserving") {
  Rng rng(33);
  const int s = 3, t = 2;
  for (int k = 0; k < 40; ++k) {
    const MatrixView view(random_binary_signature(rng, s + t), s);
    const TransformStep step = random_step(rng, s, t);
    const MatrixView stepped = apply(step, view);
    CHECK(rank(stepped) == rank(view));
    CHECK(apply(invert_step(step), stepped) == view);
  }
}

TEST_CASE("replaying a log then its inverse is the identity") {
  Rng rng(34);
  const int s = 2, t = 3;
  for (int k = 0; k < 10; ++k) {
    TransformLog log;
    for (int j = 0; j < 6; ++j) log.push_back(random_step(rng, s, t));
    const MatrixView view(random_binary_signature(rng, s + t), s);
    CHECK(replay(invert(log), replay(log, view)) == view);
  }
}

TEST_CASE("apply_as_inputs treats every variable as a row digit") {
  Rng rng(35);
  const Signature f = random_binary_signature(rng, 4);
  TransformLog log{TransformStep::flip(StepSide::Input, 2),
                   TransformStep::bar(StepSide::Input, 3, Scalar(2)),
                   TransformStep::global_factor(Scalar(Rational(1, 2)))};
  CHECK(apply_as_inputs(log, f) ==
        replay(log, MatrixView(f, f.arity())).signature());
}

TEST_CASE("exchange_with_factor compensates the exchange sign") {
  const TransformLog log = exchange_with_factor(StepSide::Input, 2);
  REQUIRE(log.size() == 2);
  CHECK(log[0].kind == StepKind::Exchange);
  CHECK(log[0].position == 2);
  CHECK(log[1].kind == StepKind::GlobalFactor);
  CHECK(log[1].value == Scalar(-1));
}

TEST_CASE("log text round trip") {
  Rng rng(36);
  TransformLog log;
  for (int j = 0; j < 12; ++j) log.push_back(random_step(rng, 3, 3));
  const std::string text = log_to_text(log);
  CHECK(log_from_text(text) == log);
  CHECK(log_from_text("") == TransformLog{});
  CHECK_THROWS(log_from_text("WOBBLE in 1"));
}
