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

#include <string>
#include <vector>

#include "holoalg/signature.hpp"

namespace holoalg {

enum class StepKind { Flip, GlobalFactor, Exchange, Bar, Slash };
enum class StepSide { Input, Output };

/// One elementary transformation of a binary-variable matrix view.
///
/// Positions are 1-based. Input positions count row digits from the most
/// significant (variable 1); output positions count column digits from
/// the most significant (variable s+t). Flip acts on a single position;
/// Exchange, Bar and Slash act on the adjacent pair (position,
/// position+1); GlobalFactor has no position.
///
/// Input-side steps left-multiply the view by the step matrix padded
/// with identity factors at the remaining row digits. Output-side steps
/// right-multiply by the transposed padded matrix, which makes both
/// sides act by the same digit-local rule: a flip on output position t
/// permutes the least significant column bit.
struct TransformStep {
  StepKind kind;
  StepSide side = StepSide::Input;
  int position = 0;
  Scalar value;  // GlobalFactor: the factor; Bar/Slash: the weight

  static TransformStep flip(StepSide side, int position);
  static TransformStep global_factor(Scalar c);  // throws on c == 0
  static TransformStep exchange(StepSide side, int position);
  static TransformStep bar(StepSide side, int position, Scalar w);
  static TransformStep slash(StepSide side, int position, Scalar w);

  friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

using TransformLog = std::vector<TransformStep>;

/// The exact step matrix: 2x2 for Flip, 4x4 for Exchange/Bar/Slash,
/// 1x1 for GlobalFactor.
ScalarMatrix step_matrix(const TransformStep& step);

TransformStep invert_step(const TransformStep& step);
TransformLog invert(const TransformLog& log);

MatrixView apply(const TransformStep& step, const MatrixView& m);

/// Applies every step of a log in order. Named apart from the single
/// step overload: with a std::vector argument, an unqualified apply
/// call would meet std::apply through argument-dependent lookup.
MatrixView replay(const TransformLog& log, const MatrixView& m);

/// Applies a log to a bare signature, treating every variable as an
/// input position (an (arity, 0) view).
Signature apply_as_inputs(const TransformLog& log, const Signature& sig);

/// Exchange keeps signatures realizable by an underlying graph only up
/// to sign; this convenience pair restores the all-ones value.
TransformLog exchange_with_factor(StepSide side, int position);

/// One step per line: FLIP side pos | GF re im | EXCH side pos |
/// BAR side pos re im | SLASH side pos re im. Sides are "in"/"out";
/// re and im are compact rationals.
std::string log_to_text(const TransformLog& log);
TransformLog log_from_text(const std::string& text);

}  // namespace holoalg
