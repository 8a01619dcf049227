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

#include <sstream>
#include <stdexcept>

namespace holoalg {

namespace {

bool is_pair_step(StepKind kind) {
  return kind == StepKind::Exchange || kind == StepKind::Bar ||
         kind == StepKind::Slash;
}

// Flat bit indices (variable k sits at bit arity-k) of the digits a
// step touches, group MSB first. Input position i is variable i; output
// position p is column digit p, i.e. variable s+t+1-p at bit p-1. The
// transposed output convention makes both sides the same gather, but it
// puts the output group MSB at the LOWER flat bit.
std::vector<int> step_bits(const TransformStep& step, int s, int t) {
  const int span = is_pair_step(step.kind) ? 2 : 1;
  const int limit = step.side == StepSide::Input ? s : t;
  if (step.position < 1 || step.position + span - 1 > limit)
    throw std::invalid_argument("transform position out of range");
  if (step.side == StepSide::Input) {
    int msb = s + t - step.position;
    if (span == 2) return {msb, msb - 1};
    return {msb};
  }
  int msb = step.position - 1;
  if (span == 2) return {msb, msb + 1};
  return {msb};
}

const char* side_text(StepSide side) {
  return side == StepSide::Input ? "in" : "out";
}

StepSide parse_side(const std::string& word) {
  if (word == "in") return StepSide::Input;
  if (word == "out") return StepSide::Output;
  throw std::invalid_argument("bad step side: " + word);
}

}  // namespace

TransformStep TransformStep::flip(StepSide side, int position) {
  return {StepKind::Flip, side, position, Scalar()};
}

TransformStep TransformStep::global_factor(Scalar c) {
  if (c.is_zero()) throw std::invalid_argument("zero global factor");
  return {StepKind::GlobalFactor, StepSide::Input, 0, std::move(c)};
}

TransformStep TransformStep::exchange(StepSide side, int position) {
  return {StepKind::Exchange, side, position, Scalar()};
}

TransformStep TransformStep::bar(StepSide side, int position, Scalar w) {
  return {StepKind::Bar, side, position, std::move(w)};
}

TransformStep TransformStep::slash(StepSide side, int position, Scalar w) {
  return {StepKind::Slash, side, position, std::move(w)};
}

ScalarMatrix step_matrix(const TransformStep& step) {
  switch (step.kind) {
    case StepKind::Flip: {
      ScalarMatrix m(2, 2);
      m.at(0, 1) = Scalar(1);
      m.at(1, 0) = Scalar(1);
      return m;
    }
    case StepKind::GlobalFactor: {
      ScalarMatrix m(1, 1);
      m.at(0, 0) = step.value;
      return m;
    }
    case StepKind::Exchange: {
      ScalarMatrix m(4, 4);
      m.at(0, 0) = Scalar(1);
      m.at(1, 2) = Scalar(1);
      m.at(2, 1) = Scalar(1);
      m.at(3, 3) = Scalar(-1);
      return m;
    }
    case StepKind::Bar: {
      ScalarMatrix m = ScalarMatrix::identity(4);
      m.at(0, 3) = step.value;
      return m;
    }
    case StepKind::Slash: {
      ScalarMatrix m = ScalarMatrix::identity(4);
      m.at(2, 1) = step.value;
      return m;
    }
  }
  throw std::logic_error("unknown step kind");
}

TransformStep invert_step(const TransformStep& step) {
  TransformStep inv = step;
  switch (step.kind) {
    case StepKind::GlobalFactor:
      inv.value = step.value.inverse();
      break;
    case StepKind::Bar:
    case StepKind::Slash:
      inv.value = -step.value;
      break;
    case StepKind::Flip:
    case StepKind::Exchange:
      break;  // involutions
  }
  return inv;
}

TransformLog invert(const TransformLog& log) {
  TransformLog inv;
  inv.reserve(log.size());
  for (auto it = log.rbegin(); it != log.rend(); ++it)
    inv.push_back(invert_step(*it));
  return inv;
}

MatrixView apply(const TransformStep& step, const MatrixView& m) {
  if (step.kind == StepKind::GlobalFactor) {
    if (step.value.is_zero())
      throw std::invalid_argument("zero global factor");
    return MatrixView(scale(m.signature(), step.value), m.s());
  }
  const Signature& sig = m.signature();
  if (!sig.all_binary())
    throw std::invalid_argument("transform steps need binary variables");
  const std::vector<int> bits = step_bits(step, m.s(), m.t());
  const ScalarMatrix stepm = step_matrix(step);
  const std::size_t group = std::size_t{1} << bits.size();
  std::vector<Scalar> out(sig.size());
  for (std::size_t v = 0; v < sig.size(); ++v) {
    std::size_t g = 0;
    for (int b : bits) g = g * 2 + ((v >> b) & 1);
    Scalar acc;
    for (std::size_t u = 0; u < group; ++u) {
      const Scalar& coef = stepm.at(g, u);
      if (coef.is_zero()) continue;
      std::size_t w = v;
      std::size_t rest = u;
      for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        w = (w & ~(std::size_t{1} << *it)) | ((rest & 1) << *it);
        rest >>= 1;
      }
      acc += coef * sig.value(w);
    }
    out[v] = std::move(acc);
  }
  return MatrixView(Signature(sig.domains(), std::move(out)), m.s());
}

MatrixView replay(const TransformLog& log, const MatrixView& m) {
  MatrixView cur = m;
  for (const auto& step : log) cur = apply(step, cur);
  return cur;
}

Signature apply_as_inputs(const TransformLog& log, const Signature& sig) {
  return replay(log, MatrixView(sig, sig.arity())).signature();
}

TransformLog exchange_with_factor(StepSide side, int position) {
  return {TransformStep::exchange(side, position),
          TransformStep::global_factor(Scalar(-1))};
}

std::string log_to_text(const TransformLog& log) {
  std::ostringstream out;
  for (const auto& step : log) {
    switch (step.kind) {
      case StepKind::Flip:
        out << "FLIP " << side_text(step.side) << ' ' << step.position;
        break;
      case StepKind::GlobalFactor:
        out << "GF " << rational_str(step.value.real()) << ' '
            << rational_str(step.value.imag());
        break;
      case StepKind::Exchange:
        out << "EXCH " << side_text(step.side) << ' ' << step.position;
        break;
      case StepKind::Bar:
        out << "BAR " << side_text(step.side) << ' ' << step.position << ' '
            << rational_str(step.value.real()) << ' '
            << rational_str(step.value.imag());
        break;
      case StepKind::Slash:
        out << "SLASH " << side_text(step.side) << ' ' << step.position << ' '
            << rational_str(step.value.real()) << ' '
            << rational_str(step.value.imag());
        break;
    }
    out << '\n';
  }
  return out.str();
}

TransformLog log_from_text(const std::string& text) {
  TransformLog log;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream in(line);
    std::string word;
    if (!(in >> word)) continue;  // blank line
    auto read_side = [&in]() {
      std::string s;
      if (!(in >> s)) throw std::invalid_argument("missing step side");
      return parse_side(s);
    };
    auto read_pos = [&in]() {
      int p;
      if (!(in >> p)) throw std::invalid_argument("missing step position");
      return p;
    };
    auto read_scalar = [&in]() {
      std::string re, im;
      if (!(in >> re >> im)) throw std::invalid_argument("missing step value");
      return Scalar(parse_rational(re), parse_rational(im));
    };
    if (word == "FLIP") {
      StepSide side = read_side();
      log.push_back(TransformStep::flip(side, read_pos()));
    } else if (word == "GF") {
      log.push_back(TransformStep::global_factor(read_scalar()));
    } else if (word == "EXCH") {
      StepSide side = read_side();
      log.push_back(TransformStep::exchange(side, read_pos()));
    } else if (word == "BAR") {
      StepSide side = read_side();
      int pos = read_pos();
      log.push_back(TransformStep::bar(side, pos, read_scalar()));
    } else if (word == "SLASH") {
      StepSide side = read_side();
      int pos = read_pos();
      log.push_back(TransformStep::slash(side, pos, read_scalar()));
    } else {
      throw std::invalid_argument("bad step keyword: " + word);
    }
    std::string extra;
    if (in >> extra)
      throw std::invalid_argument("trailing text in step line: " + line);
  }
  return log;
}

}  // namespace holoalg
