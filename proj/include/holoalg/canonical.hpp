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
#include <utility>
#include <vector>

#include "holoalg/matchgate.hpp"
#include "holoalg/signature.hpp"
#include "holoalg/transforms.hpp"

namespace holoalg {

/// Matching form of a bipartite matchgate view: input vertex i is joined
/// to output vertex s+t+1-i with weight weights[i-1] for i = 1..r and no
/// other edge remains. Replaying row_log followed by col_log on the
/// original view produces exactly that form; the two logs act on
/// different sides, so their relative order is immaterial.
struct CanonicalForm {
  int s = 0;
  int t = 0;
  int r = 0;
  bool zero = false;
  std::vector<Scalar> weights;
  TransformLog row_log;
  TransformLog col_log;
};

/// Underlying graph of a matchgate signature together with the anchoring
/// steps (input flips and a global factor) that were applied before the
/// graph was read off. Throws for the zero signature and for signatures
/// that fail the matchgate identities.
std::pair<UnderlyingGraph, TransformLog> to_underlying_graph(const Signature& f);

/// Drives a matchgate view to matching form with logged steps. Throws
/// for non-matchgates, naming a witness index.
CanonicalForm canonicalize(const MatrixView& view);

/// The matching-form signature a canonical form describes.
Signature canonical_signature(const CanonicalForm& c);

/// Undoes the logged steps: reproduces the original signature bit for
/// bit.
Signature reconstruct(const CanonicalForm& c);

std::string canonical_form_to_json_text(const CanonicalForm& c);
CanonicalForm canonical_form_from_json_text(const std::string& text);

}  // namespace holoalg
