# Copyright 2026 The holoalg authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact algebra of constraint signatures on bipartite instances.

Everything is computed over complex numbers with rational parts, so all
identities checked by this package hold exactly, not up to rounding.
"""

from holoalg._core import (
    Base,
    CanonicalForm,
    CollapseCertificate,
    CollapsedProblem,
    Graph,
    Instance,
    MatchgateCheck,
    Matrix,
    MatrixView,
    Scalar,
    Signature,
    TransformStep,
    apply,
    apply_as_inputs,
    bar,
    bipartite_from_matrix,
    bipartite_matrix,
    canonical_form_from_json,
    canonical_form_to_json,
    canonical_signature,
    canonicalize,
    collapse_symmetric,
    collapse_via_cover,
    collapse_via_realizer,
    collapsed_problem_from_json,
    collapsed_problem_to_json,
    crossover_instance,
    crossover_signature,
    determinant,
    evaluate,
    exchange,
    exchange_with_factor,
    flip,
    gadget_signature,
    global_factor,
    graph_from_text,
    graph_to_text,
    holant_pair,
    identity_view,
    instance_from_json,
    instance_to_json,
    invert,
    invert_step,
    is_matchgate,
    kron,
    kron_power,
    log_from_text,
    log_to_text,
    matrix_product,
    mul,
    multiply_introduced,
    pfaffian,
    pfaffian_crossover_instance,
    pivot_rows,
    rank,
    reconstruct,
    regroup,
    replay,
    scale,
    signature_from_graph,
    slash,
    solve_left,
    step_matrix,
    strip_columns,
    support_anchor,
    tensor_product,
    to_underlying_graph,
    transform_left,
    transform_left_side,
    transform_right,
    transform_right_side,
    transpose,
    verify_collapse,
    verify_holant,
)

__all__ = [name for name in dir() if not name.startswith("_")]
