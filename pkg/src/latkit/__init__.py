"""Exact incremental lattice algorithms.

Basis construction from generators, successive minima, and orthogonal
(Kneser) decomposition, all in exact rational arithmetic, each paired with
an independent brute-force oracle.
"""

from .core import (
    GeneratingSet,
    LatticeBasis,
    Vector,
    canonical_basis,
    determinant,
    gram_matrix,
    hnf,
    inner_product,
    is_member,
    lattice_equal,
    norm_sq,
    rank_of,
    solve_in_span,
    vec,
    volume_sq,
)
from .decompose import (
    Component,
    Decomposition,
    canonical_component_forms,
    graph_decomposition_oracle,
    is_length_decomposable,
    orthogonal_decomposition,
    projection_nonzero,
)
from .enumeration import (
    EnumerationCapExceeded,
    EnumerationRequest,
    box_oracle,
    enumerate_up_to,
    first_minimum_sq,
)
from .incremental import (
    InsertionRecord,
    UpdateTrace,
    generating_subset,
    incremental_basis,
    update_step_bound_holds,
    update_step_bound_value,
)
from .minima import (
    MinimaResult,
    greedy_minima_oracle,
    minkowski_check,
    successive_minima,
)
from .reduction import ReductionParams, basis_union, gram_schmidt, mlll

__version__ = "0.1.0"

__all__ = [
    "Component",
    "Decomposition",
    "EnumerationCapExceeded",
    "EnumerationRequest",
    "GeneratingSet",
    "InsertionRecord",
    "LatticeBasis",
    "MinimaResult",
    "ReductionParams",
    "UpdateTrace",
    "Vector",
    "basis_union",
    "box_oracle",
    "canonical_basis",
    "canonical_component_forms",
    "determinant",
    "enumerate_up_to",
    "first_minimum_sq",
    "generating_subset",
    "gram_matrix",
    "gram_schmidt",
    "graph_decomposition_oracle",
    "greedy_minima_oracle",
    "hnf",
    "incremental_basis",
    "inner_product",
    "is_length_decomposable",
    "is_member",
    "lattice_equal",
    "minkowski_check",
    "mlll",
    "norm_sq",
    "orthogonal_decomposition",
    "projection_nonzero",
    "rank_of",
    "solve_in_span",
    "successive_minima",
    "update_step_bound_holds",
    "update_step_bound_value",
    "vec",
    "volume_sq",
]
