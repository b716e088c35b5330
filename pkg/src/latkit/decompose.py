"""Orthogonal decomposition of a lattice into indecomposable summands.

Two routes to the same (Eichler-unique) answer: an incremental merge scan
over a complete generating set, and a graph oracle that takes connected
components of the non-orthogonality graph on length-indecomposable vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    GeneratingSet,
    LatticeBasis,
    Vector,
    canonical_basis,
    inner_product,
    is_member,
    is_zero_vector,
    norm_sq,
)
from .minima import norm_order_key
from .reduction import DEFAULT_PARAMS, ReductionParams, mlll


@dataclass(frozen=True)
class Component:
    """One pairwise-orthogonal summand; the basis vectors double as the
    witnesses for projection tests."""

    basis: LatticeBasis

    @property
    def span_witnesses(self) -> tuple[Vector, ...]:
        return self.basis.vectors

    @property
    def rank(self) -> int:
        return self.basis.rank


@dataclass(frozen=True)
class Decomposition:
    components: tuple[Component, ...]
    grouped_basis: tuple[Vector, ...]
    indices: tuple[int, ...]   # 1-based component start offsets, length r
    r: int

    @property
    def index_bounds(self) -> tuple[int, ...]:
        """Start offsets plus the sentinel n + 1."""
        return self.indices + (len(self.grouped_basis) + 1,)


def projection_nonzero(component: Component, v) -> bool:
    """Whether v has a nonzero orthogonal projection onto the component's
    span; equivalent to a nonzero inner product with some basis vector."""
    return any(inner_product(v, b) != 0 for b in component.basis.vectors)


def is_length_decomposable(v: Vector, s: GeneratingSet) -> bool:
    """Whether v = x + y with x, y nonzero lattice vectors strictly shorter
    than v.

    Strictness matters: an orthogonal splitting forces ||x||, ||y|| < ||v||,
    and with equal norms allowed the minimal vectors of a root lattice would
    all qualify, emptying the oracle's vertex set.  Completeness of ``s``
    guarantees any such x appears in it, so exhausting x over s decides the
    property.
    """
    nv = norm_sq(v)
    for x in s.vectors:
        if norm_sq(x) >= nv:
            continue
        y = tuple(a - b for a, b in zip(v, x))
        if not is_zero_vector(y) and norm_sq(y) < nv:
            return True
    return False


def _assert_pairwise_orthogonal(components: Sequence[LatticeBasis]) -> None:
    for i in range(len(components)):
        for j in range(i + 1, len(components)):
            for u in components[i].vectors:
                for w in components[j].vectors:
                    if inner_product(u, w) != 0:
                        raise AssertionError(
                            "components lost pairwise orthogonality")


def _canonicalize(bases: Sequence[LatticeBasis], dim: int) -> Decomposition:
    """Sort components into the canonical order and assemble the output."""
    keyed = []
    for b in bases:
        canon = canonical_basis(b.vectors)
        keyed.append(((min(norm_sq(v) for v in canon), canon), b))
    keyed.sort(key=lambda kv: kv[0])
    comps = tuple(Component(b) for _, b in keyed)
    grouped: list[Vector] = []
    indices: list[int] = []
    pos = 1
    for c in comps:
        indices.append(pos)
        grouped.extend(c.basis.vectors)
        pos += c.rank
    return Decomposition(comps, tuple(grouped), tuple(indices), len(comps))


def orthogonal_decomposition(s: GeneratingSet,
                             params: ReductionParams = DEFAULT_PARAMS,
                             check_invariants: bool = False) -> Decomposition:
    """Decompose the lattice generated by the complete set ``s`` into
    indecomposable pairwise-orthogonal sublattices.

    Vectors are scanned by nondecreasing norm; a vector outside the current
    sum merges every component it is non-orthogonal to into a single new
    component with a freshly reduced basis.  ``check_invariants`` asserts
    pairwise orthogonality after every merge.
    """
    if not s.vectors:
        raise ValueError("generating set is empty")
    if not s.complete:
        raise ValueError("orthogonal decomposition requires a complete set")
    order = sorted(s.vectors, key=norm_order_key)
    dim = len(order[0])
    components: list[LatticeBasis] = [mlll([order[0]], params)]
    sum_basis = components[0]
    for v in order[1:]:
        if is_member(sum_basis, v):
            continue
        joined = [i for i, c in enumerate(components)
                  if any(inner_product(v, b) != 0 for b in c.vectors)]
        merged_gens = [v]
        for i in joined:
            merged_gens.extend(components[i].vectors)
        merged = mlll(merged_gens, params)
        components = [c for i, c in enumerate(components)
                      if i not in joined] + [merged]
        flat = [b for c in components for b in c.vectors]
        sum_basis = LatticeBasis(flat)
        if check_invariants:
            _assert_pairwise_orthogonal(components)
    return _canonicalize(components, dim)


def graph_decomposition_oracle(s: GeneratingSet,
                               params: ReductionParams = DEFAULT_PARAMS
                               ) -> Decomposition:
    """Independent route: connected components of the graph whose vertices
    are the length-indecomposable vectors of S and whose edges join
    non-orthogonal pairs; each vertex class generates one summand."""
    if not s.vectors:
        raise ValueError("generating set is empty")
    if not s.complete:
        raise ValueError("orthogonal decomposition requires a complete set")
    vertices = [v for v in s.vectors if not is_length_decomposable(v, s)]
    dim = len(s.vectors[0])
    unvisited = set(range(len(vertices)))
    bases: list[LatticeBasis] = []
    while unvisited:
        start = min(unvisited)
        stack = [start]
        unvisited.discard(start)
        comp = [start]
        while stack:
            i = stack.pop()
            adjacent = [j for j in unvisited
                        if inner_product(vertices[i], vertices[j]) != 0]
            for j in adjacent:
                unvisited.discard(j)
                stack.append(j)
            comp.extend(adjacent)
        bases.append(mlll([vertices[i] for i in comp], params))
    return _canonicalize(bases, dim)


def canonical_component_forms(decomp: Decomposition
                              ) -> tuple[tuple[Vector, ...], ...]:
    """Canonical per-component bases, for equality tests between runs."""
    return tuple(canonical_basis(c.basis.vectors) for c in decomp.components)
