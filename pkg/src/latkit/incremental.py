"""Incremental lattice basis construction with localization/update tracing.

Each generator is first located (membership test against the lattice built
so far); only generators outside it trigger an update, which recomputes a
reduced basis.  The trace records enough to check the update-step bound
u <= d + log2(d! (B/lambda_1)^d) exactly in its squared form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    LatticeBasis,
    as_vector,
    is_member,
    is_zero_vector,
    volume_sq,
)
from .reduction import DEFAULT_PARAMS, ReductionParams, basis_union


@dataclass(frozen=True)
class InsertionRecord:
    index: int           # position in the original generator sequence
    was_update: bool
    rank_after: int
    volume_sq_after: Fraction


@dataclass(frozen=True)
class UpdateTrace:
    insertions: tuple[InsertionRecord, ...]

    @property
    def update_count(self) -> int:
        return sum(1 for r in self.insertions if r.was_update)

    @property
    def localization_count(self) -> int:
        return len(self.insertions)


def incremental_basis(generators: Sequence, params: ReductionParams =
                      DEFAULT_PARAMS) -> tuple[LatticeBasis, UpdateTrace]:
    """Basis of the lattice generated by ``generators``, built one vector at
    a time.

    Zero generators are dropped silently; every nonzero generator produces
    one trace record (duplicates and members count as localization-only
    steps).
    """
    vs = [as_vector(v) for v in generators]
    dims = {len(v) for v in vs}
    if len(dims) > 1:
        raise ValueError("generators have mixed dimensions")
    dim = dims.pop() if dims else None
    basis = LatticeBasis((), dim=dim)
    records = []
    for i, v in enumerate(vs):
        if is_zero_vector(v):
            continue
        if is_member(basis, v):
            records.append(InsertionRecord(i, False, basis.rank,
                                           volume_sq(basis)))
        else:
            basis = basis_union(basis, v, params)
            records.append(InsertionRecord(i, True, basis.rank,
                                           volume_sq(basis)))
    return basis, UpdateTrace(tuple(records))


def update_step_bound_holds(trace: UpdateTrace, d: int, bound_sq,
                            lambda1_sq) -> bool:
    """Exact check of u <= d + log2(d! (B/lambda_1)^d).

    Evaluated in the squared form 4^(u-d) <= (d!)^2 (B^2/lambda_1^2)^d so no
    irrational quantity is ever formed; trivially true when u <= d.
    """
    lambda1_sq = Fraction(lambda1_sq)
    if lambda1_sq <= 0:
        raise ValueError("lambda1_sq must be positive")
    bound_sq = Fraction(bound_sq)
    u = trace.update_count
    if u <= d:
        return True
    return Fraction(4) ** (u - d) <= \
        Fraction(math.factorial(d)) ** 2 * (bound_sq / lambda1_sq) ** d


def update_step_bound_value(d: int, bound_sq, lambda1_sq) -> float:
    """The bound d + log2(d! (B/lambda_1)^d) as a float, for reporting."""
    lambda1_sq = Fraction(lambda1_sq)
    if lambda1_sq <= 0:
        raise ValueError("lambda1_sq must be positive")
    ratio = Fraction(bound_sq) / lambda1_sq
    return d + math.log2(math.factorial(d)) + d * math.log2(float(ratio)) / 2


def generating_subset(generators: Sequence, trace: UpdateTrace
                      ) -> tuple:
    """The generators whose insertion was an update step.

    This subset regenerates the lattice; its size is ``update_count``.
    """
    vs = [as_vector(v) for v in generators]
    return tuple(vs[r.index] for r in trace.insertions if r.was_update)
