"""Successive minima from a complete generating system.

Vectors are scanned in nondecreasing norm; each one that extends the running
subspace contributes the next minimum.  A complete input set guarantees the
scan meets a witness of every minimum in order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (
    GeneratingSet,
    LatticeBasis,
    Vector,
    inner_product,
    norm_sq,
    rank_of,
    volume_sq,
)


@dataclass(frozen=True)
class MinimaResult:
    minima_sq: tuple[Fraction, ...]
    witnesses: tuple[Vector, ...]
    rank: int
    partial: bool = False


def norm_order_key(v: Vector):
    """Nondecreasing squared norm, ties broken lexicographically."""
    return (norm_sq(v), v)


def successive_minima(s: GeneratingSet,
                      expected_rank: Optional[int] = None) -> MinimaResult:
    """Squared successive minima (and witnesses) of the lattice generated by
    the complete set ``s``.

    ``expected_rank`` (when known, e.g. from a basis) flags results as
    partial if the bound was too small to reach every minimum.
    """
    if not s.vectors:
        raise ValueError("generating set is empty")
    if not s.complete:
        raise ValueError("successive minima require a complete set")
    total_rank = rank_of(s.vectors)
    minima: list[Fraction] = []
    witnesses: list[Vector] = []
    ortho: list[Vector] = []  # exact Gram-Schmidt of the witnesses
    for v in sorted(s.vectors, key=norm_order_key):
        w = list(v)
        for bs in ortho:
            c = inner_product(v, bs) / inner_product(bs, bs)
            if c != 0:
                w = [a - c * b for a, b in zip(w, bs)]
        if any(x != 0 for x in w):
            ortho.append(tuple(w))
            witnesses.append(v)
            minima.append(norm_sq(v))
            if len(minima) == total_rank:
                break
    partial = expected_rank is not None and len(minima) < expected_rank
    return MinimaResult(tuple(minima), tuple(witnesses), len(minima), partial)


def greedy_minima_oracle(s: GeneratingSet) -> MinimaResult:
    """Brute-force reference: scan every vector by norm and keep each one
    that is linearly independent of those kept so far (rank recomputation,
    no subspace shortcut, no early exit)."""
    if not s.vectors:
        raise ValueError("generating set is empty")
    kept: list[Vector] = []
    minima: list[Fraction] = []
    for v in sorted(s.vectors, key=norm_order_key):
        if rank_of(kept + [v]) > len(kept):
            kept.append(v)
            minima.append(norm_sq(v))
    return MinimaResult(tuple(minima), tuple(kept), len(kept))


def unit_ball_volume(d: int) -> float:
    return math.pi ** (d / 2) / math.gamma(d / 2 + 1)


def minkowski_check(basis: LatticeBasis, result: MinimaResult,
                    rel_tol: float = 1e-9) -> bool:
    """Minkowski's inequalities on the successive minima:

        2^d/d! vol L  <=  lambda_1 ... lambda_d vol B_d  <=  2^d vol L

    evaluated in floating point within ``rel_tol``.
    """
    d = basis.rank
    if result.rank != d:
        raise ValueError(
            f"rank mismatch: basis rank {d}, {result.rank} minima")
    vol = math.sqrt(float(volume_sq(basis)))
    lam = math.prod(math.sqrt(float(m)) for m in result.minima_sq)
    mid = lam * unit_ball_volume(d)
    lower = 2 ** d / math.factorial(d) * vol
    upper = 2 ** d * vol
    return lower <= mid * (1 + rel_tol) and mid <= upper * (1 + rel_tol)
