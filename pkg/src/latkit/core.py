"""Exact rational linear algebra kernel for lattice computations.

Vectors are tuples of ``fractions.Fraction``; every operation here is exact.
Norms and volumes are carried as squared quantities so all comparisons stay
rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


def vec(*coords) -> Vector:
    """Build a vector from ints, strings ("p/q") or Fractions."""
    return tuple(Fraction(c) for c in coords)


def as_vector(coords: Iterable) -> Vector:
    return tuple(Fraction(c) for c in coords)


def is_zero_vector(v: Vector) -> bool:
    return all(c == 0 for c in v)


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vneg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def vscale(v: Vector, s) -> Vector:
    s = Fraction(s)
    return tuple(s * a for a in v)


def inner_product(u: Vector, v: Vector) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def norm_sq(v: Vector) -> Fraction:
    return inner_product(v, v)


def gram_matrix(vectors: Sequence[Vector]) -> Matrix:
    return tuple(
        tuple(inner_product(u, v) for v in vectors) for u in vectors
    )


def _det_bareiss_int(m: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix.

    Entries are rescaled to integers and eliminated fraction-free (Bareiss)
    to avoid intermediate coefficient blowup.
    """
    rows = [[Fraction(x) for x in row] for row in matrix]
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix is not square")
    scale = math.lcm(*(x.denominator for row in rows for x in row))
    im = [[int(x * scale) for x in row] for row in rows]
    return Fraction(_det_bareiss_int(im), scale**n)


def rank_of(vectors: Sequence[Vector]) -> int:
    """Rank of the coordinate matrix, by exact Gaussian elimination."""
    rows = [list(v) for v in vectors if not is_zero_vector(v)]
    if not rows:
        return 0
    d = len(rows[0])
    rank = 0
    for col in range(d):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


class LatticeBasis:
    """Ordered linearly independent vectors with a cached Gram matrix."""

    __slots__ = ("vectors", "gram", "dim")

    def __init__(self, vectors: Iterable, dim: Optional[int] = None):
        vs = tuple(as_vector(v) for v in vectors)
        if vs:
            d = len(vs[0])
            if any(len(v) != d for v in vs):
                raise ValueError("basis vectors have mixed dimensions")
            if dim is not None and dim != d:
                raise ValueError("dim does not match vector length")
            dim = d
            if len(vs) > d:
                raise ValueError("more basis vectors than the dimension")
        self.vectors = vs
        self.dim = dim if dim is not None else 0
        self.gram = gram_matrix(vs)
        if vs and determinant(self.gram) == 0:
            raise ValueError("basis vectors are linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def __repr__(self):
        return f"LatticeBasis({list(self.vectors)!r})"

    def __eq__(self, other):
        return (
            isinstance(other, LatticeBasis) and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash(self.vectors)


@dataclass(frozen=True)
class GeneratingSet:
    """Multiset of nonzero lattice vectors with a squared norm bound.

    ``complete`` means the producer asserts the set contains every nonzero
    lattice vector of squared norm at most ``bound_sq``.
    """

    vectors: tuple[Vector, ...]
    bound_sq: Fraction
    complete: bool = False

    def __init__(self, vectors, bound_sq, complete=False):
        vs = tuple(v for v in (as_vector(w) for w in vectors)
                   if not is_zero_vector(v))
        bound_sq = Fraction(bound_sq)
        for v in vs:
            if norm_sq(v) > bound_sq:
                raise ValueError(
                    f"vector {v} exceeds the squared norm bound {bound_sq}")
        object.__setattr__(self, "vectors", vs)
        object.__setattr__(self, "bound_sq", bound_sq)
        object.__setattr__(self, "complete", bool(complete))


def _row_hnf(rows: list[list[int]], d: int) -> list[list[int]]:
    """Row-style HNF: pivots left to right, zeros below, entries above a
    pivot reduced into [0, pivot)."""
    rows = [r[:] for r in rows if any(r)]
    r0 = 0
    for col in range(d):
        while True:
            nz = [i for i in range(r0, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r0], rows[piv] = rows[piv], rows[r0]
            done = True
            for i in range(r0 + 1, len(rows)):
                if rows[i][col] != 0:
                    q = rows[i][col] // rows[r0][col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r0])]
                    if rows[i][col] != 0:
                        done = False
            if done:
                if rows[r0][col] < 0:
                    rows[r0] = [-a for a in rows[r0]]
                for j in range(r0):
                    q = rows[j][col] // rows[r0][col]
                    if q:
                        rows[j] = [a - q * b
                                   for a, b in zip(rows[j], rows[r0])]
                r0 += 1
                break
        if r0 == len(rows):
            break
    return [r for r in rows if any(r)]


def integerize(vectors: Sequence[Vector]) -> tuple[list[list[int]], int]:
    """Rescale rational vectors by the lcm of all denominators."""
    vs = [as_vector(v) for v in vectors]
    denoms = [c.denominator for v in vs for c in v]
    scale = math.lcm(*denoms) if denoms else 1
    return [[int(c * scale) for c in v] for v in vs], scale


def hnf(vectors: Sequence) -> tuple[tuple[int, ...], ...]:
    """Column-style Hermite normal form of the lattice generated by integer
    vectors; equal lattices yield identical output."""
    vs = [as_vector(v) for v in vectors]
    vs = [v for v in vs if not is_zero_vector(v)]
    if not vs:
        return ()
    for v in vs:
        for c in v:
            if c.denominator != 1:
                raise ValueError(f"hnf requires integer coordinates, got {c}")
    d = len(vs[0])
    rows = [[int(c) for c in reversed(v)] for v in vs]
    red = _row_hnf(rows, d)
    return tuple(tuple(reversed(r)) for r in reversed(red))


def canonical_basis(vectors: Sequence) -> tuple[Vector, ...]:
    """Presentation-independent canonical basis of the generated lattice.

    Rational generators are rescaled to integers, brought to HNF, and scaled
    back; hnf(s*L) = s*hnf(L), so the result does not depend on the chosen
    scale.
    """
    vs = [as_vector(v) for v in vectors]
    vs = [v for v in vs if not is_zero_vector(v)]
    if not vs:
        return ()
    ints, scale = integerize(vs)
    return tuple(tuple(Fraction(c, scale) for c in row)
                 for row in hnf(ints))


def _vectors_of(obj) -> tuple[Vector, ...]:
    if isinstance(obj, LatticeBasis):
        return obj.vectors
    if isinstance(obj, GeneratingSet):
        return obj.vectors
    return tuple(as_vector(v) for v in obj)


def lattice_equal(a, b) -> bool:
    """Whether two bases / generator sets generate the same lattice."""
    va, vb = _vectors_of(a), _vectors_of(b)
    if va and vb and len(va[0]) != len(vb[0]):
        raise ValueError("ambient dimensions differ")
    return canonical_basis(va) == canonical_basis(vb)


def solve_in_span(basis: LatticeBasis, v) -> Optional[tuple[Fraction, ...]]:
    """Exact coordinates of ``v`` in the real span of ``basis``, or None.

    Solves Gram * c = B^T v, then verifies the reconstruction; the solve
    alone cannot distinguish v from its projection onto the span.
    """
    v = as_vector(v)
    n = basis.rank
    if n == 0:
        return () if is_zero_vector(v) else None
    if len(v) != basis.dim:
        raise ValueError("dimension mismatch")
    # Gaussian elimination on the (invertible) Gram matrix.
    aug = [list(basis.gram[i]) + [inner_product(basis.vectors[i], v)]
           for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pr = aug[col]
        inv = 1 / pr[col]
        aug[col] = [a * inv for a in pr]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    coeffs = tuple(aug[i][n] for i in range(n))
    recon = tuple(
        sum((c * basis.vectors[i][j] for i, c in enumerate(coeffs)),
            Fraction(0))
        for j in range(basis.dim)
    )
    return coeffs if recon == v else None


def is_member(basis: LatticeBasis, v) -> bool:
    """Lattice membership: the paper-style localization test."""
    coeffs = solve_in_span(basis, v)
    return coeffs is not None and all(c.denominator == 1 for c in coeffs)


def volume_sq(basis: LatticeBasis) -> Fraction:
    """Squared volume (Gram determinant); rank may be below the dimension."""
    return determinant(basis.gram)
