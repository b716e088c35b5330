"""Complete short-vector enumeration: all nonzero lattice vectors with
squared norm up to a bound.

The main enumerator does Fincke-Pohst recursive coordinate bounding on an
exact rational Cholesky decomposition of the Gram matrix, so no boundary
vector can be lost to rounding.  A naive coefficient-box scan serves as an
independent oracle in low dimensions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import GeneratingSet, LatticeBasis, Vector, norm_sq
from .minima import norm_order_key
from .reduction import DEFAULT_PARAMS, ReductionParams, mlll

DEFAULT_CAP = 10**6


class EnumerationCapExceeded(RuntimeError):
    """Raised instead of truncating when the vector count passes the cap."""

    def __init__(self, cap: int):
        super().__init__(f"enumeration exceeded the cap of {cap} vectors")
        self.cap = cap


@dataclass(frozen=True)
class EnumerationRequest:
    basis: LatticeBasis
    bound_sq: Fraction
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        object.__setattr__(self, "bound_sq", Fraction(self.bound_sq))
        if self.bound_sq <= 0:
            raise ValueError("bound_sq must be positive")
        if self.basis.rank < 1:
            raise ValueError("basis must have rank at least 1")


def _rational_cholesky(gram) -> list[list[Fraction]]:
    """q with Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2."""
    n = len(gram)
    q = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        q[i][i] = gram[i][i] - sum(
            (q[k][k] * q[k][i] ** 2 for k in range(i)), Fraction(0))
        for j in range(i + 1, n):
            q[i][j] = (gram[i][j] - sum(
                (q[k][k] * q[k][i] * q[k][j] for k in range(i)), Fraction(0))
            ) / q[i][i]
    return q


def _max_int_le_sqrt(s: Fraction, t: Fraction) -> int:
    """Largest integer z with z + s <= sqrt(t) (t >= 0), exactly."""

    def ok(z: int) -> bool:
        u = z + s
        return u <= 0 or u * u <= t

    z = math.floor(-float(s) + math.sqrt(float(t)))
    while ok(z + 1):
        z += 1
    while not ok(z):
        z -= 1
    return z


def _coeff_range(s: Fraction, t: Fraction) -> range:
    """Integers x with q-form constraint (x + s)^2 <= t, i.e.
    -s - sqrt(t) <= x <= -s + sqrt(t)."""
    hi = _max_int_le_sqrt(s, t)
    lo = -_max_int_le_sqrt(-s, t)
    return range(lo, hi + 1)


def enumerate_up_to(req: EnumerationRequest) -> GeneratingSet:
    """All nonzero lattice vectors v with norm_sq(v) <= bound_sq.

    Output is closed under negation and canonically sorted (squared norm,
    then lexicographic); raises EnumerationCapExceeded rather than ever
    returning a truncated, silently incomplete set.
    """
    basis = req.basis
    n = basis.rank
    q = _rational_cholesky(basis.gram)
    coeffs = [0] * n
    out: list[Vector] = []

    def recurse(i: int, budget: Fraction) -> None:
        # budget = bound_sq - contribution of levels > i
        s = sum((q[i][j] * coeffs[j] for j in range(i + 1, n)), Fraction(0))
        for x in _coeff_range(s, budget / q[i][i]):
            coeffs[i] = x
            if i == 0:
                if any(coeffs):
                    if len(out) >= req.cap:
                        raise EnumerationCapExceeded(req.cap)
                    w = tuple(
                        sum((coeffs[k] * basis.vectors[k][j]
                             for k in range(n)), Fraction(0))
                        for j in range(basis.dim)
                    )
                    out.append(w)
            else:
                used = q[i][i] * (x + s) ** 2
                recurse(i - 1, budget - used)
        coeffs[i] = 0

    recurse(n - 1, req.bound_sq)
    out.sort(key=norm_order_key)
    return GeneratingSet(tuple(out), req.bound_sq, complete=True)


def box_oracle(req: EnumerationRequest) -> GeneratingSet:
    """Exhaustive coefficient-box scan; independent check of the enumerator.

    Coefficient bounds come from the inverse Gram diagonal:
    x_i^2 <= bound_sq * (G^-1)_ii by Cauchy-Schwarz.
    """
    basis = req.basis
    n = basis.rank
    if n > 5:
        raise ValueError("dimension too large for the box oracle")
    inv_diag = _gram_inverse_diagonal(basis.gram)
    limits = [math.isqrt(math.floor(req.bound_sq * inv_diag[i]))
              for i in range(n)]
    out: list[Vector] = []
    for coeffs in itertools.product(*(range(-l, l + 1) for l in limits)):
        if not any(coeffs):
            continue
        v = tuple(
            sum((coeffs[k] * basis.vectors[k][j] for k in range(n)),
                Fraction(0))
            for j in range(basis.dim)
        )
        if norm_sq(v) <= req.bound_sq:
            if len(out) >= req.cap:
                raise EnumerationCapExceeded(req.cap)
            out.append(v)
    out.sort(key=norm_order_key)
    return GeneratingSet(tuple(out), req.bound_sq, complete=True)


def _gram_inverse_diagonal(gram) -> list[Fraction]:
    n = len(gram)
    aug = [list(map(Fraction, gram[i])) +
           [Fraction(1 if j == i else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [aug[i][n + i] for i in range(n)]


def first_minimum_sq(basis: LatticeBasis,
                     params: ReductionParams = DEFAULT_PARAMS,
                     cap: int = DEFAULT_CAP) -> Fraction:
    """Squared first minimum lambda_1^2 of the lattice.

    Reduces the basis, then enumerates up to the shortest reduced basis
    vector; that ball is guaranteed to contain a shortest lattice vector.
    """
    if basis.rank < 1:
        raise ValueError("lattice of rank zero has no first minimum")
    reduced = mlll(basis.vectors, params)
    bound = min(norm_sq(v) for v in reduced.vectors)
    found = enumerate_up_to(EnumerationRequest(reduced, bound, cap))
    return min(norm_sq(v) for v in found.vectors)
