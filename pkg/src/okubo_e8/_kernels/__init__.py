"""Integer work-horse kernels with a compiled fast path.

Three hot loops are isolated here so they can run either as pure Python
(arbitrary precision, always available) or through the compiled extension
``okubo_e8._ckernels`` (C integers, built at install time):

* branch-and-bound enumeration of short lattice vectors,
* the signed block-permutation metric filter,
* the pairwise closure check for unit loops.

The backend is selected once at import.  All kernel arithmetic is integer
arithmetic; the exact rational preprocessing (LDL data, denominator
clearing, overflow bounds) happens here in Python, and the compiled path is
used only when every intermediate provably fits in 62 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import _pykernels

try:  # compiled fast path, optional
    from .. import _ckernels

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    _ckernels = None
    BACKEND = "python"

_INT64_SAFE = 1 << 62


class NotPositiveDefinite(ValueError):
    """The quadratic form has a non-positive exact pivot."""


@dataclass(frozen=True)
class EnumPlan:
    """Denominator-cleared completed-squares data for one quadratic form.

    The form satisfies  S * x^T G x = sum_c W[c] * t_c^2  with
    t_c = B[c]*x_c + sum_r A[c][r-c-1]*x_r  (r > c), all integers.
    """

    n: int
    weights: tuple[int, ...]
    pivots: tuple[int, ...]
    offsets: tuple[tuple[int, ...], ...]
    scale: int
    bound_scaled: int
    fits64: bool


def prepare_enumeration(gram, bound) -> EnumPlan:
    """Exact LDL of an integer Gram matrix, cleared to integer data.

    ``gram`` is a symmetric positive definite matrix of ints (or Fractions
    with denominator 1); ``bound`` may be an int or Fraction.
    """
    n = len(gram)
    a = [[Fraction(gram[r][c]) for c in range(n)] for r in range(n)]
    for r in range(n):
        for c in range(n):
            if a[r][c] != a[c][r]:
                raise ValueError("Gram matrix is not symmetric")
    diag: list[Fraction] = []
    mu: list[list[Fraction]] = []
    for c in range(n):
        d = a[c][c]
        if d <= 0:
            raise NotPositiveDefinite(f"pivot {c} is {d}")
        row = [a[c][r] / d for r in range(c + 1, n)]
        diag.append(d)
        mu.append(row)
        for r in range(c + 1, n):
            f = row[r - c - 1]
            if f == 0:
                continue
            for s in range(c + 1, n):
                a[r][s] -= f * a[c][s]

    # clear denominators: t_c = b_c x_c + sum a_cr x_r, weight W_c
    pivots, offsets, scales = [], [], []
    for c in range(n):
        den = 1
        for f in mu[c]:
            den = den * f.denominator // _gcd(den, f.denominator)
        pivots.append(den)
        offsets.append(tuple(int(f * den) for f in mu[c]))
        scales.append(diag[c].denominator * den * den)
    total = 1
    for s in scales:
        total = total * s // _gcd(total, s)
    weights = [int(diag[c] * total) // (pivots[c] * pivots[c]) for c in range(n)]
    bound = Fraction(bound)
    bound_scaled = (bound.numerator * total) // bound.denominator

    fits64 = _bounds_fit(n, weights, pivots, offsets, bound_scaled)
    return EnumPlan(
        n=n,
        weights=tuple(weights),
        pivots=tuple(pivots),
        offsets=tuple(offsets),
        scale=total,
        bound_scaled=bound_scaled,
        fits64=fits64,
    )


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _bounds_fit(n, weights, pivots, offsets, sc) -> bool:
    if sc < 0:
        return True
    if sc >= _INT64_SAFE:
        return False
    max_x = [0] * n
    ok = True
    for c in range(n - 1, -1, -1):
        m = isqrt(sc // weights[c]) if weights[c] else 0
        off = sum(abs(a) * max_x[c + 1 + t] for t, a in enumerate(offsets[c]))
        if off + m >= _INT64_SAFE or weights[c] * (off + m) ** 2 >= _INT64_SAFE:
            ok = False
        max_x[c] = (m + off) // pivots[c] + 1
    return ok


def enumerate_short_vectors(plan: EnumPlan) -> list[tuple[int, ...]]:
    """All nonzero integer vectors with scaled norm <= plan.bound_scaled,
    both signs included, sorted lexicographically."""
    if plan.bound_scaled < 0:
        return []
    if _ckernels is not None and plan.fits64:
        res = _ckernels.enum_core(
            plan.n,
            list(plan.weights),
            list(plan.pivots),
            [list(r) for r in plan.offsets],
            plan.bound_scaled,
        )
    else:
        res = _pykernels.enum_core(
            plan.n, plan.weights, plan.pivots, plan.offsets, plan.bound_scaled
        )
    res.sort()
    return res


def metric_stabilizers(gram) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Signed block permutations (blocks {0..3}, {4..7}) preserving ``gram``.

    Returns (perm, signs) pairs, deterministically ordered; the candidate
    count is always 147456.
    """
    g = [[int(v) for v in row] for row in gram]
    if _ckernels is not None and all(abs(v) < 1 << 30 for row in g for v in row):
        return _ckernels.metric_filter(g)
    return _pykernels.metric_filter(g)


def unit_closure_failures(vecs2, idx, sgn) -> tuple[int, int]:
    """(membership failures, norm failures) over all pairwise products.

    ``vecs2``: doubled integer coordinate vectors of the unit set.
    """
    vecs2 = sorted(tuple(int(v) for v in vec) for vec in vecs2)
    if _ckernels is not None and all(abs(v) <= 8 for vec in vecs2 for v in vec):
        return _ckernels.closure_check(vecs2, idx, sgn)
    return _pykernels.closure_check(vecs2, idx, sgn)
