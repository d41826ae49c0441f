"""Backend parity: the compiled kernels must agree exactly with the
pure-Python reference on identical inputs."""

import random
from fractions import Fraction

import pytest

from okubo_e8._kernels import (
    BACKEND,
    NotPositiveDefinite,
    _pykernels,
    enumerate_short_vectors,
    prepare_enumeration,
)

try:
    from okubo_e8 import _ckernels
except ImportError:
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="no compiled kernels")


def random_posdef_gram(rng, n):
    # B B^T + I is positive definite
    b = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
    g = [[sum(b[i][k] * b[j][k] for k in range(n)) + (i == j) for j in range(n)]
         for i in range(n)]
    return g


class TestPrepare:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            prepare_enumeration([[1, 2], [0, 1]], 4)

    def test_rejects_indefinite(self):
        with pytest.raises(NotPositiveDefinite):
            prepare_enumeration([[0, 1], [1, 0]], 4)

    def test_rank_one(self):
        plan = prepare_enumeration([[3]], 12)
        vecs = enumerate_short_vectors(plan)
        assert vecs == [(-2,), (-1,), (1,), (2,)]

    def test_negative_bound(self):
        plan = prepare_enumeration([[2]], -1)
        assert enumerate_short_vectors(plan) == []

    def test_rational_bound(self):
        plan = prepare_enumeration([[2]], Fraction(7, 2))  # x^2 <= 7/4
        assert enumerate_short_vectors(plan) == [(-1,), (1,)]


@needs_ext
class TestParity:
    def test_enumeration(self):
        rng = random.Random(1)
        for _ in range(6):
            n = rng.randint(1, 5)
            g = random_posdef_gram(rng, n)
            plan = prepare_enumeration(g, rng.randint(1, 12))
            res_py = sorted(
                _pykernels.enum_core(
                    plan.n, plan.weights, plan.pivots, plan.offsets,
                    plan.bound_scaled,
                )
            )
            res_c = sorted(
                _ckernels.enum_core(
                    plan.n, list(plan.weights), list(plan.pivots),
                    [list(r) for r in plan.offsets], plan.bound_scaled,
                )
            )
            assert res_py == res_c

    def test_metric_filter(self):
        from okubo_e8.stabilizer import conductor_gram

        g = [list(r) for r in conductor_gram()]
        assert sorted(_ckernels.metric_filter(g)) == sorted(
            _pykernels.metric_filter(g)
        )

    def test_closure(self):
        from okubo_e8.algebras import OCT_TABLE
        from okubo_e8.orders import units240

        els, _ = units240()
        vecs2 = sorted(tuple(int(2 * c.rat) for c in e.coords) for e in els)
        assert _ckernels.closure_check(
            vecs2, OCT_TABLE.idx, OCT_TABLE.sgn
        ) == _pykernels.closure_check(vecs2, OCT_TABLE.idx, OCT_TABLE.sgn)


class TestFallback:
    def test_big_bound_uses_python_path(self):
        # a bound far beyond 62 bits must still work (big-int fallback)
        plan = prepare_enumeration([[1 << 40]], (1 << 80))
        assert not plan.fits64
        vecs = enumerate_short_vectors(plan)
        assert (-(1 << 20), ) in vecs and ((1 << 20), ) in vecs

    def test_backend_name(self):
        assert BACKEND in ("python", "cython")
