"""Field arithmetic over Q(sqrt 3): exactness, canonical forms, membership."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from okubo_e8.exact import (
    ComplexQuad,
    QuadExt,
    RingTag,
    denominator_factorization,
    galois_and_trace,
    parse_quadext,
    quad_denominator,
    render_quadext,
    ring_membership,
    two_adic_denominator,
)

S3 = QuadExt.sqrt3()


def q(a, b=0):
    return QuadExt(Fraction(a), Fraction(b))


rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=16
)
quads = st.builds(QuadExt, rationals, rationals)


class TestFieldOps:
    def test_difference_of_squares(self):
        assert (q(1, 1)) * (q(1, -1)) == q(-2)

    def test_sqrt3_squares_to_three(self):
        assert S3 * S3 == q(3)

    def test_exact_division(self):
        assert q(0, Fraction(3, 2)) / S3 == q(Fraction(3, 2))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            q(1) / q(0)

    def test_pow(self):
        assert (q(1, 1)) ** 3 == q(1, 1) * q(1, 1) * q(1, 1)
        assert (q(1, 1)) ** -1 == q(1, 1).inverse()

    @settings(derandomize=True, max_examples=80)
    @given(quads, quads, quads)
    def test_field_axioms(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x
        if not x.is_zero():
            assert x * x.inverse() == QuadExt(1)

    @settings(derandomize=True, max_examples=60)
    @given(quads, quads)
    def test_galois_is_multiplicative(self, x, y):
        assert (x * y).galois_conjugate() == x.galois_conjugate() * y.galois_conjugate()


class TestGaloisTrace:
    def test_examples(self):
        assert galois_and_trace(q(1, 2)) == (q(1, -2), Fraction(2))
        assert galois_and_trace(S3) == (-S3, Fraction(0))
        assert galois_and_trace(q(5)) == (q(5), Fraction(10))

    @settings(derandomize=True, max_examples=60)
    @given(quads)
    def test_trace_of_norm_product(self, x):
        prod = x * x.galois_conjugate()
        assert prod.irr == 0
        assert prod.rat == x.field_norm()


class TestSigns:
    def test_positive_mixed(self):
        assert q(2, -1).sign_real() == 1  # 2 - sqrt(3) > 0
        assert q(1, -1).sign_real() == -1  # 1 - sqrt(3) < 0
        assert q(1, -1).sign_real(conjugate_embedding=True) == 1
        assert q(0).sign_real() == 0

    def test_negative_mixed(self):
        assert q(-2, 1).sign_real() == -1
        assert q(-1, 1).sign_real() == 1


class TestRingMembership:
    def test_examples(self):
        assert not ring_membership(q(0, Fraction(-3, 2)), RingTag.ZSQRT3)
        assert ring_membership(q(5, -7), RingTag.ZSQRT3)
        assert not ring_membership(q(Fraction(1, 2)), RingTag.Z)
        assert ring_membership(q(3), RingTag.Z)
        assert ring_membership(q(Fraction(1, 3)), RingTag.Q)
        assert not ring_membership(q(0, 1), RingTag.Q)
        assert ring_membership(q(Fraction(1, 7), Fraction(2, 9)), RingTag.K)


class TestDenominators:
    def test_factorization(self):
        assert denominator_factorization(Fraction(5, 12)) == {2: 2, 3: 1}
        assert denominator_factorization(Fraction(3)) == {}

    def test_two_adic(self):
        assert two_adic_denominator(Fraction(1, 8)) == 3
        assert two_adic_denominator(Fraction(1, 6)) == 1
        assert two_adic_denominator(Fraction(7)) == 0

    def test_quad_denominator(self):
        assert quad_denominator(QuadExt(Fraction(1, 2), Fraction(1, 4))) == 4
        assert quad_denominator(QuadExt(1, 1)) == 1


class TestTextForm:
    def test_render(self):
        assert render_quadext(q(Fraction(-3, 2), 1)) == "-3/2 + 1/1*s3"

    def test_round_trip_examples(self):
        for val in (q(0), q(Fraction(22, 7), Fraction(-5, 4)), -S3):
            assert parse_quadext(render_quadext(val)) == val

    @settings(derandomize=True, max_examples=60)
    @given(quads)
    def test_round_trip(self, x):
        assert parse_quadext(render_quadext(x)) == x

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_quadext("1 + 2*s3")
        with pytest.raises(ValueError):
            parse_quadext("1/0 + 2/1*s3")


class TestComplexQuad:
    def test_conjugation_involutive_automorphism(self):
        x = ComplexQuad(q(1, 1), q(Fraction(1, 2)))
        y = ComplexQuad(q(0, -1), q(2, 1))
        assert x.conjugate().conjugate() == x
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()
        fixed = ComplexQuad(q(3, -2))
        assert fixed.conjugate() == fixed

    def test_norm_nonnegative_both_embeddings(self):
        x = ComplexQuad(q(1, -1), q(0, Fraction(1, 2)))
        nrm = x.norm()
        assert nrm.sign_real() >= 0
        assert nrm.sign_real(conjugate_embedding=True) >= 0

    def test_norm_multiplicative(self):
        x = ComplexQuad(q(1, 1), q(2))
        y = ComplexQuad(q(0, 2), q(-1, 1))
        assert (x * y).norm() == x.norm() * y.norm()
