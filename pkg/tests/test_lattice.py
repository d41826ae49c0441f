"""Lattice machinery: normal forms, invariants, enumeration, discriminant
groups, gluing, saturation.  Independent oracles: naive box-search
enumeration, sympy normal forms, determinant/gcd identities."""

import random
from fractions import Fraction
from math import isqrt

import pytest

from okubo_e8 import claims
from okubo_e8.lattice import (
    GluingError,
    InclusionError,
    LatticeZ,
    NotPositiveDefinite,
    contains,
    discriminant_group,
    glue_and_saturate,
    glue_isotropic,
    hnf_snf,
    hnf_with_transform,
    lattice_from_fixture,
    lattice_to_fixture,
    lattices_equal,
    ldl_pivots,
    mat_det,
    mat_inv,
    mat_mul,
    minimum_and_kissing,
    quotient_group,
    saturation,
    shell_counts_vs_sigma3,
    short_vectors,
    sigma3,
    smith_invariants,
    sublattice_invariants,
    trace_lattice_16,
)
from okubo_e8.orders import cd_lattice, conductor_lattice, u_gram_quadext

A2 = [[2, -1], [-1, 2]]
D4 = [[2, 0, 0, 1], [0, 2, 1, 0], [0, 1, 2, 1], [1, 0, 1, 2]]  # det 4


def box_search(gram, bound):
    """Independent brute-force enumeration from dual diagonal bounds."""
    n = len(gram)
    ginv = mat_inv([[Fraction(v) for v in row] for row in gram])
    limits = []
    for i in range(n):
        # x_i^2 <= bound * (G^-1)_ii
        val = Fraction(bound) * ginv[i][i]
        limits.append(isqrt(val.numerator // val.denominator) + 1)
    out = []
    def norm_of(vec):
        return sum(
            vec[i] * gram[i][j] * vec[j] for i in range(n) for j in range(n)
        )
    def rec(i, vec):
        if i == n:
            if any(vec) and norm_of(vec) <= bound:
                out.append((tuple(vec), Fraction(norm_of(vec))))
            return
        for v in range(-limits[i], limits[i] + 1):
            rec(i + 1, vec + [v])
    rec(0, [])
    return sorted(out)


class TestNormalForms:
    def test_examples(self):
        assert hnf_snf([[2, 1], [0, 3]]).smith == (1, 6)
        diag = [[2 if i == j and i < 4 else (4 if i == j else 0) for j in range(8)]
                for i in range(8)]
        assert hnf_snf(diag).smith == (2, 2, 2, 2, 4, 4, 4, 4)
        ident = [[int(i == j) for j in range(8)] for i in range(8)]
        assert hnf_snf(ident).smith == (1,) * 8

    def test_gcd_det_oracle(self):
        # smith (1, 6): first invariant is the gcd of entries, product is |det|
        m = [[2, 1], [0, 3]]
        nf = hnf_snf(m)
        assert nf.smith[0] == 1  # gcd(2, 1, 0, 3)
        assert nf.smith[0] * nf.smith[1] == 6  # |det|

    def test_reconstruction(self):
        rng = random.Random(4)
        for _ in range(12):
            n = rng.randint(1, 4)
            m = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            nf = hnf_snf(m)
            s = [[nf.smith[i] if i == j else 0 for j in range(n)] for i in range(n)]
            recon = mat_mul(mat_mul([list(r) for r in nf.left], s),
                            [list(r) for r in nf.right])
            assert [[int(v) for v in row] for row in recon] == m
            h, t = hnf_with_transform(m)
            assert abs(mat_det([list(r) for r in t])) == 1
            assert [[int(v) for v in row]
                    for row in mat_mul([list(r) for r in t], m)] == h
            # divisibility chain
            for a, b in zip(nf.smith, nf.smith[1:]):
                if a and b:
                    assert b % a == 0

    def test_sympy_oracle(self):
        sympy = pytest.importorskip("sympy")
        from sympy.matrices.normalforms import smith_normal_form

        rng = random.Random(9)
        for _ in range(8):
            n = rng.randint(2, 4)
            m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            ours = [v for v in smith_invariants(m) if v != 0]
            theirs = smith_normal_form(sympy.Matrix(m))
            ref = sorted(abs(theirs[i, i]) for i in range(min(theirs.shape))
                         if theirs[i, i] != 0)
            assert sorted(ours) == ref


class TestSublattice:
    def test_conductor_in_e8(self):
        inv = sublattice_invariants(conductor_lattice(), cd_lattice())
        assert inv.index == claims.CONDUCTOR_INDEX
        assert inv.det_sub == claims.CONDUCTOR_DET
        assert inv.det_sup == 1
        assert inv.smith == claims.CONDUCTOR_SMITH
        assert inv.inclusions == {
            "4sup_in_sub": True, "sub_in_2sup": True, "sub_in_sup": True,
        }

    def test_identity_inclusion(self):
        cd = cd_lattice()
        inv = sublattice_invariants(cd, cd)
        assert inv.index == 1
        assert inv.smith == (1,) * 8

    def test_doubling(self):
        cd = cd_lattice()
        inv = sublattice_invariants(cd.scaled(2), cd)
        assert inv.index == 256  # |det 2I| = 2^8
        assert inv.det_sub == 65536  # index^2 * det
        assert inv.smith == (2,) * 8

    def test_non_inclusion_witness(self):
        cd = cd_lattice()
        half = cd.scaled(Fraction(1, 2))
        with pytest.raises(InclusionError) as err:
            sublattice_invariants(half, cd)
        assert err.value.witness is not None

    def test_index_squared_law_random(self):
        rng = random.Random(12)
        cd = cd_lattice()
        for _ in range(4):
            rows = [[rng.randint(0, 2) + (2 if i == j else 0) for j in range(8)]
                    for i in range(8)]
            sub = LatticeZ.from_rows(rows, cd.ambient_gram, "random-sub")
            if mat_det([list(r) for r in sub.basis]) == 0:
                continue
            inv = sublattice_invariants(sub, cd)
            assert inv.det_sub == inv.index ** 2 * inv.det_sup


class TestShortVectors:
    def test_e8_roots(self):
        assert len(short_vectors(cd_lattice(), 2)) == 240

    def test_box_oracle_a2(self):
        lat = LatticeZ.from_gram(A2)
        for bound in (2, 4, 6, 8):
            assert short_vectors(lat, bound) == box_search(A2, bound)

    def test_box_oracle_d4(self):
        lat = LatticeZ.from_gram(D4)
        assert short_vectors(lat, 4) == box_search(D4, 4)

    def test_box_oracle_e8_small(self):
        gram = [list(r) for r in cd_lattice().gram()]
        gi = [[int(v) for v in row] for row in gram]
        assert short_vectors(cd_lattice(), 2) == box_search(gi, 2)

    def test_conductor_minimum(self):
        cond = conductor_lattice()
        assert short_vectors(cond, 7) == []
        at8 = short_vectors(cond, 8)
        assert any(coords == (1, 0, 0, 0, 0, 0, 0, 0) for coords, _ in at8)
        mn, kiss = minimum_and_kissing(cond, 8)
        assert mn == 8
        assert kiss == len(at8)

    def test_indefinite_rejected(self):
        with pytest.raises(NotPositiveDefinite):
            short_vectors(LatticeZ.from_gram([[1, 0], [0, -1]]), 3)

    def test_rational_gram(self):
        lat = LatticeZ.from_gram([[Fraction(1, 2), 0], [0, Fraction(1, 2)]])
        vecs = short_vectors(lat, 1)
        assert len(vecs) == 8  # squares and diagonals of the scaled square grid
        assert all(nrm <= 1 for _, nrm in vecs)

    def test_empty_bound(self):
        assert short_vectors(cd_lattice(), 1) == []
        with pytest.raises(Exception):
            minimum_and_kissing(cd_lattice(), 1)


class TestShells:
    def test_sigma3(self):
        assert [sigma3(n) for n in range(1, 7)] == [1, 9, 28, 73, 126, 252]

    def test_counts_vs_formula(self):
        shells = shell_counts_vs_sigma3(cd_lattice(), 4)
        assert [(s.n, s.count) for s in shells] == [
            (1, 240), (2, 2160), (3, 6720), (4, 17520),
        ]
        assert all(s.match for s in shells)
        assert [s.formula for s in shells] == list(claims.SHELL_VALUES[:4])

    def test_counts_even(self):
        # +-x pairing makes every nonzero shell even
        shells = shell_counts_vs_sigma3(cd_lattice(), 4)
        assert all(s.count % 2 == 0 for s in shells)

    def test_guard(self):
        with pytest.raises(ValueError):
            shell_counts_vs_sigma3(cd_lattice(), 7)


class TestDiscriminantGroup:
    def test_e8_trivial(self):
        assert discriminant_group(cd_lattice()).invariants == ()

    def test_conductor_group(self):
        group = discriminant_group(conductor_lattice())
        assert group.invariants == claims.DISCRIMINANT_INVARIANTS
        assert group.order == claims.DISCRIMINANT_ORDER

    def test_conductor_group_sympy_oracle(self):
        sympy = pytest.importorskip("sympy")
        from sympy.matrices.normalforms import smith_normal_form

        gram = [[int(v) for v in row] for row in conductor_lattice().gram()]
        s = smith_normal_form(sympy.Matrix(gram))
        diag = sorted(abs(s[i, i]) for i in range(8))
        assert tuple(d for d in diag if d > 1) == claims.DISCRIMINANT_INVARIANTS

    def test_q_well_defined(self):
        group = discriminant_group(conductor_lattice())
        gram = conductor_lattice().gram()
        # two lifts of the same class differ by a lattice vector; q agrees
        coeffs = [1] + [0] * (len(group.invariants) - 1)
        base = group.q_value(coeffs)
        shifted = list(group.generators_dual[0])
        # add a lattice row (in dual coordinates the lattice is spanned by
        # the Gram rows)
        for j in range(len(shifted)):
            shifted[j] += int(gram[0][j])
        val = Fraction(0)
        dual = group.dual_gram
        for i, vi in enumerate(shifted):
            for j, vj in enumerate(shifted):
                if vi and vj:
                    val += vi * dual[i][j] * vj
        assert val % 2 == base

    def test_q_polarization(self):
        group = discriminant_group(conductor_lattice())
        n = len(group.invariants)
        a = [1] + [0] * (n - 1)
        b = [0, 1] + [0] * (n - 2)
        ab = [x + y for x, y in zip(a, b)]
        lhs = (group.q_value(ab) - group.q_value(a) - group.q_value(b)) % 2
        rhs = (2 * group.pairing(a, b)) % 2
        assert lhs == rhs


class TestGlueSaturate:
    def test_full_report(self):
        rep = glue_and_saturate(conductor_lattice(), cd_lattice(), 2)
        assert rep.saturation_equals_sup
        assert rep.quotient_invariants == claims.QUOTIENT_INVARIANTS
        assert rep.quotient_order == claims.CONDUCTOR_INDEX
        assert rep.q_values_all_zero
        assert rep.isotropy_witness is None
        assert rep.maximal_isotropic
        assert rep.glued_even and rep.glued_unimodular
        assert rep.glued_equals_sup

    def test_quotient_group(self):
        q = quotient_group(conductor_lattice(), cd_lattice())
        assert q.invariants == claims.QUOTIENT_INVARIANTS
        assert q.order == 4096

    def test_saturation_idempotent_and_monotone(self):
        cond, cd = conductor_lattice(), cd_lattice()
        sat = saturation(cond, cd, 2)
        assert contains(sat, cond)  # monotone: L subset of Sat(L)
        sat2 = saturation(sat, cd, 2)
        assert lattices_equal(sat, sat2)

    def test_saturation_other_prime(self):
        cond, cd = conductor_lattice(), cd_lattice()
        assert lattices_equal(saturation(cond, cd, 3), cond)

    def test_glue_isotropic_error(self):
        # odd rank-1 lattice: q of the glue class is 1, not 0
        amb = [[Fraction(1)]]
        sub = LatticeZ.from_rows([[2]], amb, "2Z-odd")
        with pytest.raises(GluingError) as err:
            glue_isotropic(sub, [[Fraction(1)]])
        assert err.value.q_value == 1

    def test_glue_isotropic_even_case(self):
        amb = [[Fraction(2)]]
        sub = LatticeZ.from_rows([[2]], amb, "2Z-even")
        glued = glue_isotropic(sub, [[Fraction(1)]])
        assert lattices_equal(glued, LatticeZ.from_rows([[1]], amb))


class TestTrace16:
    def test_report(self):
        rep = trace_lattice_16(u_gram_quadext())
        assert rep.even
        assert rep.positive_definite
        assert rep.minimum == 16
        assert rep.minimum_count == 16
        assert rep.gram[0][0] == 16  # Tr<u0,u0> doubles the norm-8 entry

    def test_no_vectors_below_sixteen(self):
        rep = trace_lattice_16(u_gram_quadext())
        lat = LatticeZ.from_gram([list(r) for r in rep.gram])
        assert short_vectors(lat, 15) == []


class TestPivotsAndFixtures:
    def test_ldl_pivots(self):
        assert all(p > 0 for p in ldl_pivots(A2))
        assert any(p <= 0 for p in ldl_pivots([[1, 0], [0, -2]]))

    def test_det_equals_smith_product(self):
        for lat_ in (cd_lattice(), conductor_lattice(), LatticeZ.from_gram(D4)):
            gram = [[int(v) for v in row] for row in lat_.gram()]
            prod = 1
            for s in smith_invariants(gram):
                prod *= s
            assert lat_.det() == prod

    def test_fixture_round_trip(self):
        cond = conductor_lattice()
        text = lattice_to_fixture(cond)
        back = lattice_from_fixture(text)
        assert lattices_equal(back, cond)
        assert back.gram() == cond.gram()

    def test_fixture_tamper_detected(self):
        import json

        payload = json.loads(lattice_to_fixture(cd_lattice()))
        payload["gram"][0][0] = "4"
        with pytest.raises(Exception):
            lattice_from_fixture(json.dumps(payload))
