"""Classical crystallographic integral sets at desk scale."""

import random

import pytest

from okubo_e8.algebras import basis_element, oct_mul
from okubo_e8.catalog import (
    UnspecifiedConstructionError,
    build_classical,
    catalog_names,
    order_lattice,
    verify_classical,
)
from okubo_e8.exact import QuadExt
from okubo_e8.orders import letters

EXPECTED_UNITS = {
    "gaussian": 4,
    "eisenstein": 6,
    "hamilton": 8,
    "hurwitz": 24,
    "cayley-graves": 16,
    "coxeter-dickson": 240,
}


@pytest.mark.parametrize("name", sorted(EXPECTED_UNITS))
def test_catalog_row(name):
    spec = build_classical(name)
    rep = verify_classical(spec)
    assert rep.unit_count == EXPECTED_UNITS[name]
    assert rep.passed, rep


def test_all_names_covered():
    assert set(catalog_names()) == set(EXPECTED_UNITS)


def test_hamilton_units_exactly_quaternion_group():
    lt = letters()
    spec = build_classical("hamilton")
    from okubo_e8.lattice import short_vectors
    from okubo_e8.algebras import AlgebraElem

    found = short_vectors(order_lattice(spec), 2)
    units = set()
    for coords, _ in found:
        acc = AlgebraElem.zero()
        for c, b in zip(coords, spec.basis):
            if c:
                acc = acc + b.scale(c)
        units.add(acc)
    expected = set()
    for el in (AlgebraElem.one(), lt["i"], lt["j"], lt["k"]):
        expected.add(el)
        expected.add(-el)
    assert units == expected


def test_eisenstein_norm_form():
    # n(a + b*omega) = a^2 - a b + b^2, by direct exact expansion
    spec = build_classical("eisenstein")
    one, omega = spec.basis
    rng = random.Random(3)
    for _ in range(20):
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        x = one.scale(a) + omega.scale(b)
        assert x.norm() == QuadExt(a * a - a * b + b * b)


def test_eisenstein_omega_cubes_to_one():
    omega = build_classical("eisenstein").basis[1]
    assert oct_mul(omega, oct_mul(omega, omega)) == basis_element(0)


def test_hurwitz_basis_closure_example():
    spec = build_classical("hurwitz")
    sigma = spec.basis[3]  # (1 + i + j + k)/2
    prod = oct_mul(spec.basis[1], sigma)  # i * sigma
    from okubo_e8.catalog import coords_in_span

    coords = coords_in_span(prod, spec)
    assert coords is not None
    assert all(c.irr == 0 and c.rat.denominator == 1 for c in coords)


def test_out_of_scope_rows():
    for name in ("hybrid", "compounded-eisenstein", "coupled-hurwitz"):
        with pytest.raises(UnspecifiedConstructionError):
            build_classical(name)


def test_unknown_name():
    with pytest.raises(ValueError, match="unknown classical order"):
        build_classical("lorentzian")
