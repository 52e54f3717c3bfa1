"""Apolarity: perpendicular ideals, Hilbert functions, catalecticants,
dual socle generators."""

import random

import pytest

from conftest import general_lines, random_poly
from fano12 import apolar, gallery
from fano12.circle import proportional
from fano12.fields import QQ
from fano12.rings import PLANE_S, apply, dual_ring


def test_hilbert_function_klein():
    assert apolar.hilbert_function(gallery.klein_quartic()) == (1, 3, 6, 3, 1)


def test_hilbert_function_monomials():
    from fano12.textio import parse_poly
    assert apolar.hilbert_function(
        parse_poly("x0^4", PLANE_S, QQ)) == (1, 1, 1, 1, 1)
    assert apolar.hilbert_function(
        parse_poly("x0^4 + x1^4", PLANE_S, QQ)) == (1, 2, 2, 2, 1)


def test_catalecticant_ranks():
    assert apolar.catalecticant_rank(gallery.klein_quartic()) == 6
    rng = random.Random(2)
    for s in (1, 2, 3):
        lines = general_lines(s, rng)
        f = lines[0] * lines[0] * lines[0] * lines[0]
        for l in lines[1:]:
            f = f + l * l * l * l
        assert apolar.catalecticant_rank(f) == s


def test_perp_annihilates():
    rng = random.Random(3)
    f = random_poly(PLANE_S, 4, rng)
    for d in range(5):
        for row in apolar.perp(f, d):
            from fano12.rings import MultiPoly
            D = MultiPoly.from_vector(dual_ring(PLANE_S), QQ, d, row)
            assert apply(D, f).is_zero()


def test_dual_socle_roundtrip():
    rng = random.Random(4)
    for f in (gallery.klein_quartic(), random_poly(PLANE_S, 4, rng)):
        ideal = apolar.perp_ideal(f, cap=5)
        g = apolar.dual_socle(ideal, socle_degree=4)
        assert proportional(g, f) is not None


def test_dual_socle_rejects_wide_annihilator():
    from fano12.rings import MultiPoly
    d0 = MultiPoly.variable(dual_ring(PLANE_S), QQ, 0)
    ideal = apolar.GradedIdeal.from_generators([d0], cap=5)
    with pytest.raises(ValueError):
        apolar.dual_socle(ideal, socle_degree=4)


def test_colon_perp_check_random():
    rng = random.Random(5)
    for _ in range(10):
        f = random_poly(PLANE_S, 4, rng)
        D = random_poly(dual_ring(PLANE_S), 1, rng)
        assert apolar.colon_perp_check(f, D)
