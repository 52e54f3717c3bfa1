"""Waring decompositions, the classification by Hilbert function, and
polar hexagons from isotropic 3-spaces."""

import random

import pytest

from conftest import general_lines, random_line
from fano12 import apolar, gallery, waring
from fano12.census import reduce_mod
from fano12.circle import proportional
from fano12.fields import QQ
from fano12.rings import PLANE_S
from fano12.textio import parse_poly


def test_classification_klein():
    hf, degs, row = waring.classify(gallery.klein_quartic())
    assert hf == (1, 3, 6, 3, 1)
    assert degs == (3, 3, 3, 3, 3, 3, 3)
    assert waring.CLASSIFICATION_TABLE[row] == (hf, degs)


def test_classification_monomial_rows():
    cases = {
        "x0^4": ((1, 1, 1, 1, 1), (1, 1, 5)),
        "x0^4 + x1^4": ((1, 2, 2, 2, 1), (1, 2, 4)),
        "x0^3*x1": ((1, 2, 2, 2, 1), (1, 2, 4)),
    }
    for text, expected in cases.items():
        f = parse_poly(text, PLANE_S, QQ)
        hf, degs, row = waring.classify(f)
        assert (hf, degs) == expected
        assert row is not None


def test_rank_lower_bound_matches_catalecticant():
    rng = random.Random(11)
    for s in (1, 2, 3, 4, 5, 6):
        lines = general_lines(s, rng)
        f = None
        for l in lines:
            p = l * l * l * l
            f = p if f is None else f + p
        assert waring.rank_lower(f) == s


def test_solve_weights_unique_and_roundtrip():
    f = parse_poly("x0^4 + 16*x1^4", PLANE_S, QQ)
    l0 = parse_poly("x0", PLANE_S, QQ)
    l1 = parse_poly("2*x1", PLANE_S, QQ)
    sol = waring.solve_weights(f, [l0, l1])
    assert sol.status == "unique"
    assert sol.weights == [1, 1]


def test_solve_weights_infeasible():
    f = gallery.klein_quartic()
    l0 = parse_poly("x0", PLANE_S, QQ)
    l1 = parse_poly("x1", PLANE_S, QQ)
    sol = waring.solve_weights(f, [l0, l1])
    assert sol.status == "none"


def test_solve_weights_rejects_proportional_lines():
    f = parse_poly("x0^4", PLANE_S, QQ)
    l0 = parse_poly("x0", PLANE_S, QQ)
    l1 = parse_poly("2*x0", PLANE_S, QQ)
    with pytest.raises(ValueError):
        waring.solve_weights(f, [l0, l1])


def test_double_line_family_double_lines():
    for t in (1, 2, 3):
        f = waring.double_line_family(t)
        assert apolar.catalecticant_rank(f) == 5
        line = waring.double_line_check(f)
        assert line is not None and line.degree == 1
        from fano12.rings import MultiPoly, PLANE_T
        piece = apolar.perp(f, 2)
        quadric = MultiPoly.from_vector(PLANE_T, QQ, 2, piece[0])
        assert proportional(quadric, line * line) is not None


def test_hexagons_from_isotropic_spaces(klein_f11):
    eta11, points = klein_f11
    f11 = reduce_mod(gallery.klein_quartic(), 11)
    for E in points[:10]:
        psi = waring.block_psi(eta11, E)
        hexagon = waring.hexagon_from_block(psi)
        assert waring.is_apolar(hexagon.ideal, f11)


def test_hexagon_degeneration_detected():
    from fano12.rings import MultiPoly, PLANE_T
    zero = MultiPoly.zero(PLANE_T, QQ, 1)
    psi = [[zero] * 3 for _ in range(4)]
    with pytest.raises(waring.HexagonDegenerationError):
        waring.hexagon_from_block(psi)
