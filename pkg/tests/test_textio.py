"""Parsing and printing of polynomials."""

import random

import pytest

from conftest import random_poly
from fano12.fields import QQ, PrimeField
from fano12.rings import PLANE_S, PLANE_T, SPACE_R, SPACE_T
from fano12.textio import PolyParseError, parse_poly, print_poly


def test_parse_klein_quartic():
    f = parse_poly("x0^3*x1 + x1^3*x2 + x2^3*x0", PLANE_S, QQ)
    assert f.degree == 4
    assert f.terms[(3, 1, 0)] == 1
    assert f.terms[(0, 3, 1)] == 1
    assert f.terms[(1, 0, 3)] == 1
    assert len(f.terms) == 3


def test_parse_fractions_and_signs():
    q = parse_poly("1/2*z1^2 - z0*z2", SPACE_T, QQ)
    assert q.terms[(0, 2, 0, 0)] == QQ.from_fraction(1, 2)
    assert q.terms[(1, 0, 1, 0)] == -1


def test_roundtrip_all_rings():
    rng = random.Random(0)
    for ring in (PLANE_S, PLANE_T, SPACE_R, SPACE_T):
        for degree in (1, 2, 3, 4):
            for _ in range(5):
                p = random_poly(ring, degree, rng)
                assert parse_poly(print_poly(p), ring, QQ) == p


def test_parse_over_prime_field():
    fp = PrimeField(7)
    f = parse_poly("1/2*x0^2 + 5*x1^2", PLANE_S, fp)
    assert f.terms[(2, 0, 0)] == fp.from_fraction(1, 2)
    assert f.terms[(0, 2, 0)] == 5


def test_homogeneity_error_reports_degrees():
    with pytest.raises(PolyParseError) as exc:
        parse_poly("x0 + x1^2", PLANE_S, QQ)
    assert "1" in str(exc.value) and "2" in str(exc.value)


def test_unknown_variable_position():
    with pytest.raises(PolyParseError) as exc:
        parse_poly("x0^3*y1", PLANE_S, QQ)
    assert exc.value.pos >= 5


def test_empty_and_garbage_inputs():
    for bad in ("", "+", "x0^", "3/", "x0**2", "x0^2 + "):
        with pytest.raises(PolyParseError):
            parse_poly(bad, PLANE_S, QQ)
