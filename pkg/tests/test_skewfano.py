"""Alternating nets on the 7-space of net quadrics: pfaffians, isotropic
spaces, twisted cubics, and lines."""

import random

import pytest

from fano12 import gallery, linalg, skewfano
from fano12.census import line_members, reduce_mod, sample_lines, enumerate_points
from fano12.circle import proportional
from fano12.fields import QQ
from fano12.rings import MultiPoly, PLANE_T
from fano12.textio import print_poly


def _random_skew(n, rng):
    m = [[QQ.from_int(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            c = QQ.from_int(rng.randint(-9, 9))
            m[i][j] = c
            m[j][i] = QQ.normalize(-c)
    return m


def test_pfaffian_squares_to_determinant():
    rng = random.Random(10)
    for n in (2, 4, 6):
        for _ in range(10):
            m = _random_skew(n, rng)
            pf = skewfano.pfaffian(m)
            assert QQ.normalize(pf * pf - linalg.det(m, QQ)) == 0


def test_pfaffian_rejects_non_skew():
    with pytest.raises(ValueError):
        skewfano.pfaffian([[QQ.from_int(1), QQ.from_int(0)],
                           [QQ.from_int(0), QQ.from_int(1)]])


def test_klein_eta_is_integral_and_skew(klein_pipeline):
    _, _, eta = klein_pipeline
    for m in eta.forms:
        for i in range(7):
            for j in range(7):
                assert m[i][j] in (-1, 0, 1)
                assert QQ.normalize(m[i][j] + m[j][i]) == 0


def test_klein_pfaffian_quartic(klein_pipeline):
    _, _, eta = klein_pipeline
    f = skewfano.pfaffian_quartic(eta)
    assert print_poly(f) == "x0^3*x1 + x1^3*x2 + x0*x2^3"
    assert proportional(f, gallery.klein_quartic()) is not None


def test_klein_pfaffian_ideal_hilbert_function(klein_pipeline):
    _, _, eta = klein_pipeline
    from fano12 import apolar
    from fano12.rings import dim_degree
    cubics = [c for c in skewfano.pfaffian_ideal(eta) if not c.is_zero()]
    ideal = apolar.GradedIdeal.from_generators(cubics, cap=5)
    hf = tuple(dim_degree(3, d) - ideal.dim_piece(d) for d in range(5))
    assert hf == (1, 3, 6, 3, 1)


def test_isotropic_points_and_twisted_cubics(klein_f11):
    eta11, points = klein_f11
    from fano12.rings import dim_degree
    for E in points[:25]:
        assert skewfano.isotropic(eta11, E)
        tau2, ideal = skewfano.twisted_cubic(eta11, E)
        assert len(tau2) == 2 and len(tau2[0]) == 3
        hf = tuple(dim_degree(4, d) - ideal.dim_piece(d) for d in range(5))
        assert hf == (1, 4, 7, 10, 13)


def test_non_isotropic_space_rejected(klein_f11):
    eta11, points = klein_f11
    canon = set(points)
    fp = eta11.field
    one, zero = 1, 0
    E = skewfano.SubspaceE.from_rows(
        [[one, zero, zero, zero, zero, zero, zero],
         [zero, one, zero, zero, zero, zero, zero],
         [zero, zero, one, zero, zero, zero, zero]], fp)
    assert E not in canon
    assert not skewfano.isotropic(eta11, E)


def test_line_detection_and_marked_points(klein_f11):
    eta11, points = klein_f11
    lines, _, _ = sample_lines(eta11, points, pair_budget=3000, seed=1)
    assert lines
    fp = eta11.field
    for line in lines:
        assert line.common_factor_r.degree == 1
        members = line_members(line, eta11)
        assert len(members) == fp.char + 1
        assert all(m in set(points) for m in members)
