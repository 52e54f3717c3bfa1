"""The full circle of constructions and its report."""

import random

import pytest

from conftest import random_poly
from fano12 import gallery, netquad
from fano12.circle import (CircleReport, StageError, circle, proportional,
                           substitute_linear)
from fano12.fields import QQ
from fano12.rings import PLANE_S
from fano12.textio import parse_poly


def test_proportional_detects_scalar():
    f = parse_poly("2*x0^4 + 6*x1^4", PLANE_S, QQ)
    g = parse_poly("x0^4 + 3*x1^4", PLANE_S, QQ)
    assert proportional(f, g) == 2
    h = parse_poly("x0^4 + x1^4", PLANE_S, QQ)
    assert proportional(f, h) is None
    assert proportional(f, parse_poly("x0^4", PLANE_S, QQ)) is None


def test_substitute_linear_permutation():
    f = parse_poly("x0^3*x1 + x1^3*x2 + x2^3*x0", PLANE_S, QQ)
    one = QQ.from_int(1)
    cycle = [[0, one, 0], [0, 0, one], [one, 0, 0]]  # x0->x1->x2->x0
    assert substitute_linear(f, cycle) == f


def test_klein_circle_passes():
    report = circle(gallery.klein_net())
    assert report.passed
    assert report.pfaffian_hf == (1, 3, 6, 3, 1)
    assert proportional(report.f_q, gallery.klein_quartic()) is not None
    assert report.scalar_covariant_vs_disc == -16
    assert report.scalar_f_vs_disc == -16
    assert report.scalar_covariant_vs_f == 1


def test_klein_circle_is_deterministic():
    a = circle(gallery.klein_net()).serialize()
    b = circle(gallery.klein_net()).serialize()
    assert a == b
    assert "verdict pass" in a


def test_degenerate_net_fails_at_named_stage():
    from fano12.rings import SPACE_T
    net = netquad.NetOfQuadrics([parse_poly(s, SPACE_T, QQ)
                                 for s in ("z0^2", "z1^2", "z2^2")])
    with pytest.raises(StageError) as exc:
        circle(net)
    assert exc.value.stage == "q_perp"


def test_random_net_covariant_matches_discriminant():
    rng = random.Random(7)
    from fano12.rings import SPACE_T
    while True:
        try:
            net = netquad.NetOfQuadrics([random_poly(SPACE_T, 2, rng, -3, 3)
                                         for _ in range(3)])
            report = circle(net)
            break
        except (netquad.DegenerateNetError, StageError):
            continue
    assert report.scalar_covariant_vs_disc is not None
    assert report.scalar_covariant_vs_disc != 0
