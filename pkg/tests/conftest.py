"""Shared helpers and fixtures for the test suite."""

import random

import pytest

from fano12 import gallery, netquad, resolve, skewfano
from fano12.census import enumerate_points, reduce_mod
from fano12.fields import QQ
from fano12.linalg import rank
from fano12.rings import MultiPoly, PLANE_S, linear_form, monomials


def random_poly(ring, degree, rng, lo=-5, hi=5):
    """A random nonzero homogeneous polynomial with small integer
    coefficients."""
    while True:
        terms = {}
        for m in monomials(ring.nvars, degree):
            c = rng.randint(lo, hi)
            if c:
                terms[m] = QQ.from_int(c)
        if terms:
            return MultiPoly(ring, QQ, degree, terms)


def random_line(rng, ring=PLANE_S, lo=-5, hi=5):
    while True:
        coeffs = [rng.randint(lo, hi) for _ in range(ring.nvars)]
        if any(coeffs):
            return linear_form(ring, QQ, [QQ.from_int(c) for c in coeffs])


def general_lines(s, rng):
    """s random lines whose squares are linearly independent (the
    condition under which the catalecticant of a sum of fourth powers
    attains rank s)."""
    while True:
        lines = [random_line(rng) for _ in range(s)]
        rows = [(l * l).vector() for l in lines]
        if rank(rows, QQ) == s:
            return lines


@pytest.fixture(scope="session")
def klein_pipeline():
    """The Klein net with its resolution and attached alternating net,
    computed once for the whole session."""
    net = gallery.klein_net()
    res = resolve.min_res(netquad.q_perp(net))
    eta = skewfano.eta_from_tor(net, res)
    eta = skewfano.attach_n_to_udual(eta, res, net)
    return net, res, eta


@pytest.fixture(scope="session")
def klein_f11(klein_pipeline):
    """The Klein alternating net reduced mod 11 with all its isotropic
    3-spaces."""
    _, _, eta = klein_pipeline
    eta11 = reduce_mod(eta, 11)
    return eta11, enumerate_points(eta11)
