"""Minimal free resolutions and the self-duality of the middle
syzygies."""

import random

import pytest

from conftest import random_poly
from fano12 import apolar, gallery, linalg, netquad, resolve, skewfano
from fano12.census import reduce_mod
from fano12.fields import QQ, PrimeField
from fano12.rings import MultiPoly, PLANE_S


def test_klein_net_betti_table(klein_pipeline):
    _, res, _ = klein_pipeline
    assert tuple(res.betti_entries()) == resolve.NET_BETTI_SHAPE
    assert resolve.has_net_shape(res)


def test_klein_betti_table_over_f11():
    net11 = reduce_mod(gallery.klein_net(), 11)
    res = resolve.min_res(netquad.q_perp(net11))
    assert tuple(res.betti_entries()) == resolve.NET_BETTI_SHAPE


def test_hilbert_consistency(klein_pipeline):
    net, res, _ = klein_pipeline
    assert resolve.hilbert_consistency(res, netquad.q_perp(net))


def test_plane_quartic_gorenstein_shape():
    ideal = apolar.perp_ideal(gallery.klein_quartic(), cap=8)
    res = resolve.min_res(ideal, cap=8)
    assert tuple(res.betti_entries()) == ((0, 0, 1), (1, 3, 7),
                                          (2, 4, 7), (3, 7, 1))


def test_tor_duality_klein(klein_pipeline):
    _, res, _ = klein_pipeline
    data = resolve.tor_duality(res)
    one = QQ.from_int(1)
    assert data.tau == [[one, 0, 0], [0, 0, one], [0, -one, 0]]
    for i in range(8):
        for j in range(8):
            assert QQ.normalize(data.sigma[i][j] + data.sigma[j][i]) == 0
    assert linalg.det(data.tau, QQ) != 0


def test_ext4_identification_klein(klein_pipeline):
    _, res, eta = klein_pipeline
    from fano12.rings import dim_degree, monomials
    I2 = [p.vector() for p in eta.v_basis]
    _, pivots, _ = linalg.rref(I2, QQ)
    dim2 = dim_degree(4, 2)
    u_basis = []
    for c in range(dim2):
        if c not in set(pivots):
            v = [QQ.from_int(0)] * dim2
            v[c] = QQ.from_int(1)
            u_basis.append(v)
    P = resolve.ext4_identification(res, u_basis)
    one = QQ.from_int(1)
    assert P == [[0, 0, one], [one, 0, 0], [0, one, 0]]


def test_klein_n_to_udual(klein_pipeline):
    _, _, eta = klein_pipeline
    one = QQ.from_int(1)
    assert eta.n_to_udual == [[0, -one, 0], [-one, 0, 0], [0, 0, -one]]


def test_skew_syzygy_matrix_regenerates_cubics():
    rng = random.Random(5)
    for f in (gallery.klein_quartic(), random_poly(PLANE_S, 4, rng)):
        ideal = apolar.perp_ideal(f, cap=8)
        res = resolve.min_res(ideal, cap=8)
        M = resolve.skew_syzygy_matrix(res)
        ring = M[0][0].ring
        zero = MultiPoly.zero(ring, QQ, 3)
        pfs = []
        for k in range(7):
            sub = [[M[i][j] for j in range(7) if j != k]
                   for i in range(7) if i != k]
            pfs.append(skewfano.pfaffian(sub, zero=zero))
        rows = [p.vector() for p in pfs if not p.is_zero()]
        gen_rows = list(ideal.piece(3))
        assert linalg.rank(rows, QQ) == 7
        assert linalg.rank(rows + gen_rows, QQ) == 7


def test_min_res_over_prime_field_quartic():
    fp = PrimeField(11)
    f = reduce_mod(gallery.klein_quartic(), 11)
    ideal = apolar.perp_ideal(f, cap=8)
    res = resolve.min_res(ideal, cap=8)
    assert tuple(res.betti_entries()) == ((0, 0, 1), (1, 3, 7),
                                          (2, 4, 7), (3, 7, 1))
