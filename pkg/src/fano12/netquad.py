"""Nets of quadrics on a 4-dimensional space: symmetric matrices, the
discriminant curve, the apolar ideal of the net, and unstable planes."""

from dataclasses import dataclass

from . import apolar, linalg
from .rings import (MultiPoly, Point, Ring, SPACE_R, SPACE_T, SYMBOL,
                    apply, dim_degree, monomials)

# coordinate ring of the net's parameter plane
NET_U = Ring(("u0", "u1", "u2"), SYMBOL)


class DegenerateNetError(ValueError):
    pass


def quadric_matrix(q):
    """Symmetric matrix M with q = v^T M v (off-diagonal entries are half
    the mixed coefficients)."""
    if q.degree != 2:
        raise ValueError("expected a quadric")
    n = q.ring.nvars
    field = q.field
    half = field.from_fraction(1, 2)
    m = [[field.from_int(0)] * n for _ in range(n)]
    for expo, c in q.terms.items():
        idx = [i for i, e in enumerate(expo) for _ in range(e)]
        i, j = idx
        if i == j:
            m[i][i] = c
        else:
            m[i][j] = m[j][i] = field.normalize(c * half)
    return m


def matrix_quadric(m, ring, field):
    n = len(m)
    q = MultiPoly.zero(ring, field, 2)
    for i in range(n):
        for j in range(i, n):
            c = m[i][j] if i == j else field.normalize(m[i][j] + m[j][i])
            if c != 0:
                e = [0] * n
                e[i] += 1
                e[j] += 1
                q = q + MultiPoly(ring, field, 2, {tuple(e): c})
    return q


@dataclass
class NetOfQuadrics:
    """Three linearly independent quadrics in the z- or w-variables."""

    quadrics: tuple

    def __post_init__(self):
        qs = tuple(self.quadrics)
        if len(qs) != 3 or any(q.degree != 2 for q in qs):
            raise ValueError("a net consists of three quadrics")
        self.quadrics = qs
        rows = [q.vector() for q in qs]
        if linalg.rank(rows, self.field) != 3:
            raise DegenerateNetError("quadrics are linearly dependent")

    @property
    def ring(self):
        return self.quadrics[0].ring

    @property
    def field(self):
        return self.quadrics[0].field

    def matrices(self):
        return [quadric_matrix(q) for q in self.quadrics]

    def member(self, u):
        """The quadric u0*q0 + u1*q1 + u2*q2."""
        q = MultiPoly.zero(self.ring, self.field, 2)
        for c, qi in zip(u, self.quadrics):
            q = q + qi.scale(self.field.normalize(c))
        return q


def net_matrix(net):
    """4x4 symmetric matrix of linear forms in u0,u1,u2."""
    field = net.field
    ms = net.matrices()
    out = []
    for i in range(4):
        row = []
        for j in range(4):
            p = MultiPoly.zero(NET_U, field, 1)
            for k in range(3):
                c = ms[k][i][j]
                if c != 0:
                    e = [0, 0, 0]
                    e[k] = 1
                    p = p + MultiPoly(NET_U, field, 1, {tuple(e): c})
            row.append(p)
        out.append(row)
    return out


def _poly_det(m):
    """Determinant of a small matrix of polynomials by Laplace expansion."""
    n = len(m)
    if n == 1:
        return m[0][0]
    acc = None
    for j in range(n):
        e = m[0][j]
        if e.is_zero():
            continue
        minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = e * _poly_det(minor)
        if j % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        zero = m[0][0]
        deg = sum(m[i][i].degree for i in range(n))
        return MultiPoly.zero(zero.ring, zero.field, deg)
    return acc


def discriminant(net):
    """The plane quartic det of the net matrix; raises if identically zero."""
    d = _poly_det(net_matrix(net))
    if d.is_zero():
        raise DegenerateNetError("discriminant vanishes identically")
    return d


def jacobian_minors(net):
    """The four 3x3 minors of the 4x3 matrix [M0 z | M1 z | M2 z], cubics
    in the point variables cutting out the Steinerian-type locus."""
    ring = net.ring
    field = net.field
    ms = net.matrices()
    cols = []
    for m in ms:
        col = []
        for i in range(4):
            p = MultiPoly.zero(ring, field, 1)
            for j in range(4):
                if m[i][j] != 0:
                    e = [0] * 4
                    e[j] = 1
                    p = p + MultiPoly(ring, field, 1, {tuple(e): m[i][j]})
            col.append(p)
        cols.append(col)
    minors = []
    for skip in range(4):
        rows = [r for r in range(4) if r != skip]
        sub = [[cols[c][r] for c in range(3)] for r in rows]
        det = _poly_det(sub)
        if skip % 2 == 1:
            det = -det
        minors.append(det)
    return minors


def q_perp(net, cap=8):
    """Apolar ideal of the net: operators annihilating all three quadrics.

    Degree d piece: d < 2 by direct pairing conditions, d = 2 the
    7-dimensional system of the net, d >= 3 everything.
    """
    ring = net.ring
    if ring is not SPACE_T:
        raise ValueError("net must live in the z-variables")
    field = net.field
    dual = SPACE_R
    per_degree = {0: []}
    for d in (1, 2):
        monos = monomials(4, d)
        rows = []
        for mono in monos:
            D = MultiPoly(dual, field, d, {mono: field.from_int(1)})
            row = []
            for q in net.quadrics:
                row.extend(apply(D, q).vector())
            rows.append(row)
        per_degree[d] = linalg.kernel(linalg.transpose(rows), field,
                                      ncols=len(monos))
    for d in range(3, cap + 1):
        per_degree[d] = linalg.identity(dim_degree(4, d), field)
    return apolar.GradedIdeal(dual, field, per_degree)


def net_hilbert_function(net, cap=5):
    ideal = q_perp(net, cap=cap)
    return ideal.hilbert_function(cap)


def is_general_net(net):
    """Hilbert function (1,4,3,0,...) of the apolar quotient."""
    hf = net_hilbert_function(net, cap=3)
    return hf[:4] == (1, 4, 3, 0)


def unstable_plane(net, r):
    """Whether the plane r = 0 (r a linear form in z) is unstable for the
    net: the multiplication-by-r map into the degree-2 quotient has rank
    less than 3."""
    ring = net.ring
    field = net.field
    if r.degree != 1 or r.ring is not SPACE_R:
        raise ValueError("expected a linear operator in the w-variables")
    rows = []
    for v in range(4):
        e = [0] * 4
        e[v] = 1
        w = MultiPoly(SPACE_R, field, 1, {tuple(e): field.from_int(1)})
        prod = r * w
        rows.append([apply(prod, q).terms.get((0, 0, 0, 0), field.from_int(0))
                     for q in net.quadrics])
    return linalg.rank(rows, field) < 3
