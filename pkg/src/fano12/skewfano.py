"""Nets of alternating forms on a 7-dimensional space.

The net eta is read off from the multiplication of the first syzygies of
the net algebra: each Koszul relation between two quadrics of V lies in
the span of the linear syzygies and the three minimal quartic syzygies;
its coefficients on the latter give eta.  Pfaffians recover the plane
quartic, isotropic 3-spaces give twisted cubics, and pairs of isotropic
spaces meeting in dimension 2 give lines together with their marked
points on the covariant quartic.
"""

from dataclasses import dataclass

from . import apolar, linalg, resolve
from .netquad import quadric_matrix
from .rings import (MultiPoly, PLANE_T, SPACE_R, monomials, dim_degree)


class SkewNetError(ValueError):
    pass


class NotTwistedCubicError(ValueError):
    pass


class DegenerateCurveError(ValueError):
    pass


class AnomalousPairError(ValueError):
    """Two isotropic spaces meet in dimension 2 but their common quadrics
    have no common linear factor; impossible for a valid net."""


@dataclass
class SkewNet:
    """Three 7x7 skew matrices over a field, coordinates of a net of
    alternating forms in a basis of the target 3-space N, together with
    the 7 quadrics of V and (optionally) the matrix identifying N with
    the dual net plane."""

    forms: tuple
    v_basis: tuple
    field: object
    n_to_udual: list = None

    def __post_init__(self):
        for m in self.forms:
            for i in range(7):
                for j in range(7):
                    if self.field.normalize(m[i][j] + m[j][i]) != 0:
                        raise SkewNetError("matrix is not skew-symmetric")

    def apply(self, v, w):
        """The vector eta(v ^ w) in N coordinates."""
        field = self.field
        out = []
        for m in self.forms:
            s = field.from_int(0)
            for i in range(7):
                if v[i] == 0:
                    continue
                for j in range(7):
                    if m[i][j] != 0 and w[j] != 0:
                        s = s + v[i] * m[i][j] * w[j]
            out.append(field.normalize(s))
        return out


@dataclass(frozen=True)
class SubspaceE:
    """An RREF-canonical 3-dimensional subspace of the 7-space V."""

    rows: tuple

    @classmethod
    def from_rows(cls, rows, field):
        rk, _, rref = linalg.rref([list(r) for r in rows], field)
        if rk != 3:
            raise ValueError("subspace is not 3-dimensional")
        return cls(tuple(tuple(r) for r in rref))


@dataclass
class LineInX:
    """A line: two isotropic 3-spaces meeting in a 2-space of quadrics
    with common linear factor r, giving the pencil (p1,p2,p3,p4)."""

    E1: SubspaceE
    E2: SubspaceE
    common_factor_r: object
    pencil: tuple  # four coordinate rows over V


def eta_from_tor(net, res):
    """Extract the skew net from the resolution of the net algebra."""
    if not resolve.has_net_shape(res):
        raise SkewNetError("resolution does not have the expected shape")
    field = res.field
    ring = res.ring
    v_basis = tuple(res.steps[0].matrix[0])
    f2 = res.steps[1]
    lin_cols = [c for c, a in enumerate(f2.degrees) if a == 3]
    quart_cols = [c for c, a in enumerate(f2.degrees) if a == 4]
    dim2 = dim_degree(4, 2)

    cols = []
    for c in lin_cols:
        col = f2.column(c)
        for mono in monomials(4, 1):
            mp = MultiPoly(ring, field, 1, {mono: field.from_int(1)})
            vec = []
            for r in range(7):
                prod = mp * col[r]
                vec.extend(prod.vector())
            cols.append(vec)
    for c in quart_cols:
        col = f2.column(c)
        vec = []
        for r in range(7):
            vec.extend(col[r].vector())
        cols.append(vec)
    A = linalg.transpose(cols)  # 70 x 35
    if linalg.rank(A, field) != 35:
        raise SkewNetError("non-minimal resolution input")

    zero2 = [field.from_int(0)] * dim2
    forms = [[[field.from_int(0)] * 7 for _ in range(7)] for _ in range(3)]
    for i in range(7):
        for j in range(i + 1, 7):
            target = []
            for r in range(7):
                if r == i:
                    target.extend(v_basis[j].vector())
                elif r == j:
                    target.extend((-v_basis[i]).vector())
                else:
                    target.extend(zero2)
            sol = linalg.solve(A, target, field)
            if sol is None:
                raise SkewNetError("non-minimal resolution input")
            for k in range(3):
                c = sol[32 + k]
                forms[k][i][j] = c
                forms[k][j][i] = field.normalize(-c)
    return SkewNet(forms=tuple(forms), v_basis=v_basis, field=field)


def attach_n_to_udual(eta, res, net):
    """Attach the identification of N with the dual net plane, composed
    from the resolution's self-duality and the Ext pairing."""
    from .rings import apply as apolar_apply

    field = eta.field
    dd = resolve.tor_duality(res)
    # canonical degree-2 algebra basis: non-pivot monomials of the ideal
    I2 = [p.vector() for p in eta.v_basis]
    rk, pivots, _ = linalg.rref(I2, field)
    dim2 = dim_degree(4, 2)
    monos = monomials(4, 2)
    free = [c for c in range(dim2) if c not in set(pivots)]
    u_basis = []
    u_polys = []
    for c in free:
        v = [field.from_int(0)] * dim2
        v[c] = field.from_int(1)
        u_basis.append(v)
        u_polys.append(MultiPoly(SPACE_R, field, 2,
                                 {monos[c]: field.from_int(1)}))
    P = resolve.ext4_identification(res, u_basis)
    # apolarity Gram between the algebra basis and the net quadrics
    C = [[apolar_apply(u, q).terms.get((0, 0, 0, 0), field.from_int(0))
          for q in net.quadrics] for u in u_polys]
    Cinv = linalg.mat_inv(C, field)
    G = linalg.mat_mul(Cinv, linalg.mat_mul(P, linalg.transpose(dd.tau),
                                            field), field)
    eta.n_to_udual = G
    return eta


def pfaffian(m, zero=0):
    """Pfaffian of a skew matrix by expansion along the first row, with
    pf([[0,a],[-a,0]]) = a.  Works for scalars and polynomials."""
    n = len(m)
    if n % 2 != 0:
        raise ValueError("pfaffian requires even size")
    for i in range(n):
        for j in range(n):
            s = m[i][j] + m[j][i]
            if not (s.is_zero() if hasattr(s, "is_zero") else s == 0):
                raise ValueError("matrix is not skew-symmetric")
    return _pf(m, zero)


def _pf(m, zero):
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix has no pfaffian here")
    if n == 2:
        return m[0][1]
    acc = None
    for j in range(1, n):
        e = m[0][j]
        if e.is_zero() if hasattr(e, "is_zero") else e == 0:
            continue
        keep = [r for r in range(1, n) if r != j]
        sub = [[m[r][c] for c in keep] for r in keep]
        term = e * _pf(sub, zero)
        if j % 2 == 0:
            term = -term
        acc = term if acc is None else acc + term
    return zero if acc is None else acc


def eta_matrix(eta, ring=PLANE_T):
    """The 7x7 matrix of linear forms sum_k eta_k * t_k."""
    field = eta.field
    out = []
    for i in range(7):
        row = []
        for j in range(7):
            terms = {}
            for k in range(3):
                c = eta.forms[k][i][j]
                if c != 0:
                    e = [0, 0, 0]
                    e[k] = 1
                    terms[tuple(e)] = c
            row.append(MultiPoly(ring, field, 1, terms))
        out.append(row)
    return out


def pfaffian_ideal(eta):
    """The 7 principal 6x6 pfaffians of the matrix of linear forms."""
    m = eta_matrix(eta)
    field = eta.field
    zero3 = MultiPoly.zero(PLANE_T, field, 3)
    out = []
    for skip in range(7):
        keep = [r for r in range(7) if r != skip]
        sub = [[m[r][c] for c in keep] for r in keep]
        out.append(pfaffian(sub, zero=zero3))
    return out


def pfaffian_quartic(eta):
    """Dual socle generator of the pfaffian ideal: the plane quartic of
    the net, monic in its grevlex-leading coefficient."""
    cubics = [p for p in pfaffian_ideal(eta) if not p.is_zero()]
    if not cubics:
        raise SkewNetError("pfaffian ideal is zero")
    ideal = apolar.GradedIdeal.from_generators(cubics, cap=5)
    return apolar.dual_socle(ideal, socle_degree=4)


def isotropic(eta, E):
    """Whether all three alternating forms vanish on the 3-space."""
    rows = E.rows if isinstance(E, SubspaceE) else E
    field = eta.field
    for a in range(3):
        for b in range(a + 1, 3):
            for x in eta.apply(rows[a], rows[b]):
                if field.normalize(x) != 0:
                    return False
    return True


def _coords_to_quadric(eta_or_basis, coords, field):
    v_basis = eta_or_basis.v_basis if isinstance(eta_or_basis, SkewNet) \
        else eta_or_basis
    q = MultiPoly.zero(SPACE_R, field, 2)
    for c, p in zip(coords, v_basis):
        if c != 0:
            q = q + p.scale(field.normalize(c))
    return q


def twisted_cubic(eta, E):
    """Hilbert-Burch verification for an isotropic 3-space: the three
    quadrics have exactly 2 linear syzygies tau2, whose 2x2 minors
    regenerate the span, and the quotient has Hilbert function 3t+1.

    Returns (tau2, ideal)."""
    field = eta.field
    rows = E.rows if isinstance(E, SubspaceE) else E
    ps = [_coords_to_quadric(eta, r, field) for r in rows]
    if linalg.rank([p.vector() for p in ps], field) != 3:
        raise ValueError("subspace rows are dependent")
    # kernel of (R_1)^3 -> R_3
    cols = []
    for p in ps:
        for mono in monomials(4, 1):
            mp = MultiPoly(SPACE_R, field, 1, {mono: field.from_int(1)})
            cols.append((mp * p).vector())
    ker = linalg.kernel(linalg.transpose(cols), field, ncols=12)
    if len(ker) != 2:
        raise NotTwistedCubicError(
            f"{len(ker)} linear syzygies instead of 2")
    tau2 = [[MultiPoly.from_vector(SPACE_R, field, 1, k[4 * i:4 * i + 4])
             for i in range(3)] for k in ker]
    minors = []
    for (a, b) in ((1, 2), (0, 2), (0, 1)):
        minors.append(tau2[0][a] * tau2[1][b] - tau2[0][b] * tau2[1][a])
    span_p = [p.vector() for p in ps]
    span_m = [m.vector() for m in minors]
    if linalg.rank(span_m, field) != 3 or any(
            not linalg.row_space_contains(span_p, v, field) for v in span_m):
        r = common_linear_factor(minors, field)
        if r is not None:
            raise DegenerateCurveError("minors share a linear factor")
        raise NotTwistedCubicError("minors do not regenerate the subspace")
    ideal = apolar.GradedIdeal.from_generators(ps, cap=4)
    hf = tuple(dim_degree(4, d) - ideal.dim_piece(d) for d in range(5))
    if hf != (1, 4, 7, 10, 13):
        raise NotTwistedCubicError(f"quotient Hilbert function {hf}")
    return tau2, ideal


def factor_out(p, r, field):
    """Solve p = r * r2 for a linear form r2, or return None."""
    cols = []
    for v in range(p.ring.nvars):
        e = [0] * p.ring.nvars
        e[v] = 1
        w = MultiPoly(p.ring, field, 1, {tuple(e): field.from_int(1)})
        cols.append((r * w).vector())
    sol = linalg.solve(linalg.transpose(cols), p.vector(), field)
    if sol is None:
        return None
    return MultiPoly.from_vector(p.ring, field, 1, sol)


def common_linear_factor(quadrics, field):
    """A linear form dividing every given quadric, or None.

    Uses the fact that the symmetric matrix of r*r2 has row space
    spanned by r and r2."""
    space = None
    for q in quadrics:
        if q.is_zero():
            continue
        rows = quadric_matrix(q)
        rows = [[field.normalize(x) for x in row] for row in rows]
        space = rows if space is None else linalg.intersect_row_spaces(
            space, rows, field)
        if not space:
            return None
    if space is None:
        return None
    for cand in space:
        r = MultiPoly.from_vector(quadrics[0].ring, field, 1, cand)
        if all(q.is_zero() or factor_out(q, r, field) is not None
               for q in quadrics):
            return r
    return None


def line_detect(eta, E1, E2):
    """A LineInX when the two isotropic spaces meet in a pencil with a
    common linear factor, None when the intersection is too small."""
    field = eta.field
    if E1.rows == E2.rows:
        raise ValueError("the two subspaces coincide")
    r1 = [list(r) for r in E1.rows]
    r2 = [list(r) for r in E2.rows]
    inter = linalg.intersect_row_spaces(r1, r2, field)
    if len(inter) != 2:
        return None
    q1 = _coords_to_quadric(eta, inter[0], field)
    q2 = _coords_to_quadric(eta, inter[1], field)
    r = common_linear_factor([q1, q2], field)
    if r is None:
        raise AnomalousPairError(
            "common quadrics have no common linear factor")
    p3 = next(row for row in E1.rows
              if not linalg.row_space_contains(inter, list(row), field))
    p4 = next(row for row in E2.rows
              if not linalg.row_space_contains(inter, list(row), field))
    pencil = (tuple(inter[0]), tuple(inter[1]), tuple(p3), tuple(p4))
    for a in range(2):
        for extra in (pencil[2], pencil[3]):
            if any(x != 0 for x in eta.apply(pencil[a], extra)):
                raise SkewNetError("pencil member is not isotropic")
    return LineInX(E1=E1, E2=E2, common_factor_r=r, pencil=pencil)


def line_to_point(line, eta):
    """The point eta(p3 ^ p4) of the net plane N attached to a line."""
    a = eta.apply(line.pencil[2], line.pencil[3])
    if all(x == 0 for x in a):
        raise SkewNetError("degenerate line: eta vanishes on the pencil")
    return a
