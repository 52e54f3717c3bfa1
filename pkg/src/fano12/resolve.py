"""Degree-capped graded minimal free resolutions by pure linear algebra,
Betti tables, and the self-duality data of the net algebra resolution.

Generators are RREF-canonical complements of R_1 * (previous degree)
inside each graded piece; syzygies are kernels computed degreewise.  The
heavy "no new generator here" degrees are certified with a one-sided
modular rank bound (rank over F_p never exceeds the rank over Q), so the
exact rational elimination only runs in the few degrees where minimal
generators can actually appear.
"""

from dataclasses import dataclass, field as dfield

import numpy as np

from . import linalg
from .fields import QQ
from .rings import MultiPoly, dim_degree, monomials

_CERT_PRIMES = (1000003, 1000033, 999983)


def _fdim(degrees, nvars, d):
    return sum(dim_degree(nvars, d - a) for a in degrees)


def _column_coords(column, degrees, nvars, d, field):
    """Coordinates of a free-module element of degree d.

    column is a list of polys, entry r homogeneous of degree d -
    degrees[r] (or zero).
    """
    out = []
    for r, a in enumerate(degrees):
        p = column[r]
        k = dim_degree(nvars, d - a)
        if p is None or p.is_zero():
            out.extend([field.from_int(0)] * k)
        else:
            out.extend(p.vector())
    return out


def _coords_to_column(vec, degrees, ring, field, d):
    col = []
    pos = 0
    for a in degrees:
        k = dim_degree(ring.nvars, d - a)
        col.append(MultiPoly.from_vector(ring, field, d - a, vec[pos:pos + k]))
        pos += k
    return col


def _mul_column(column, mono_poly):
    return [None if p is None else mono_poly * p for p in column]


def rank_mod_p(rows, p):
    """Rank over F_p of a rational matrix; a lower bound for the rank
    over Q.  Raises ZeroDivisionError if p divides a denominator.
    Only valid for rational entries."""
    if not rows:
        return 0
    m = np.zeros((len(rows), len(rows[0])), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x == 0:
                continue
            num = int(x.numerator) % p
            den = int(x.denominator) % p
            if den == 0:
                raise ZeroDivisionError("certificate prime divides a denominator")
            m[i, j] = num * pow(den, p - 2, p) % p
    return _np_rank_mod_p(m, p)


def _np_rank_mod_p(m, p):
    m = m % p
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = m[r] * inv % p
        mask = np.nonzero(m[:, c])[0]
        mask = mask[mask != r]
        if len(mask):
            m[mask] = (m[mask] - np.outer(m[mask, c], m[r])) % p
        r += 1
    return r


class _Span:
    """Incremental RREF span for canonical complement selection."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = []    # RREF rows, sorted by pivot
        self.pivots = []

    def reduce(self, vec):
        field = self.field
        v = [field.normalize(x) for x in vec]
        for piv, row in zip(self.pivots, self.rows):
            if v[piv] != 0:
                f = v[piv]
                v = [field.normalize(x - f * y) for x, y in zip(v, row)]
        return v

    def add(self, vec):
        """Insert if independent; returns True when the vector was new."""
        v = self.reduce(vec)
        lead = next((c for c, x in enumerate(v) if x != 0), None)
        if lead is None:
            return False
        inv = self.field.inv(v[lead])
        v = [self.field.normalize(x * inv) for x in v]
        # back-reduce existing rows and keep pivot order
        for i, row in enumerate(self.rows):
            if row[lead] != 0:
                f = row[lead]
                self.rows[i] = [self.field.normalize(x - f * y)
                                for x, y in zip(row, v)]
        idx = 0
        while idx < len(self.pivots) and self.pivots[idx] < lead:
            idx += 1
        self.pivots.insert(idx, lead)
        self.rows.insert(idx, v)
        return True

    @property
    def dim(self):
        return len(self.rows)


@dataclass
class Step:
    """One step of a resolution: generator degrees plus the matrix of the
    map into the previous free module (entries indexed [prev][cur])."""

    degrees: tuple
    matrix: list  # matrix[r][c] MultiPoly or None, r over previous gens

    def column(self, c):
        return [row[c] for row in self.matrix]


@dataclass
class Resolution:
    ring: object
    field: object
    steps: list
    cap: int
    truncated: bool = False

    def betti(self):
        """Map (homological degree, internal degree) -> rank."""
        table = {(0, 0): 1}
        for i, step in enumerate(self.steps, start=1):
            for a in step.degrees:
                table[(i, a)] = table.get((i, a), 0) + 1
        return table

    def betti_entries(self):
        return sorted((i, d, r) for (i, d), r in self.betti().items())


class ResolutionError(ValueError):
    pass


def _certified_rank_equals(rows, target, exact_fallback, field):
    """True iff rank(rows) == target over Q, certified cheaply mod p.

    rows spans a subspace of a target-dimensional space, so rank <=
    target always; a modular rank reaching target is a proof.  When the
    certificate fails, fall back to the exact test.  Over a prime field
    the exact test is cheap and is used directly.
    """
    if field.char != 0:
        return exact_fallback()
    for p in _CERT_PRIMES:
        try:
            if rank_mod_p(rows, p) == target:
                return True
            break
        except ZeroDivisionError:
            continue
    return exact_fallback()


def _ideal_generators(ideal, cap):
    """Minimal generators of a graded ideal, degree by degree."""
    ring, field = ideal.ring, ideal.field
    nvars = ring.nvars
    gens = []
    for d in range(cap + 1):
        piece = ideal.piece(d)
        if not piece:
            continue
        prev = ideal.polys(d - 1)
        multiples = []
        for p in prev:
            for i in range(nvars):
                multiples.append((MultiPoly.variable(ring, field, i) * p).vector())
        target = len(piece)
        if multiples:
            def exact():
                return linalg.rank(multiples, field) == target
            if _certified_rank_equals(multiples, target, exact, field):
                continue
        span = _Span(field, dim_degree(nvars, d))
        for row in multiples:
            span.add(row)
        for row in piece:
            if span.add(row):
                gens.append(MultiPoly.from_vector(ring, field, d, row))
    return gens


def _map_piece(prev_degrees, columns, col_degrees, ring, field, d):
    """Columns of the degree-d piece of a free-module map, as vectors."""
    nvars = ring.nvars
    out = []
    for col, a in zip(columns, col_degrees):
        for mono in monomials(nvars, d - a):
            mp = MultiPoly(ring, field, d - a, {mono: field.from_int(1)})
            shifted = _mul_column(col, mp)
            out.append(_column_coords(shifted, prev_degrees, nvars, d, field))
    return out


def min_res(ideal, cap=8):
    """Minimal free resolution of Ring/ideal through the degree cap."""
    ring, field = ideal.ring, ideal.field
    nvars = ring.nvars
    gens = _ideal_generators(ideal, cap)
    if not gens:
        raise ResolutionError("ideal has no generators up to the cap")
    steps = [Step(tuple(g.degree for g in gens), [[g for g in gens]])]
    truncated = any(g.degree == cap for g in gens)

    prev_degrees = (0,)
    cur_columns = [[g] for g in gens]
    cur_degrees = [g.degree for g in gens]

    for _depth in range(nvars):
        new_columns = []
        new_degrees = []
        dmin = min(cur_degrees) + 1
        for d in range(dmin, cap + 1):
            domain_dim = _fdim(cur_degrees, nvars, d)
            if domain_dim == 0:
                continue
            phi_cols = _map_piece(prev_degrees, cur_columns, cur_degrees,
                                  ring, field, d)
            phi_rows = linalg.transpose(phi_cols) if phi_cols else []
            # span of multiples of syzygy generators found so far
            multiples = []
            for col, a in zip(new_columns, new_degrees):
                for mono in monomials(nvars, d - a):
                    mp = MultiPoly(ring, field, d - a, {mono: field.from_int(1)})
                    multiples.append(_column_coords(
                        _mul_column(col, mp), cur_degrees, nvars, d, field))

            certified = False
            if field.char == 0:
                for p in _CERT_PRIMES:
                    try:
                        kdim_p = domain_dim - rank_mod_p(phi_rows, p)
                        span_p = rank_mod_p(multiples, p) if multiples else 0
                        certified = (span_p == kdim_p)
                        break
                    except ZeroDivisionError:
                        continue
            if certified:
                # rank_Q(span) >= span_p = kdim_p >= kdim_Q >= rank_Q(span)
                continue

            kern = linalg.kernel(phi_rows, field, ncols=domain_dim)
            span = _Span(field, domain_dim)
            for row in multiples:
                span.add(row)
            for row in kern:
                if span.add(row):
                    col = _coords_to_column(row, cur_degrees, ring, field, d)
                    new_columns.append(col)
                    new_degrees.append(d)
                    if d == cap:
                        truncated = True
        if not new_columns:
            break
        steps.append(Step(tuple(new_degrees),
                          [[col[r] for col in new_columns]
                           for r in range(len(cur_degrees))]))
        prev_degrees = tuple(cur_degrees)
        cur_columns = new_columns
        cur_degrees = new_degrees

    res = Resolution(ring, field, steps, cap, truncated)
    _check_complex(res)
    return res


def _check_complex(res):
    """Consecutive maps compose to zero; matrices have no unit entries."""
    for step in res.steps:
        for row in step.matrix:
            for e in row:
                if e is not None and not e.is_zero() and e.degree == 0:
                    raise ResolutionError("non-minimal resolution: scalar entry")
    for i in range(1, len(res.steps)):
        a, b = res.steps[i - 1], res.steps[i]
        for c in range(len(b.degrees)):
            col = b.column(c)
            for r0 in range(len(a.matrix)):
                acc = None
                for t in range(len(a.degrees)):
                    prod = a.matrix[r0][t] * col[t]
                    acc = prod if acc is None else acc + prod
                if acc is not None and not acc.is_zero():
                    raise ResolutionError("maps do not compose to zero")


NET_BETTI_SHAPE = ((0, 0, 1), (1, 2, 7), (2, 3, 8), (2, 4, 3), (3, 5, 8), (4, 6, 3))


def has_net_shape(res):
    return tuple(res.betti_entries()) == NET_BETTI_SHAPE


@dataclass
class DualityData:
    """The skew self-duality of the middle syzygies: psi2 = sigma *
    psi1^T * tau, with sigma 8x8 skew and tau 3x3 invertible."""

    sigma: list
    tau: list


def _net_blocks(res):
    if not has_net_shape(res):
        raise ResolutionError("resolution does not have the expected net shape")
    f2 = res.steps[1]
    quartic_rows = [i for i, a in enumerate(f2.degrees) if a == 4]
    psi1 = [res.steps[2].matrix[r] for r in quartic_rows]       # 3 x 8
    psi2 = res.steps[3].matrix                                   # 8 x 3
    return psi1, psi2


def tor_duality(res):
    """Solve psi2 * mu = sigma * psi1^T linearly; tau = mu^{-1}."""
    field = res.field
    psi1, psi2 = _net_blocks(res)
    nvars = res.ring.nvars
    # unknowns: mu (3x3) then sigma (8x8), 73 total
    nmu, nsig = 9, 64
    rows = []
    for i in range(8):
        for j in range(3):
            # coefficientwise in the nvars linear-form coordinates
            for v in range(nvars):
                row = [field.from_int(0)] * (nmu + nsig)
                for k in range(3):
                    c = _linear_coeff(psi2[i][k], v, field)
                    row[3 * k + j] = row[3 * k + j] + c
                for t in range(8):
                    c = _linear_coeff(psi1[j][t], v, field)
                    row[nmu + 8 * i + t] = row[nmu + 8 * i + t] - c
                rows.append([field.normalize(x) for x in row])
    ker = linalg.kernel(rows, field, ncols=nmu + nsig)
    if len(ker) != 1:
        raise ResolutionError(
            f"duality solution space has dimension {len(ker)} (non-general net)")
    sol = ker[0]
    mu = [[sol[3 * k + j] for j in range(3)] for k in range(3)]
    sigma = [[sol[nmu + 8 * i + t] for t in range(8)] for i in range(8)]
    for i in range(8):
        for j in range(8):
            if field.normalize(sigma[i][j] + sigma[j][i]) != 0:
                raise ResolutionError("duality matrix is not skew-symmetric")
    tau = linalg.mat_inv(mu, field)
    return DualityData(sigma=sigma, tau=tau)


def _linear_coeff(p, v, field):
    if p is None or p.is_zero():
        return field.from_int(0)
    e = [0] * p.ring.nvars
    e[v] = 1
    return p.terms.get(tuple(e), field.from_int(0))


def ext4_identification(res, u_basis):
    """Pairing matrix between classes of the degree-2 quotient algebra
    and the three generators of the dualized last syzygy map.

    u_basis: rows spanning a complement of the ideal's degree-2 piece
    (the algebra's degree-2 part).  Returns an invertible 3x3 matrix
    P[i][j] = class of u_i * generator_j in the 1-dimensional degree
    piece of the cokernel of the transposed last map.
    """
    field = res.field
    ring = res.ring
    nvars = ring.nvars
    psi1, psi2 = _net_blocks(res)
    dim2 = dim_degree(nvars, 2)
    # image of the presentation in the (R_2)^3 piece
    image = []
    for j in range(8):
        for mono in monomials(nvars, 1):
            mp = MultiPoly(ring, field, 1, {mono: field.from_int(1)})
            vec = []
            for i in range(3):
                entry = psi2[j][i]
                prod = mp * entry if entry is not None else None
                vec.extend(prod.vector() if prod is not None
                           else [field.from_int(0)] * dim2)
            image.append(vec)
    rk, pivots, image_rref = linalg.rref(image, field)
    total = 3 * dim2
    if total - rk != 1:
        raise ResolutionError(
            f"degree -4 cokernel has dimension {total - rk} (non-general net)")
    free_col = next(c for c in range(total) if c not in set(pivots))

    def project(vec):
        v = list(vec)
        for piv, row in zip(pivots, image_rref):
            if v[piv] != 0:
                f = v[piv]
                v = [field.normalize(x - f * y) for x, y in zip(v, row)]
        return v[free_col]

    P = []
    for u in u_basis:
        row = []
        for i in range(3):
            vec = [field.from_int(0)] * total
            vec[i * dim2:(i + 1) * dim2] = [field.normalize(x) for x in u]
            row.append(project(vec))
        P.append(row)
    if linalg.det(P, field) == 0:
        raise ResolutionError("ext pairing matrix is singular")
    return P


def hilbert_consistency(res, ideal):
    """Alternating Betti sums reproduce the quotient Hilbert function in
    every degree up to the cap."""
    nvars = res.ring.nvars
    for d in range(res.cap + 1):
        acc = dim_degree(nvars, d)
        sign = -1
        for step in res.steps:
            acc += sign * _fdim(step.degrees, nvars, d)
            sign = -sign
        if acc != dim_degree(nvars, d) - ideal.dim_piece(d):
            return False
    return True


def skew_syzygy_matrix(res):
    """A skew 7x7 matrix of linear forms whose columns span the linear
    syzygies of the 7 cubic generators of a general quartic's apolar
    ideal, found by a linear solve; by the Buchsbaum-Eisenbud structure of codimension-3
    Gorenstein ideals its pfaffians regenerate the ideal."""
    field = res.field
    if len(res.steps) < 2 or res.steps[0].degrees != (3,) * 7 \
            or res.steps[1].degrees != (4,) * 7:
        raise ResolutionError("resolution does not have the generic "
                              "quartic shape")
    nvars = res.ring.nvars
    syz = [res.steps[1].column(c) for c in range(7)]  # 7 columns of 7 forms
    rows = []
    for i in range(7):
        for j in range(i, 7):
            for v in range(nvars):
                row = [field.from_int(0)] * 49
                for k in range(7):
                    row[7 * j + k] = row[7 * j + k] + \
                        _linear_coeff(syz[k][i], v, field)
                    row[7 * i + k] = row[7 * i + k] + \
                        _linear_coeff(syz[k][j], v, field)
                rows.append([field.normalize(x) for x in row])
    ker = linalg.kernel(rows, field, ncols=49)
    for sol in ker:
        C = [[sol[7 * j + k] for k in range(7)] for j in range(7)]
        if linalg.det(C, field) == 0:
            continue
        M = [[None] * 7 for _ in range(7)]
        for i in range(7):
            for j in range(7):
                acc = MultiPoly.zero(res.ring, field, 1)
                for k in range(7):
                    if C[j][k] != 0:
                        acc = acc + syz[k][i].scale(C[j][k])
                M[i][j] = acc
        return M
    raise ResolutionError("no invertible skew-symmetrization found")
