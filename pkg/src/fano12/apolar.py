"""Perpendicular ideals, Hilbert functions, catalecticants, and the
inverse-system bijection between quartics and their Artinian Gorenstein
quotient algebras.
"""

from . import linalg
from .rings import (MultiPoly, apply, dim_degree, dual_ring, monomials,
                    polys_to_matrix)


class GradedIdeal:
    """A homogeneous ideal stored as per-degree RREF-canonical bases.

    per_degree maps d to a list of coefficient rows over the grevlex
    monomial basis of degree d.
    """

    def __init__(self, ring, field, per_degree):
        self.ring = ring
        self.field = field
        self.per_degree = {d: linalg.row_space(rows, field) if rows else []
                           for d, rows in per_degree.items()}

    @classmethod
    def from_generators(cls, gens, cap):
        """Ideal generated by homogeneous polynomials, stored up to cap."""
        if not gens:
            raise ValueError("no generators")
        ring, field = gens[0].ring, gens[0].field
        by_degree = {}
        for g in gens:
            if g.is_zero():
                continue
            by_degree.setdefault(g.degree, []).append(g)
        per = {}
        current = []  # polys spanning the previous degree piece
        dmin = min(by_degree) if by_degree else 0
        for d in range(0, cap + 1):
            nxt = []
            for p in current:
                for i in range(ring.nvars):
                    nxt.append(MultiPoly.variable(ring, field, i) * p)
            nxt.extend(by_degree.get(d, []))
            rows = linalg.row_space(polys_to_matrix(nxt), field) if nxt else []
            per[d] = rows
            current = [MultiPoly.from_vector(ring, field, d, r) for r in rows]
        return cls(ring, field, per)

    def piece(self, d):
        return self.per_degree.get(d, [])

    def dim_piece(self, d):
        return len(self.piece(d))

    def polys(self, d):
        return [MultiPoly.from_vector(self.ring, self.field, d, row)
                for row in self.piece(d)]

    def quotient_dim(self, d):
        return dim_degree(self.ring.nvars, d) - self.dim_piece(d)

    def hilbert_function(self, through):
        return tuple(self.quotient_dim(d) for d in range(through + 1))

    def contains_piecewise(self, other):
        """True iff every stored piece of other lies in this ideal's piece."""
        for d, rows in other.per_degree.items():
            mine = self.piece(d)
            for row in rows:
                if not mine or not linalg.row_space_contains(mine, row, self.field):
                    if any(self.field.normalize(x) != 0 for x in row):
                        return False
        return True


def perp(f, d):
    """RREF basis of (f^perp)_d: operators of degree d annihilating f."""
    if f.is_zero():
        raise ValueError("perp of the zero form")
    ring_op = dual_ring(f.ring)
    field = f.field
    rows = []
    for mono in monomials(ring_op.nvars, d):
        D = MultiPoly(ring_op, field, d, {mono: field.from_int(1)})
        rows.append(apply(D, f).vector())
    # unknowns are the operator coefficients, i.e. the row index
    return linalg.kernel(linalg.transpose(rows), field, ncols=len(rows))


def perp_ideal(f, cap=8):
    """f^perp as a GradedIdeal with pieces through the cap."""
    ring_op = dual_ring(f.ring)
    per = {d: perp(f, d) for d in range(cap + 1)}
    return GradedIdeal(ring_op, f.field, per)


def hilbert_function(f):
    """Hilbert function of T/f^perp, degrees 0..deg f."""
    if f.is_zero():
        raise ValueError("hilbert function of the zero form")
    n = f.ring.nvars
    return tuple(dim_degree(n, d) - len(perp(f, d)) for d in range(f.degree + 1))


def catalecticant(f):
    """The symmetric middle-pairing matrix (D_i D_j)(f) of a quartic."""
    if f.degree != 4:
        raise ValueError("catalecticant needs a quartic")
    ring_op = dual_ring(f.ring)
    field = f.field
    monos = monomials(ring_op.nvars, 2)
    ops = [MultiPoly(ring_op, field, 2, {m: field.from_int(1)}) for m in monos]
    mat = []
    for Di in ops:
        row = []
        for Dj in ops:
            row.append(apply(Di * Dj, f).terms.get((0,) * f.ring.nvars,
                                                   field.from_int(0)))
        mat.append(row)
    return mat


def catalecticant_rank(f):
    return linalg.rank(catalecticant(f), f.field)


def dual_socle(ideal, socle_degree=4, strict=False):
    """The form f with ideal_3 (and optionally ideal_4) inside f^perp.

    The joint annihilator in degree socle_degree must be 1-dimensional;
    the generator is returned monic in its grevlex-leading coefficient.
    """
    ring_op = ideal.ring
    ring_sym = dual_ring(ring_op)
    field = ideal.field
    n = ring_sym.nvars
    rows = []
    degrees = [socle_degree - 1] + ([socle_degree] if strict else [])
    f_monos = monomials(n, socle_degree)
    for d in degrees:
        for coeffs in ideal.piece(d):
            D = MultiPoly.from_vector(ring_op, field, d, coeffs)
            # linear conditions on f: apply(D, f) = 0 in S_{socle-d}
            out_monos = monomials(n, socle_degree - d)
            block = {m: [field.from_int(0)] * len(f_monos) for m in out_monos}
            for j, fm in enumerate(f_monos):
                img = apply(D, MultiPoly(ring_sym, field, socle_degree,
                                         {fm: field.from_int(1)}))
                for m, c in img.terms.items():
                    block[m][j] = c
            rows.extend(block[m] for m in out_monos)
    ker = linalg.kernel(rows, field, ncols=len(f_monos))
    if len(ker) != 1:
        raise ValueError(
            f"dual socle generator is not unique: annihilator dimension {len(ker)}")
    return MultiPoly.from_vector(ring_sym, field, socle_degree, ker[0]).monic()


def ideal_quotient_piece(ideal, D, d):
    """((ideal : D))_d = {E of degree d | E*D in ideal_{d+deg D}}."""
    ring = ideal.ring
    field = ideal.field
    target = ideal.piece(d + D.degree)
    rows = []
    monos = monomials(ring.nvars, d)
    for m in monos:
        E = MultiPoly(ring, field, d, {m: field.from_int(1)})
        rows.append((E * D).vector())
    if not target:
        # quotient piece = {E | E*D == 0}
        return linalg.kernel(linalg.transpose(rows), field, ncols=len(monos))
    # E*D must reduce to zero against the RREF basis of the target piece
    conds = []
    for r in rows:
        v = list(r)
        for brow in target:
            lead = next((c for c, x in enumerate(brow) if x != 0), None)
            if lead is not None and v[lead] != 0:
                fct = v[lead]
                v = [field.normalize(x - fct * y) for x, y in zip(v, brow)]
        conds.append(v)
    return linalg.kernel(linalg.transpose(conds), field, ncols=len(monos))


def colon_perp_check(f, D):
    """Exactness of the colon identity (f^perp : D) = (D f)^perp, degreewise."""
    if D.degree > f.degree:
        raise ValueError("operator degree exceeds form degree")
    g = apply(D, f)
    fperp = perp_ideal(f, cap=f.degree)
    for d in range(0, f.degree - D.degree + 1):
        lhs = ideal_quotient_piece(fperp, D, d)
        if g.is_zero():
            rhs = linalg.identity(dim_degree(f.ring.nvars, d), f.field)
            rhs = linalg.row_space(rhs, f.field)
        else:
            rhs = perp(g, d)
        if linalg.row_space(lhs, f.field) != linalg.row_space(rhs, f.field):
            return False
    return True
