"""The degree-4 invariant of plane cubics cutting out the anharmonic
locus, the covariant quartic it induces, Hessians, and the rank-1
correspondence fibers.
"""

from . import linalg
from .apolar import GradedIdeal, hilbert_function, perp
from .rings import (MultiPoly, Point, Ring, SYMBOL, apply, dual_ring,
                    mixed_polar_matrix, monomials)

CONE = "cone"

# exponent tuples of the normalized cubic coordinates (a, b, c, d, e, f,
# g, h, i, j) and the multiplicities dividing the monomial coefficients
_CUBIC_COORDS = [
    ((3, 0, 0), 1),  # a
    ((0, 3, 0), 1),  # b
    ((0, 0, 3), 1),  # c
    ((2, 1, 0), 3),  # d
    ((2, 0, 1), 3),  # e
    ((1, 2, 0), 3),  # f
    ((0, 2, 1), 3),  # g
    ((1, 0, 2), 3),  # h
    ((0, 1, 2), 3),  # i
    ((1, 1, 1), 6),  # j
]


def cubic_coords(g):
    """Normalized coordinates (a..j) of a plane cubic.

    The cubic equals a*x0^3 + b*x1^3 + c*x2^3 + 3d*x0^2*x1 + 3e*x0^2*x2
    + 3f*x1^2*x0 + 3g*x1^2*x2 + 3h*x2^2*x0 + 3i*x2^2*x1 + 6j*x0*x1*x2.
    Needs characteristic 0 or p >= 5.
    """
    if g.degree != 3 or g.ring.nvars != 3:
        raise ValueError("needs a plane cubic")
    field = g.field
    if field.char in (2, 3):
        raise ValueError("cubic coordinates need characteristic 0 or >= 5")
    out = []
    for expo, mult in _CUBIC_COORDS:
        c = g.terms.get(expo, field.from_int(0))
        out.append(field.normalize(c * field.from_fraction(1, mult)))
    return out


# The quartic invariant in the coordinates (a..j), as (coefficient,
# exponent-by-coordinate-index) pairs.  Index order: a=0 b=1 c=2 d=3 e=4
# f=5 g=6 h=7 i=8 j=9.
_I4_TERMS = [
    (1, {0: 1, 1: 1, 2: 1, 9: 1}),          # abcj
    (-1, {1: 1, 2: 1, 3: 1, 4: 1}),         # -bcde
    (-1, {2: 1, 0: 1, 5: 1, 6: 1}),         # -cafg
    (-1, {0: 1, 1: 1, 7: 1, 8: 1}),         # -abhi
    (-1, {9: 1, 0: 1, 6: 1, 8: 1}),         # -j*agi
    (-1, {9: 1, 1: 1, 7: 1, 4: 1}),         # -j*bhe
    (-1, {9: 1, 2: 1, 3: 1, 5: 1}),         # -j*cdf
    (1, {0: 1, 5: 1, 8: 2}),                # afi^2
    (1, {0: 1, 7: 1, 6: 2}),                # ahg^2
    (1, {1: 1, 3: 1, 7: 2}),                # bdh^2
    (1, {1: 1, 8: 1, 4: 2}),                # bie^2
    (1, {2: 1, 6: 1, 3: 2}),                # cgd^2
    (1, {2: 1, 4: 1, 5: 2}),                # cef^2
    (-1, {9: 4}),                           # -j^4
    (2, {9: 2, 5: 1, 7: 1}),                # 2j^2*fh
    (2, {9: 2, 8: 1, 3: 1}),                # 2j^2*id
    (2, {9: 2, 4: 1, 6: 1}),                # 2j^2*eg
    (-3, {9: 1, 3: 1, 6: 1, 7: 1}),         # -3j*dgh
    (-3, {9: 1, 4: 1, 5: 1, 8: 1}),         # -3j*efi
    (-1, {5: 2, 7: 2}),                     # -f^2h^2
    (-1, {8: 2, 3: 2}),                     # -i^2d^2
    (-1, {4: 2, 6: 2}),                     # -e^2g^2
    (1, {8: 1, 3: 1, 4: 1, 6: 1}),          # ideg
    (1, {4: 1, 6: 1, 5: 1, 7: 1}),          # egfh
    (1, {5: 1, 7: 1, 8: 1, 3: 1}),          # fhid
]


def _eval_i4(coords, mul, add, one):
    """Evaluate the invariant with supplied ring operations."""
    total = None
    for coeff, expo in _I4_TERMS:
        term = one(coeff)
        for idx, e in expo.items():
            for _ in range(e):
                term = mul(term, coords[idx])
        total = term if total is None else add(total, term)
    return total


def aronhold(g):
    """The quartic invariant of a plane cubic; zero iff g is anharmonic."""
    coords = cubic_coords(g)
    field = g.field
    return _eval_i4(coords,
                    mul=lambda a, b: field.normalize(a * b),
                    add=lambda a, b: field.normalize(a + b),
                    one=field.from_int)


def is_complete_intersection_perp(g):
    """Whether g^perp is a complete intersection of its three quadrics.

    Returns True/False, or the string "cone" when g is a cone (detected
    by HF(A^g)(1) < 3), where the equivalence with the invariant breaks.
    """
    hf = hilbert_function(g)
    if hf[1] < 3:
        return CONE
    quadrics = [MultiPoly.from_vector(dual_ring(g.ring), g.field, 2, row)
                for row in perp(g, 2)]
    if len(quadrics) != 3:
        return False
    return not _has_linear_syzygy(quadrics)


def _has_linear_syzygy(quadrics):
    """Whether sum l_i * q_i = 0 has a nonzero linear solution."""
    ring, field = quadrics[0].ring, quadrics[0].field
    n = ring.nvars
    cols = []
    for q in quadrics:
        for i in range(n):
            cols.append((MultiPoly.variable(ring, field, i) * q).vector())
    ker = linalg.kernel(linalg.transpose(cols), field, ncols=len(cols))
    return bool(ker)


def covariant_quartic(f):
    """The covariant quartic of f: the form a -> I4(polar cubic of f at a).

    Returned in a fresh symbol ring with variables a0, a1, a2; raises if
    the result vanishes identically (degenerate input).
    """
    if f.degree != 4 or f.ring.nvars != 3:
        raise ValueError("needs a plane quartic")
    field = f.field
    ring_a = Ring(("a0", "a1", "a2"), SYMBOL)
    op = dual_ring(f.ring)
    # polar cubic at a symbolic point: coefficients linear in a
    polars = [apply(MultiPoly.variable(op, field, k), f) for k in range(3)]
    coords = []
    for expo, mult in _CUBIC_COORDS:
        terms = {}
        for k in range(3):
            c = polars[k].terms.get(expo)
            if c is not None:
                e = [0, 0, 0]
                e[k] = 1
                terms[tuple(e)] = field.normalize(c * field.from_fraction(1, mult))
        coords.append(MultiPoly(ring_a, field, 1, terms))
    zero4 = MultiPoly.zero(ring_a, field, 4)
    result = _eval_i4(
        coords,
        mul=lambda a, b: a * b,
        add=lambda a, b: a + b,
        one=lambda c: MultiPoly(ring_a, field, 0, {(0, 0, 0): field.from_int(c)}))
    if result.is_zero():
        raise ValueError("covariant quartic vanishes identically (degenerate)")
    if result.degree != 4:
        result = zero4 + result
    return result


def hessian(f):
    """Determinant of the matrix of second partials."""
    if f.ring.nvars != 3:
        raise ValueError("needs 3 variables")
    field = f.field
    op = dual_ring(f.ring)
    seconds = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            D = MultiPoly(op, field, 2, {tuple(e): field.from_int(1)})
            g = apply(D, f)
            if i != j:
                # the apolarity action already carries the 1-of-each
                # mixed factor; diagonal entries carry 2! = 2
                pass
            seconds[i][j] = g
    return _poly_det3(seconds)


def _poly_det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def tf_fiber_ideal(f, a, cap=6):
    """Ideal of 2x2 minors of the mixed second polar at a, in b-variables."""
    mat = mixed_polar_matrix(f, a)
    minors = []
    for r1 in range(3):
        for r2 in range(r1 + 1, 3):
            for c1 in range(3):
                for c2 in range(c1 + 1, 3):
                    minors.append(mat[r1][c1] * mat[r2][c2]
                                  - mat[r1][c2] * mat[r2][c1])
    nonzero = [m for m in minors if not m.is_zero()]
    if not nonzero:
        raise ValueError("mixed polar matrix has rank <= 1 identically")
    return GradedIdeal.from_generators(nonzero, cap=cap)


def tf_fiber_colength(f, a, cap=6):
    """Stable quotient dimension of the fiber ideal, or None if unstable."""
    ideal = tf_fiber_ideal(f, a, cap=cap)
    dims = [ideal.quotient_dim(d) for d in range(2, cap + 1)]
    return dims[-1] if dims[-1] == dims[-2] else None


def united_point_rank(f, a):
    """Rank of the mixed polar matrix evaluated at b = a.

    Rank >= 2 at every a certifies the correspondence has no united
    points there.
    """
    mat = mixed_polar_matrix(f, a)
    field = f.field
    coords = [field.normalize(c) for c in a.coords]
    scat = [[e.evaluate(coords) for e in row] for row in mat]
    return linalg.rank(scat, field)
