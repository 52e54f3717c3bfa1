"""Graded multivariate polynomials in dual variable sets.

Two sides: a symbol side (forms, acted on) and an operator side
(constant-coefficient differential operators).  The differentiation
action is ``op^a (x^b) = a! * binom(b, a) * x^(b-a)``, and the roles can
be interchanged with the mirrored normalization ``x^b (op^a) =
b! * binom(a, b) * op^(a-b)``.

Polynomials are sparse (exponent tuple -> scalar), homogeneous, and
canonically ordered in graded reverse lexicographic order.
"""

from dataclasses import dataclass, field as dfield
from functools import lru_cache
from math import comb, factorial

SYMBOL = "symbol"
OPERATOR = "operator"


@dataclass(frozen=True)
class Ring:
    """A polynomial ring tag: variable names plus which side it plays."""

    names: tuple
    side: str

    @property
    def nvars(self):
        return len(self.names)

    def __repr__(self):
        return f"Ring({','.join(self.names)};{self.side})"


# the four rings of the toolkit
PLANE_S = Ring(("x0", "x1", "x2"), SYMBOL)
PLANE_T = Ring(("d0", "d1", "d2"), OPERATOR)
SPACE_T = Ring(("z0", "z1", "z2", "z3"), SYMBOL)
SPACE_R = Ring(("w0", "w1", "w2", "w3"), OPERATOR)

_DUALS = {PLANE_S: PLANE_T, PLANE_T: PLANE_S, SPACE_T: SPACE_R, SPACE_R: SPACE_T}


def dual_ring(ring):
    return _DUALS[ring]


def _grevlex_key(expo):
    # descending total degree, then reverse lexicographic:
    # a > b iff the last nonzero entry of a-b is negative.
    return (-sum(expo), tuple(reversed(expo)))


@lru_cache(maxsize=None)
def monomials(nvars, degree):
    """All exponent tuples of the given total degree, grevlex-descending."""
    if degree < 0:
        return ()

    def gen(rem, k):
        if k == 1:
            yield (rem,)
            return
        for e in range(rem, -1, -1):
            for rest in gen(rem - e, k - 1):
                yield (e,) + rest

    return tuple(sorted(gen(degree, nvars), key=_grevlex_key))


@lru_cache(maxsize=None)
def monomial_index(nvars, degree):
    return {m: i for i, m in enumerate(monomials(nvars, degree))}


def dim_degree(nvars, degree):
    """dim of the space of forms of the given degree."""
    if degree < 0:
        return 0
    return comb(degree + nvars - 1, nvars - 1)


class MultiPoly:
    """A homogeneous sparse polynomial tagged with its ring and field."""

    __slots__ = ("ring", "field", "degree", "terms")

    def __init__(self, ring, field, degree, terms, _normalized=False):
        self.ring = ring
        self.field = field
        self.degree = degree
        if _normalized:
            self.terms = terms
        else:
            clean = {}
            for e, c in terms.items():
                if len(e) != ring.nvars or sum(e) != degree:
                    raise ValueError(f"exponent {e} not of degree {degree}")
                c = field.normalize(c)
                if c != 0:
                    clean[e] = c
            self.terms = clean

    @classmethod
    def zero(cls, ring, field, degree):
        return cls(ring, field, degree, {}, _normalized=True)

    @classmethod
    def variable(cls, ring, field, i):
        e = [0] * ring.nvars
        e[i] = 1
        return cls(ring, field, 1, {tuple(e): field.from_int(1)})

    @classmethod
    def from_vector(cls, ring, field, degree, vec):
        monos = monomials(ring.nvars, degree)
        return cls(ring, field, degree, dict(zip(monos, vec)))

    def vector(self):
        """Coefficient vector in the grevlex monomial basis of its degree."""
        zero = self.field.from_int(0)
        return [self.terms.get(m, zero) for m in monomials(self.ring.nvars, self.degree)]

    def is_zero(self):
        return not self.terms

    def _check_compatible(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other):
        self._check_compatible(other)
        if self.degree != other.degree:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise ValueError("degree mismatch in sum")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(self.ring, self.field, self.degree, terms)

    def __neg__(self):
        return MultiPoly(self.ring, self.field, self.degree,
                         {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field.normalize(c)
        return MultiPoly(self.ring, self.field, self.degree,
                         {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check_compatible(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(self.ring, self.field, self.degree + other.degree, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.ring == other.ring and self.field == other.field
                and self.terms == other.terms
                and (self.is_zero() or self.degree == other.degree))

    def __hash__(self):
        return hash((self.ring, self.degree, tuple(sorted(self.terms.items()))))

    def evaluate(self, point):
        """Value at a coordinate tuple (scalars of the same field)."""
        if len(point) != self.ring.nvars:
            raise ValueError("coordinate count mismatch")
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                for _ in range(k):
                    v = v * x
            total += v
        return self.field.normalize(total)

    def leading_coefficient(self):
        for m in monomials(self.ring.nvars, self.degree):
            if m in self.terms:
                return self.terms[m]
        return self.field.from_int(0)

    def monic(self):
        lc = self.leading_coefficient()
        if lc == 0:
            return self
        return self.scale(self.field.inv(lc))

    def map_coefficients(self, fn, field=None):
        return MultiPoly(self.ring, field or self.field, self.degree,
                         {e: fn(c) for e, c in self.terms.items()})

    def __repr__(self):
        from .textio import print_poly
        return print_poly(self)


@dataclass(frozen=True)
class Point:
    """Projective point: coordinate tuple, not all zero."""

    coords: tuple

    def __post_init__(self):
        if all(c == 0 for c in self.coords):
            raise ValueError("projective point needs a nonzero coordinate")


def linear_form(ring, field, coeffs):
    if len(coeffs) != ring.nvars:
        raise ValueError("coefficient count mismatch")
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * ring.nvars
        e[i] = 1
        terms[tuple(e)] = c
    return MultiPoly(ring, field, 1, terms)


def _diff_factor(alpha, beta):
    # alpha! * binom(beta, alpha), zero unless beta >= alpha
    f = 1
    for a, b in zip(alpha, beta):
        if a > b:
            return 0
        f *= factorial(a) * comb(b, a)
    return f


def apply(D, f):
    """Apolarity action of an operator-side D on a symbol-side f.

    Also accepts the interchanged roles (symbol acting on operator) with
    the mirrored normalization.  deg D > deg f gives zero.
    """
    if D.ring.nvars != f.ring.nvars:
        raise ValueError("variable count mismatch")
    if D.field != f.field:
        raise ValueError("field mismatch")
    if dual_ring(D.ring) != f.ring:
        raise ValueError(f"{D.ring} does not act on {f.ring}")
    field = f.field
    n = f.degree - D.degree
    if n < 0:
        return MultiPoly.zero(f.ring, field, 0)
    terms = {}
    for alpha, ca in D.terms.items():
        for beta, cb in f.terms.items():
            k = _diff_factor(alpha, beta)
            if k:
                e = tuple(b - a for a, b in zip(alpha, beta))
                terms[e] = terms.get(e, 0) + ca * cb * field.from_int(k)
    return MultiPoly(f.ring, field, n, terms)


def point_operator(ring_op, field, a):
    """P_a = sum a_i * op_i for a point a of the dual projective space."""
    return linear_form(ring_op, field, list(a.coords))


def polar(f, a, k=1):
    """k-th polar of f at a: apply(P_a^k, f)."""
    if k > f.degree:
        raise ValueError("polar order exceeds the degree")
    P = point_operator(dual_ring(f.ring), f.field, a)
    Pk = P
    for _ in range(k - 1):
        Pk = Pk * P
    return apply(Pk, f)


def mixed_polar_matrix(f, a):
    """Symmetric 3x3 matrix of the quadric x -> P_b(P_a(f)), linear in b.

    Entry (i, j) is a linear form in the b-variables (the ring of a's
    coordinates' dual side is reused for b).  For a quartic f this is the
    mixed second polar whose rank-1 locus defines the correspondence of
    covariant point pairs.
    """
    if f.degree != 4 or f.ring.nvars != 3:
        raise ValueError("needs a plane quartic")
    field = f.field
    g = polar(f, a, 1)  # cubic
    ring_b = Ring(("b0", "b1", "b2"), SYMBOL)
    n = 3
    mat = [[MultiPoly.zero(ring_b, field, 1) for _ in range(n)] for _ in range(n)]
    op = dual_ring(f.ring)
    for k in range(n):
        # coefficient of b_k: the quadric op_k(g), as half-Hessian matrix
        q = apply(MultiPoly.variable(op, field, k), g)
        bk = MultiPoly.variable(ring_b, field, k)
        for i in range(n):
            for j in range(n):
                e = [0] * n
                e[i] += 1
                e[j] += 1
                # convention q = x^T M x: off-diagonal entries take half
                # the mixed coefficient
                c = q.terms.get(tuple(e), field.from_int(0))
                if i != j:
                    c = field.normalize(c * field.from_fraction(1, 2))
                mat[i][j] = mat[i][j] + bk.scale(c)
    return mat


def polys_to_matrix(polys):
    """Stack coefficient vectors of same-degree polynomials as rows."""
    return [p.vector() for p in polys]
