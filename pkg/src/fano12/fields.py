"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Scalars are raw values (``gmpy2.mpq`` over the rationals, plain ``int`` in
``[0, p)`` over a prime field).  A field object normalizes values and
provides the few operations that need to know the field (inverses,
coercion).  Everything is exact; floating point is never used.
"""

from gmpy2 import mpq


class Rationals:
    """The field of rational numbers, values stored as reduced mpq."""

    char = 0

    def normalize(self, x):
        return mpq(x)

    def from_int(self, n):
        return mpq(n)

    def from_fraction(self, num, den):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return mpq(num, den)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / mpq(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


QQ = Rationals()


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The prime field F_p, values stored as ints in [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p

    def normalize(self, x):
        return int(x) % self.p

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, num, den):
        den = den % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator divisible by {self.p}")
        return num * pow(den, self.p - 2, self.p) % self.p

    def from_mpq(self, q):
        """Reduce a rational mod p; denominator must be prime to p."""
        q = mpq(q)
        return self.from_fraction(int(q.numerator), int(q.denominator))

    def inv(self, a):
        a = a % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def GF(p):
    return PrimeField(p)
