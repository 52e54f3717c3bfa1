"""Parsing and printing of homogeneous polynomials.

Grammar: terms joined by + and -; a term is an optional coefficient
(integer or integer/integer) and '*'-joined var^exp factors.  Variables
are fixed per ring: x0..x2, d0..d2, w0..w3, z0..z3.
"""

import re

from .rings import MultiPoly, PLANE_S, PLANE_T, SPACE_R, SPACE_T

RINGS_BY_NAME = {"x": PLANE_S, "d": PLANE_T, "w": SPACE_R, "z": SPACE_T}


class PolyParseError(ValueError):
    """Syntax or homogeneity error, annotated with a position."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+\s*/\s*\d+)|(\d+)|([A-Za-z]\w*)|(\^)|(\*)|(\+)|(-))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise PolyParseError(f"unexpected character {text[pos:].lstrip()[0]!r}",
                                 pos)
        kind = m.lastindex
        tokens.append((kind, m.group(kind).replace(" ", ""), m.start(kind)))
        pos = m.end()
    return tokens


def parse_poly(text, ring, field):
    """Parse a homogeneous polynomial over the given ring and field."""
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty input", 0)
    terms = []  # (sign, coeff string or None, [(var index, exp)], pos)
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        while i < n and tokens[i][0] in (6, 7):
            if tokens[i][0] == 7:
                sign = -sign
            i += 1
        if not first and sign == 1 and tokens[i - 1][0] not in (6, 7):
            raise PolyParseError("expected '+' or '-' between terms", tokens[i][2])
        if i >= n:
            raise PolyParseError("dangling sign", tokens[-1][2])
        first = False
        coeff = None
        factors = []
        expect_factor = True
        pos0 = tokens[i][2]
        while i < n:
            kind, val, pos = tokens[i]
            if kind in (6, 7):
                break
            if kind in (1, 2):  # fraction or integer
                if not expect_factor or coeff is not None or factors:
                    raise PolyParseError("misplaced coefficient", pos)
                coeff = val
                i += 1
            elif kind == 3:  # variable
                if not expect_factor:
                    raise PolyParseError("missing '*' before variable", pos)
                exp = 1
                base = val
                i += 1
                if i < n and tokens[i][0] == 4:  # ^
                    i += 1
                    if i >= n or tokens[i][0] != 2:
                        raise PolyParseError("exponent must be an integer",
                                             tokens[i - 1][2])
                    exp = int(tokens[i][1])
                    i += 1
                factors.append((base, exp, pos))
            elif kind == 5:  # *
                i += 1
                expect_factor = True
                continue
            else:
                raise PolyParseError(f"unexpected token {val!r}", pos)
            expect_factor = False
            if i < n and tokens[i][0] == 5:
                i += 1
                expect_factor = True
        if coeff is None and not factors:
            raise PolyParseError("empty term", pos0)
        terms.append((sign, coeff, factors, pos0))

    degree = None
    poly_terms = {}
    for sign, coeff, factors, pos0 in terms:
        expo = [0] * ring.nvars
        for base, exp, pos in factors:
            letter = base[0]
            if letter not in RINGS_BY_NAME or RINGS_BY_NAME[letter] != ring:
                raise PolyParseError(
                    f"variable {base!r} does not belong to ring "
                    f"{','.join(ring.names)}", pos)
            try:
                idx = ring.names.index(base)
            except ValueError:
                raise PolyParseError(f"unknown variable {base!r}", pos) from None
            expo[idx] += exp
        d = sum(expo)
        if degree is None:
            degree = d
        elif d != degree:
            raise PolyParseError(
                f"not homogeneous: term of degree {d} after degree {degree}", pos0)
        if coeff is None:
            c = field.from_int(1)
        elif "/" in coeff:
            num, den = coeff.split("/")
            c = field.from_fraction(int(num), int(den))
        else:
            c = field.from_int(int(coeff))
        if sign < 0:
            c = -c
        key = tuple(expo)
        poly_terms[key] = poly_terms.get(key, 0) + c
    return MultiPoly(ring, field, degree, poly_terms)


def _coeff_str(c):
    s = str(c)
    return s


def print_poly(p):
    """Canonical grevlex printing; parse(print(p)) == p."""
    from .rings import monomials

    if p.is_zero():
        return "0"
    parts = []
    for mono in monomials(p.ring.nvars, p.degree):
        if mono not in p.terms:
            continue
        c = p.terms[mono]
        neg = c < 0
        mag = -c if neg else c
        factors = []
        for name, e in zip(p.ring.names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        if not factors:
            term = _coeff_str(mag)
        elif mag == 1:
            term = body
        else:
            term = f"{_coeff_str(mag)}*{body}"
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts)
