"""Canonical named inputs used throughout the tests and demos."""

from .fields import QQ
from .netquad import NetOfQuadrics
from .rings import PLANE_S, SPACE_T, linear_form
from .textio import parse_poly


def klein_quartic(field=QQ):
    """The plane quartic x0^3*x1 + x1^3*x2 + x2^3*x0."""
    return parse_poly("x0^3*x1 + x1^3*x2 + x2^3*x0", PLANE_S, field)


def klein_net(field=QQ):
    """The net of quadrics in the z-variables whose circle of
    constructions closes up on the quartic above."""
    qs = tuple(parse_poly(s, SPACE_T, field) for s in (
        "1/2*z1^2 - z0*z2",
        "1/2*z2^2 - z0*z3",
        "1/2*z3^2 - z0*z1",
    ))
    return NetOfQuadrics(qs)


def _square_of_linear(coeffs, field):
    v = linear_form(SPACE_T, field, [field.from_int(c) for c in coeffs])
    return v * v


def definite_net(field=QQ):
    """A net whose discriminant quartic has positive definite
    catalecticant, hence no polar hexagon over the reals."""
    q2 = (_square_of_linear((0, 1, 1, 1), field)
          + _square_of_linear((1, 1, 0, -1), field)
          - _square_of_linear((1, -1, 0, 1), field)
          - _square_of_linear((1, 1, -1, 0), field))
    qs = (
        parse_poly("z0^2 + z1^2 - z2^2 - z3^2", SPACE_T, field),
        parse_poly("z0*z2 + z1*z3", SPACE_T, field),
        q2,
    )
    return NetOfQuadrics(qs)


def mukai_umemura_quartic(field=QQ, variant="+"):
    """The double conics (x0^2 + x1^2 +/- x2^2)^2, the two real plane
    models of the same quartic; both are fixed by the covariant."""
    sign = "+" if variant == "+" else "-"
    conic = parse_poly(f"x0^2 + x1^2 {sign} x2^2", PLANE_S, field)
    return conic * conic


def fermat_cubic(field=QQ):
    return parse_poly("x0^3 + x1^3 + x2^3", PLANE_S, field)
