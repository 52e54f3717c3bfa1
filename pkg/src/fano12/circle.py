"""The circle of constructions on a net of quadrics: net -> apolar
algebra -> resolution -> skew net -> pfaffian quartic -> covariant, with
exact proportionality verdicts against the net's discriminant."""

from dataclasses import dataclass

from . import apolar, invariants, linalg, netquad, resolve, skewfano
from .rings import MultiPoly, dim_degree, linear_form


class StageError(ValueError):
    """A named stage of the circle failed on a degenerate input."""

    def __init__(self, stage, message):
        super().__init__(f"stage {stage}: {message}")
        self.stage = stage


def proportional(f, g):
    """The exact scalar lam with f = lam * g, or None; compares term
    dictionaries, so the two polynomials may live in parallel rings."""
    if f.is_zero() or g.is_zero():
        return None
    if set(f.terms) != set(g.terms):
        return None
    field = f.field
    e0, c0 = next(iter(sorted(f.terms.items())))
    lam = field.normalize(c0 * field.inv(g.terms[e0]))
    for e, c in f.terms.items():
        if field.normalize(c - lam * g.terms[e]) != 0:
            return None
    return lam


def substitute_linear(f, M):
    """f with variable i replaced by the linear form sum_j M[i][j] u_j
    (same ring, same variable count)."""
    ring = f.ring
    field = f.field
    n = ring.nvars
    lins = [linear_form(ring, field,
                        [field.normalize(M[i][j]) for j in range(n)])
            for i in range(n)]
    out = MultiPoly.zero(ring, field, f.degree)
    for e, c in f.terms.items():
        zero_exp = tuple([0] * n)
        term = MultiPoly(ring, field, 0, {zero_exp: c})
        for i, k in enumerate(e):
            for _ in range(k):
                term = term * lins[i]
        out = out + term
    return out


@dataclass
class CircleReport:
    net: object
    discriminant: object          # S_q, quartic in u
    betti: tuple                  # (homological degree, degree, rank)
    eta: object                   # SkewNet with n_to_udual attached
    pfaffian_cubics: list
    pfaffian_hf: tuple
    f_q: object                   # dual socle quartic in N coordinates
    f_q_u: object                 # F_q transported to u-coordinates
    covariant: object             # S_{F_q}
    covariant_u: object           # S_{F_q} transported to u-coordinates
    scalar_covariant_vs_disc: object   # S_{F_q}(G^{-1} u) = lam * S_q(u)
    scalar_f_vs_disc: object      # F_q(G^{-1} u) = lam * S_q(u), or None
    scalar_covariant_vs_f: object  # S_{F_q} = lam * F_q, or None

    @property
    def passed(self):
        return (self.pfaffian_hf == (1, 3, 6, 3, 1)
                and self.scalar_covariant_vs_disc is not None)

    def serialize(self):
        from .textio import print_poly
        lines = []
        for i, q in enumerate(self.net.quadrics):
            lines.append(f"quadric {i} {print_poly(q)}")
        lines.append(f"discriminant {print_poly(self.discriminant)}")
        for (h, d, r) in self.betti:
            lines.append(f"betti {h} {d} {r}")
        for k in range(3):
            rows = ";".join(",".join(str(x) for x in row)
                            for row in self.eta.forms[k])
            lines.append(f"eta {k} {rows}")
        rows = ";".join(",".join(str(x) for x in row)
                        for row in self.eta.n_to_udual)
        lines.append(f"n_to_udual {rows}")
        for c in self.pfaffian_cubics:
            lines.append(f"pfaffian_cubic {print_poly(c)}")
        lines.append("pfaffian_hf " + ",".join(str(x)
                                               for x in self.pfaffian_hf))
        lines.append(f"f_q {print_poly(self.f_q)}")
        lines.append(f"f_q_u {print_poly(self.f_q_u)}")
        lines.append(f"covariant {print_poly(self.covariant)}")
        lines.append(f"covariant_u {print_poly(self.covariant_u)}")
        lines.append(f"scalar_covariant_vs_disc "
                     f"{self.scalar_covariant_vs_disc}")
        lines.append(f"scalar_f_vs_disc {self.scalar_f_vs_disc}")
        lines.append(f"scalar_covariant_vs_f {self.scalar_covariant_vs_f}")
        lines.append(f"verdict {'pass' if self.passed else 'fail'}")
        return "\n".join(lines) + "\n"


def circle(net, cap=8):
    """Run the whole circle on a net of quadrics over the rationals."""
    field = net.field
    ideal = netquad.q_perp(net, cap=cap)
    hf = ideal.hilbert_function(3)
    if hf[:4] != (1, 4, 3, 0):
        raise StageError("q_perp", f"Hilbert function {hf[:4]} instead of "
                         "(1, 4, 3, 0)")
    try:
        disc = netquad.discriminant(net)
    except netquad.DegenerateNetError as exc:
        raise StageError("discriminant", str(exc)) from exc
    res = resolve.min_res(ideal, cap=cap)
    if not resolve.has_net_shape(res):
        raise StageError("resolution",
                         f"Betti table {res.betti_entries()}")
    try:
        eta = skewfano.eta_from_tor(net, res)
        eta = skewfano.attach_n_to_udual(eta, res, net)
    except (skewfano.SkewNetError, resolve.ResolutionError) as exc:
        raise StageError("eta", str(exc)) from exc
    cubics = skewfano.pfaffian_ideal(eta)
    nz = [c for c in cubics if not c.is_zero()]
    if not nz:
        raise StageError("pfaffian", "pfaffian ideal is zero")
    pid = apolar.GradedIdeal.from_generators(nz, cap=5)
    phf = tuple(dim_degree(3, d) - pid.dim_piece(d) for d in range(5))
    if phf != (1, 3, 6, 3, 1):
        raise StageError("pfaffian", f"quotient Hilbert function {phf}")
    try:
        f_q = apolar.dual_socle(pid, socle_degree=4)
    except ValueError as exc:
        raise StageError("dual_socle", str(exc)) from exc
    try:
        cov = invariants.covariant_quartic(f_q)
    except ValueError as exc:
        raise StageError("covariant", str(exc)) from exc
    g_inv = linalg.mat_inv(eta.n_to_udual, field)
    f_q_u = substitute_linear(f_q, g_inv)
    cov_u = substitute_linear(cov, g_inv)
    return CircleReport(
        net=net, discriminant=disc, betti=tuple(res.betti_entries()),
        eta=eta, pfaffian_cubics=cubics, pfaffian_hf=phf, f_q=f_q,
        f_q_u=f_q_u, covariant=cov, covariant_u=cov_u,
        scalar_covariant_vs_disc=proportional(cov_u, disc),
        scalar_f_vs_disc=proportional(f_q_u, disc),
        scalar_covariant_vs_f=proportional(cov, f_q))
