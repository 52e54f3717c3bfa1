"""Command-line front end.

Polynomial arguments are inline text in the polynomial grammar, or paths
to UTF-8 files containing one polynomial.  Exit codes: 0 pass, 1 verdict
failure, 2 degenerate input, 3 parse error.
"""

import argparse
import os
import sys

from . import apolar, invariants, netquad, resolve, skewfano, waring
from .census import ReductionError, census, reduce_mod
from .circle import StageError, circle
from .fields import QQ, PrimeField
from .netquad import DegenerateNetError, NetOfQuadrics
from .rings import PLANE_S, SPACE_T
from .skewfano import SkewNetError
from .textio import RINGS_BY_NAME, PolyParseError, parse_poly, print_poly


def _read_arg(text):
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            return fh.read().strip()
    return text


def _guess_ring(text):
    for ch in text:
        if ch in RINGS_BY_NAME:
            return RINGS_BY_NAME[ch]
    raise PolyParseError("no recognized variable in input", 0)


def _parse(text, field, ring=None):
    text = _read_arg(text)
    if ring is None:
        ring = _guess_ring(text)
    return parse_poly(text, ring, field)


def _parse_net(args, field):
    return NetOfQuadrics([_parse(t, field, SPACE_T) for t in args])


def _field(args):
    return PrimeField(args.prime) if args.prime else QQ


def _print_matrix(m, label):
    for row in m:
        print(label, ",".join(str(x) for x in row))


def cmd_cat(args):
    f = _parse(args.quartic, _field(args), PLANE_S)
    m = apolar.catalecticant(f)
    _print_matrix(m, "cat")
    print("rank", apolar.catalecticant_rank(f))
    return 0


def cmd_hf(args):
    f = _parse(args.poly, _field(args))
    print("hf", ",".join(str(x) for x in apolar.hilbert_function(f)))
    return 0


def cmd_perp(args):
    f = _parse(args.poly, _field(args))
    ideal = apolar.perp_ideal(f, cap=args.cap)
    for g in resolve._ideal_generators(ideal, args.cap):
        print("generator", g.degree, print_poly(g))
    return 0


def cmd_aronhold(args):
    g = _parse(args.cubic, _field(args), PLANE_S)
    print("aronhold", invariants.aronhold(g))
    return 0


def cmd_covariant(args):
    f = _parse(args.quartic, _field(args), PLANE_S)
    print("covariant", print_poly(invariants.covariant_quartic(f)))
    return 0


def cmd_classify(args):
    f = _parse(args.quartic, _field(args), PLANE_S)
    hf, degs, row = waring.classify(f, cap=args.cap)
    print("hf", ",".join(str(x) for x in hf))
    print("generator_degrees", ",".join(str(d) for d in degs))
    print("row", "none" if row is None else row)
    return 0 if row is not None else 1


def cmd_weights(args):
    field = _field(args)
    f = _parse(args.quartic, field, PLANE_S)
    lines = [_parse(t, field, PLANE_S) for t in args.lines]
    sol = waring.solve_weights(f, lines)
    print("status", sol.status)
    if sol.weights is not None:
        print("weights", ",".join(str(w) for w in sol.weights))
    return 0 if sol.status != "none" else 1


def cmd_discriminant(args):
    net = _parse_net(args.quadrics, _field(args))
    print("discriminant", print_poly(netquad.discriminant(net)))
    return 0


def cmd_jacobian(args):
    net = _parse_net(args.quadrics, _field(args))
    for c in netquad.jacobian_minors(net):
        print("minor", print_poly(c))
    return 0


def cmd_resolve(args):
    field = _field(args)
    if len(args.polys) == 1:
        f = _parse(args.polys[0], field, PLANE_S)
        ideal = apolar.perp_ideal(f, cap=args.cap)
    else:
        ideal = netquad.q_perp(_parse_net(args.polys, field), cap=args.cap)
    res = resolve.min_res(ideal, cap=args.cap)
    for (h, d, r) in res.betti_entries():
        print("betti", h, d, r)
    return 0


def _eta_of(args):
    field = _field(args)
    net = _parse_net(args.quadrics, field)
    res = resolve.min_res(netquad.q_perp(net, cap=args.cap), cap=args.cap)
    eta = skewfano.eta_from_tor(net, res)
    return skewfano.attach_n_to_udual(eta, res, net), net


def cmd_eta(args):
    eta, _ = _eta_of(args)
    for k in range(3):
        _print_matrix(eta.forms[k], f"eta {k}")
    _print_matrix(eta.n_to_udual, "n_to_udual")
    return 0


def cmd_pfaffian(args):
    eta, _ = _eta_of(args)
    cubics = skewfano.pfaffian_ideal(eta)
    for c in cubics:
        print("pfaffian_cubic", print_poly(c))
    print("dual_socle", print_poly(skewfano.pfaffian_quartic(eta)))
    return 0


def cmd_circle(args):
    net = _parse_net(args.quadrics, QQ)
    report = circle(net, cap=args.cap)
    sys.stdout.write(report.serialize())
    return 0 if report.passed else 1


def cmd_census(args):
    net = _parse_net(args.quadrics, QQ)
    res = resolve.min_res(netquad.q_perp(net, cap=args.cap), cap=args.cap)
    eta = skewfano.eta_from_tor(net, res)
    p = args.prime or 11
    report = census(reduce_mod(eta, p),
                           pair_budget=args.budget, seed=args.seed)
    sys.stdout.write(report.serialize())
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="fano12",
        description="Exact computations relating plane quartics, nets of "
        "quadrics, and nets of alternating forms.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--prime", type=int, default=None,
                       help="work over the prime field F_p")
        p.add_argument("--cap", type=int, default=8,
                       help="degree cap for graded computations")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized sampling")
        p.set_defaults(fn=fn)
        return p

    add("cat", cmd_cat, "catalecticant matrix and rank of a plane quartic"
        ).add_argument("quartic")
    add("hf", cmd_hf, "Hilbert function of the apolar algebra"
        ).add_argument("poly")
    add("perp", cmd_perp, "minimal generators of the apolar ideal"
        ).add_argument("poly")
    add("aronhold", cmd_aronhold, "Aronhold invariant of a plane cubic"
        ).add_argument("cubic")
    add("covariant", cmd_covariant, "covariant quartic of a plane quartic"
        ).add_argument("quartic")
    add("classify", cmd_classify, "Hilbert function and apolar-ideal row "
        "of a plane quartic").add_argument("quartic")
    p = add("weights", cmd_weights, "solve for fourth-power weights "
            "expressing a quartic")
    p.add_argument("quartic")
    p.add_argument("lines", nargs="+")
    add("discriminant", cmd_discriminant, "discriminant quartic of a net "
        "of space quadrics").add_argument("quadrics", nargs=3)
    add("jacobian", cmd_jacobian, "jacobian minor cubics of a net"
        ).add_argument("quadrics", nargs=3)
    add("resolve", cmd_resolve, "Betti table of the apolar ideal of a "
        "quartic or a net").add_argument("polys", nargs="+")
    add("eta", cmd_eta, "net of alternating forms attached to a net of "
        "quadrics").add_argument("quadrics", nargs=3)
    add("pfaffian", cmd_pfaffian, "pfaffian cubics and dual socle quartic "
        "of the alternating net").add_argument("quadrics", nargs=3)
    add("circle", cmd_circle, "run the full circle of constructions and "
        "report exact verdicts").add_argument("quadrics", nargs=3)
    p = add("census", cmd_census, "enumerate isotropic planes and sample "
            "lines over F_p")
    p.add_argument("quadrics", nargs=3)
    p.add_argument("--budget", type=int, default=20000,
                   help="number of plane pairs to try when sampling lines")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except PolyParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except (DegenerateNetError, StageError, SkewNetError,
            resolve.ResolutionError, ReductionError,
            waring.HexagonDegenerationError) as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
