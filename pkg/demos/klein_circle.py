"""Walk the circle of constructions on the Klein net of quadrics.

The net q = (z1^2/2 - z0*z2, z2^2/2 - z0*z3, z3^2/2 - z0*z1) is the
worked example for which everything closes up exactly: the discriminant,
the pfaffian dual socle quartic, and its covariant are all the Klein
curve x0^3*x1 + x1^3*x2 + x2^3*x0.
"""

from fano12 import gallery, netquad, resolve
from fano12.circle import circle
from fano12.textio import print_poly


def main():
    net = gallery.klein_net()
    print("The net of quadrics:")
    for q in net.quadrics:
        print("  ", print_poly(q))

    ideal = netquad.q_perp(net)
    print("\nHilbert function of the apolar algebra:",
          ideal.hilbert_function(3))

    res = resolve.min_res(ideal)
    print("\nBetti table of the minimal free resolution")
    print("(homological degree, internal degree, rank):")
    for entry in res.betti_entries():
        print("  ", entry)

    report = circle(net)
    print("\nAlternating forms eta on the 7-space of net quadrics:")
    for k, m in enumerate(report.eta.forms):
        print(f"  eta_{k}:")
        for row in m:
            print("    ", " ".join(f"{str(x):>2}" for x in row))
    print("\nPfaffian cubics cut out the apolar ideal of:")
    print("  F_q =", print_poly(report.f_q))
    print("Its covariant quartic:")
    print("  S_F =", print_poly(report.covariant))
    print("Discriminant of the net:")
    print("  S_q =", print_poly(report.discriminant))
    print("\nExact proportionality scalars:")
    print("  covariant vs discriminant:", report.scalar_covariant_vs_disc)
    print("  dual socle vs discriminant:", report.scalar_f_vs_disc)
    print("  covariant vs dual socle:  ", report.scalar_covariant_vs_f)
    print("\nverdict:", "pass" if report.passed else "fail")


if __name__ == "__main__":
    main()
