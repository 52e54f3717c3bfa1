"""Count isotropic 3-spaces of the Klein alternating net over small
prime fields, and read off twisted cubics and lines.

Over F_p the isotropic 3-spaces are the F_p-points of the genus-12 Fano
3-fold; for the Klein net the count over F_11 is 11^3 + 11^2 + 11 + 1.
Each point carries a twisted cubic in P^3, and pairs of points meeting
in a 2-space give lines with a marked point on the covariant quartic.
"""

from fano12 import gallery, netquad, resolve, skewfano
from fano12.census import (enumerate_points, line_members, reduce_mod,
                           sample_lines)
from fano12.textio import print_poly


def main():
    net = gallery.klein_net()
    res = resolve.min_res(netquad.q_perp(net))
    eta = skewfano.eta_from_tor(net, res)

    for p in (2, 3, 11):
        etap = reduce_mod(eta, p)
        points = enumerate_points(etap)
        print(f"F_{p}: {len(points)} isotropic 3-spaces")

    eta11 = reduce_mod(eta, 11)
    points = enumerate_points(eta11)

    E = points[0]
    tau2, ideal = skewfano.twisted_cubic(eta11, E)
    print("\nFirst point, rows of E:", E.rows)
    print("Hilbert-Burch matrix of its twisted cubic:")
    for row in tau2:
        print("  ", [print_poly(x) for x in row])

    lines, tested, _ = sample_lines(eta11, points, pair_budget=5000, seed=1)
    print(f"\n{len(lines)} lines found among {tested} sampled pairs")
    for line in lines[:3]:
        r = line.common_factor_r
        a = skewfano.line_to_point(line, eta11)
        print("  common linear factor", print_poly(r),
              "| marked covariant point", list(a),
              "|", len(line_members(line, eta11)), "member 3-spaces")


if __name__ == "__main__":
    main()
