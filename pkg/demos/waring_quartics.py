"""Waring decompositions of plane quartics: catalecticant rank, the
classification by Hilbert function, and explicit weight solving.

A general quartic is a sum of six fourth powers of linear forms (a
polar hexagon); special quartics fall into finitely many rows of the
classification by the Hilbert function of the apolar algebra and the
generator degrees of the apolar ideal.
"""

from fano12 import apolar, gallery, waring
from fano12.fields import QQ
from fano12.rings import PLANE_S
from fano12.textio import parse_poly, print_poly


def main():
    for text in ("x0^4", "x0^4 + x1^4", "x0^3*x1",
                 "x0^3*x1 + x1^3*x2 + x2^3*x0"):
        f = parse_poly(text, PLANE_S, QQ)
        hf, degs, row = waring.classify(f)
        print(f"{text}:")
        print("   Hilbert function", hf, "| apolar generator degrees", degs,
              "| table row", row)

    f = parse_poly("x0^4 + 16*x1^4 + 81*x2^4", PLANE_S, QQ)
    lines = [parse_poly(t, PLANE_S, QQ) for t in ("x0", "2*x1", "3*x2")]
    sol = waring.solve_weights(f, lines)
    print("\nWeights expressing x0^4 + 16*x1^4 + 81*x2^4 on (x0, 2*x1, 3*x2):",
          sol.status, [str(w) for w in sol.weights])

    print("\nA rank-5 quartic that is not a sum of 5 fourth powers: its"
          "\napolar conic is a double line, and the t-parametrized"
          "\nfive-summand presentations all produce the same quartic:")
    for t in (1, 2, 3):
        f = waring.double_line_family(t)
        line = waring.double_line_check(f)
        print(f"  t={t}:", print_poly(f))
        print("     catalecticant rank", apolar.catalecticant_rank(f),
              "| double line", print_poly(line))


if __name__ == "__main__":
    main()
