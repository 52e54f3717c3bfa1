"""Exact-arithmetic toolkit relating plane quartics, their polar
hexagons, nets of quadrics in three-space, and nets of alternating forms
on a seven-dimensional space."""

from .apolar import (GradedIdeal, catalecticant, catalecticant_rank,
                     dual_socle, hilbert_function, perp, perp_ideal)
from .census import CensusReport, census, enumerate_points, reduce_mod
from .circle import CircleReport, StageError, circle
from .fields import QQ, PrimeField
from .gallery import (definite_net, fermat_cubic, klein_net, klein_quartic,
                      mukai_umemura_quartic)
from .invariants import aronhold, covariant_quartic
from .netquad import (DegenerateNetError, NetOfQuadrics, discriminant,
                      jacobian_minors, q_perp, unstable_plane)
from .resolve import DualityData, Resolution, min_res, tor_duality
from .rings import (PLANE_S, PLANE_T, SPACE_R, SPACE_T, MultiPoly)
from .skewfano import (LineInX, SkewNet, SubspaceE, attach_n_to_udual,
                       eta_from_tor, pfaffian, pfaffian_ideal,
                       pfaffian_quartic, twisted_cubic)
from .textio import PolyParseError, parse_poly, print_poly
from .waring import classify, double_line_family, solve_weights

__all__ = [
    "GradedIdeal", "catalecticant", "catalecticant_rank", "dual_socle",
    "hilbert_function", "perp", "perp_ideal", "CensusReport", "census",
    "enumerate_points", "reduce_mod", "CircleReport", "StageError",
    "circle", "QQ", "PrimeField", "definite_net", "fermat_cubic",
    "klein_net", "klein_quartic", "mukai_umemura_quartic", "aronhold",
    "covariant_quartic", "DegenerateNetError", "NetOfQuadrics",
    "discriminant", "jacobian_minors", "q_perp", "unstable_plane",
    "DualityData", "Resolution", "min_res", "tor_duality", "PLANE_S",
    "PLANE_T", "SPACE_R", "SPACE_T", "MultiPoly", "LineInX", "SkewNet",
    "SubspaceE", "attach_n_to_udual", "eta_from_tor", "pfaffian",
    "pfaffian_ideal", "pfaffian_quartic", "twisted_cubic",
    "PolyParseError", "parse_poly", "print_poly", "classify",
    "double_line_family", "solve_weights",
]
