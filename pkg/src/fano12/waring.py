"""Waring-rank certification for plane quartics, the classification by
Hilbert function and apolar generator degrees, power-sum weight solving,
and hexagon ideals from block decompositions of the syzygy matrix."""

from dataclasses import dataclass

from . import apolar, linalg, resolve
from .fields import QQ
from .rings import MultiPoly, PLANE_S, PLANE_T, dim_degree, dual_ring

# rows of the classification: Hilbert function and apolar generator
# degrees of the eight possible numerical types of nonzero quartics
CLASSIFICATION_TABLE = (
    ((1, 3, 6, 3, 1), (3, 3, 3, 3, 3, 3, 3)),
    ((1, 3, 5, 3, 1), (2, 3, 3, 3, 3)),
    ((1, 3, 4, 3, 1), (2, 2, 3)),
    ((1, 3, 4, 3, 1), (2, 2, 3, 3, 4)),
    ((1, 3, 3, 3, 1), (2, 2, 2, 4, 4)),
    ((1, 2, 3, 2, 1), (1, 3, 3)),
    ((1, 2, 2, 2, 1), (1, 2, 4)),
    ((1, 1, 1, 1, 1), (1, 1, 5)),
)


def rank_lower(f):
    """Rank of the catalecticant: the border Waring rank of a quartic."""
    if f.is_zero():
        raise ValueError("zero quartic")
    return apolar.catalecticant_rank(f)


def classify(f, cap=8):
    """The (Hilbert function, apolar generator degrees) pair of a
    quartic, together with its row in the classification table (None
    when unlisted)."""
    if f.is_zero():
        raise ValueError("zero quartic")
    hf = apolar.hilbert_function(f)
    ideal = apolar.perp_ideal(f, cap=cap)
    res = resolve.min_res(ideal, cap=cap)
    degs = tuple(sorted(res.steps[0].degrees))
    row = (hf, degs)
    index = None
    for k, entry in enumerate(CLASSIFICATION_TABLE):
        if entry == row:
            index = k
            break
    return hf, degs, index


@dataclass
class WeightSolution:
    status: str          # "unique", "none", or "underdetermined"
    weights: list        # empty unless status == "unique"
    solution_dim: int


def fourth_power(line):
    q = line * line
    return q * q


def solve_weights(f, lines):
    """Solve f = sum of lambda_i * l_i^4 exactly in the 15-dimensional
    space of quartics."""
    field = f.field
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if linalg.rank([lines[i].vector(), lines[j].vector()],
                           field) < 2:
                raise ValueError("lines must be pairwise non-proportional")
    cols = [fourth_power(l).vector() for l in lines]
    A = linalg.transpose(cols)
    sol = linalg.solve(A, f.vector(), field)
    if sol is None:
        return WeightSolution(status="none", weights=[], solution_dim=0)
    kdim = len(lines) - linalg.rank(cols, field)
    if kdim > 0:
        return WeightSolution(status="underdetermined", weights=[],
                              solution_dim=kdim)
    return WeightSolution(status="unique", weights=list(sol), solution_dim=0)


def is_apolar(ideal, f):
    """Whether every stored piece of the ideal annihilates f."""
    if ideal.ring != dual_ring(f.ring):
        raise ValueError("ideal must live in the operator ring dual to f")
    for d in sorted(ideal.per_degree):
        target = apolar.perp(f, d)
        for row in ideal.piece(d):
            if not linalg.row_space_contains(target, list(row), f.field):
                return False
    return True


@dataclass
class HexagonIdeal:
    generators: list     # the 4 maximal minors, cubics over T
    source: list         # the 4x3 matrix of linear forms
    ideal: object        # GradedIdeal generated by the minors


class HexagonDegenerationError(ValueError):
    pass


def hexagon_from_block(psi):
    """The 4 maximal minors of a 4x3 matrix of linear forms over T,
    verified to cut out a length-6 scheme (Hilbert function 1,3,6,6,...
    through degree 5)."""
    if len(psi) != 4 or any(len(row) != 3 for row in psi):
        raise ValueError("expected a 4x3 matrix")
    field = psi[0][0].field
    ring = psi[0][0].ring
    minors = []
    for skip in range(4):
        rows = [psi[r] for r in range(4) if r != skip]
        det = _det3(rows, ring, field)
        if skip % 2 == 1:
            det = -det
        minors.append(det)
    if all(m.is_zero() for m in minors):
        raise HexagonDegenerationError("all minors vanish")
    nz = [m for m in minors if not m.is_zero()]
    ideal = apolar.GradedIdeal.from_generators(nz, cap=5)
    hf = tuple(dim_degree(3, d) - ideal.dim_piece(d) for d in range(6))
    if hf != (1, 3, 6, 6, 6, 6):
        raise HexagonDegenerationError(
            f"quotient Hilbert function {hf}; block does not define a "
            "length-6 scheme")
    return HexagonIdeal(generators=minors, source=psi, ideal=ideal)


def _det3(rows, ring, field):
    acc = MultiPoly.zero(ring, field, 3)
    for (a, b, c, s) in ((0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1),
                         (2, 1, 0, -1), (1, 0, 2, -1), (0, 2, 1, -1)):
        term = rows[0][a] * rows[1][b] * rows[2][c]
        acc = acc + (term if s > 0 else -term)
    return acc


def block_psi(eta, E):
    """The 4x3 block of the skew matrix of linear forms in a basis
    adapted to an isotropic 3-space: rows a complement of E, columns E."""
    from . import skewfano

    field = eta.field
    rows = list(E.rows) if isinstance(E, skewfano.SubspaceE) else list(E)
    basis = [list(r) for r in rows]
    for v in range(7):
        cand = [0] * 7
        cand[v] = field.from_int(1)
        if not linalg.row_space_contains(
                [list(r) for r in basis], cand, field):
            basis.append(cand)
        if len(basis) == 7:
            break
    psi = []
    for r in range(3, 7):
        row = []
        for c in range(3):
            terms = {}
            for k in range(3):
                s = field.from_int(0)
                for i in range(7):
                    for j in range(7):
                        s = s + basis[r][i] * eta.forms[k][i][j] * basis[c][j]
                s = field.normalize(s)
                if s != 0:
                    e = [0, 0, 0]
                    e[k] = 1
                    terms[tuple(e)] = s
            row.append(MultiPoly(PLANE_T, field, 1, terms))
        psi.append(row)
    return psi


def double_line_family(t, field=QQ):
    """The rank-5 quartics that are not sums of 5 fourth powers:
    (1-1/t^2) x1^4 + x1^3 (x0 - (4/t) x2) + (1/t^2)(x1 + t x2)^4
    + x2^3 (x0 - 4t x1) + (1 - t^2) x2^4, t != 0."""
    t = field.normalize(field.from_int(1) * t)
    if t == 0:
        raise ValueError("t must be nonzero")
    one = field.from_int(1)
    tinv = field.inv(t)
    x0 = MultiPoly.variable(PLANE_S, field, 0)
    x1 = MultiPoly.variable(PLANE_S, field, 1)
    x2 = MultiPoly.variable(PLANE_S, field, 2)
    x1_3 = x1 * x1 * x1
    x2_3 = x2 * x2 * x2
    l = x1 + x2.scale(t)
    l2 = l * l
    f = (x1_3 * x1).scale(field.normalize(one - tinv * tinv)) \
        + x1_3 * (x0 - x2.scale(field.normalize(4 * tinv))) \
        + (l2 * l2).scale(field.normalize(tinv * tinv)) \
        + x2_3 * (x0 - x1.scale(field.normalize(4 * t))) \
        + (x2_3 * x2).scale(field.normalize(one - t * t))
    return f


def double_line_check(f):
    """The unique quadric annihilating a rank-5 family member is a
    perfect square of a linear operator; returns that linear form."""
    piece = apolar.perp(f, 2)
    if len(piece) != 1:
        raise ValueError(f"(f^perp)_2 has dimension {len(piece)}")
    q = MultiPoly.from_vector(PLANE_T, f.field, 2, piece[0])
    from .netquad import quadric_matrix
    m = quadric_matrix(q)
    if linalg.rank(m, f.field) != 1:
        return None
    row = next(r for r in m if any(x != 0 for x in r))
    return MultiPoly.from_vector(PLANE_T, f.field, 1, row)
