"""Finite-field enumeration of the isotropic 3-spaces of a skew net and
sampling of the lines they span, with a brute-force oracle over very
small primes.

The smart enumeration fixes the first point p1 of a subspace: every
isotropic E through p1 lies in K = {v : eta(p1 ^ v) = 0}, generically of
dimension 4, and on the 3-space K/<p1> the isotropy of E/<p1> becomes
three linear conditions on the 3-dimensional second exterior power.  The
rank of that 3x3 system decides everything; rank-2 points contribute one
subspace, degenerate ranks fall back to direct enumeration.
"""

import itertools
import random
import time
from dataclasses import dataclass

import numpy as np
from numba import njit

from . import skewfano
from .fields import GF
from .netquad import NetOfQuadrics
from .rings import MultiPoly
from .skewfano import SkewNet, SubspaceE


class ReductionError(ValueError):
    pass


def _reduce_scalar(x, p, label):
    num = int(x.numerator)
    den = int(x.denominator)
    if den % p == 0:
        raise ReductionError(f"denominator of {label} is divisible by {p}")
    return num * pow(den, p - 2, p) % p


def reduce_mod(x, p):
    """Entrywise reduction of a polynomial, net of quadrics, or skew net
    to the prime field F_p."""
    fp = GF(p)
    if isinstance(x, MultiPoly):
        terms = {e: _reduce_scalar(c, p, f"coefficient of {e}")
                 for e, c in x.terms.items()}
        return MultiPoly(x.ring, fp, x.degree, terms)
    if isinstance(x, NetOfQuadrics):
        return NetOfQuadrics(tuple(reduce_mod(q, p) for q in x.quadrics))
    if isinstance(x, SkewNet):
        forms = tuple(
            [[_reduce_scalar(m[i][j], p, f"form {k} entry ({i},{j})")
              for j in range(7)] for i in range(7)]
            for k, m in enumerate(x.forms))
        v_basis = tuple(reduce_mod(q, p) for q in x.v_basis)
        g = None
        if x.n_to_udual is not None:
            g = [[_reduce_scalar(c, p, f"identification entry ({i},{j})")
                  for j, c in enumerate(row)]
                 for i, row in enumerate(x.n_to_udual)]
        return SkewNet(forms=forms, v_basis=v_basis, field=fp, n_to_udual=g)
    raise TypeError(f"cannot reduce {type(x).__name__}")


@njit(cache=True)
def _scan_points(forms, p, out, exceptional):  # pragma: no cover - jitted
    """Scan canonical representatives of P^6(F_p).

    For rank-2 systems writes the unique subspace rows into out; returns
    (number of subspaces, number of exceptional p1 indices).  Exceptional
    p1 (kernel dimension != 4 or system rank < 2) are stored as indices.
    """
    nout = 0
    nexc = 0
    total = (p ** 7 - 1) // (p - 1)
    p1 = np.zeros(7, dtype=np.int64)
    for idx in range(total):
        # canonical representative number idx: leading coordinate 1
        rem = idx
        lead = 0
        block = p ** 6
        while rem >= block:
            rem -= block
            lead += 1
            block //= p
        for t in range(7):
            p1[t] = 0
        p1[lead] = 1
        r = rem
        for t in range(6 - lead):
            p1[6 - t] = r % p
            r //= p
        # A[k] = p1^T * eta_k
        A = np.zeros((3, 7), dtype=np.int64)
        for k in range(3):
            for j in range(7):
                s = 0
                for i in range(7):
                    s += p1[i] * forms[k, i, j]
                A[k, j] = s % p
        # row-reduce A, track pivot columns
        rank = 0
        pivcols = np.full(3, -1, dtype=np.int64)
        for c in range(7):
            if rank == 3:
                break
            piv = -1
            for r2 in range(rank, 3):
                if A[r2, c] != 0:
                    piv = r2
                    break
            if piv < 0:
                continue
            if piv != rank:
                for t in range(7):
                    tmp = A[rank, t]
                    A[rank, t] = A[piv, t]
                    A[piv, t] = tmp
            inv = 1
            a = A[rank, c] % p
            for e in range(p - 2):
                inv = inv * a % p
            for t in range(7):
                A[rank, t] = A[rank, t] * inv % p
            for r2 in range(3):
                if r2 != rank and A[r2, c] != 0:
                    f = A[r2, c]
                    for t in range(7):
                        A[r2, t] = (A[r2, t] - f * A[rank, t]) % p
            pivcols[rank] = c
            rank += 1
        if rank != 3:
            exceptional[nexc] = idx
            nexc += 1
            continue
        # kernel of A: 4 basis vectors from the free columns
        K = np.zeros((4, 7), dtype=np.int64)
        kn = 0
        for c in range(7):
            is_piv = False
            for t in range(3):
                if pivcols[t] == c:
                    is_piv = True
            if is_piv:
                continue
            for t in range(7):
                K[kn, t] = 0
            K[kn, c] = 1
            for t in range(3):
                K[kn, pivcols[t]] = (-A[t, c]) % p
            kn += 1
        # complement basis B of p1 inside K (3 vectors)
        # row-reduce the stack [p1; K] keeping track of independence
        span = np.zeros((4, 7), dtype=np.int64)
        spiv = np.full(4, -1, dtype=np.int64)
        sn = 0
        B = np.zeros((3, 7), dtype=np.int64)
        bn = 0
        for src in range(5):
            if src == 0:
                v = p1.copy()
            else:
                v = K[src - 1].copy()
            for t2 in range(sn):
                c = spiv[t2]
                if v[c] != 0:
                    f = v[c]
                    for t in range(7):
                        v[t] = (v[t] - f * span[t2, t]) % p
            lead2 = -1
            for t in range(7):
                if v[t] != 0:
                    lead2 = t
                    break
            if lead2 < 0:
                continue
            inv = 1
            a = v[lead2] % p
            for e in range(p - 2):
                inv = inv * a % p
            for t in range(7):
                span[sn, t] = v[t] * inv % p
            spiv[sn] = lead2
            sn += 1
            if src > 0:
                for t in range(7):
                    B[bn, t] = K[src - 1, t]
                bn += 1
                if bn == 3:
                    break
        if bn != 3:
            exceptional[nexc] = idx
            nexc += 1
            continue
        # induced alternating forms on K/<p1>: vectors v_k
        V = np.zeros((3, 3), dtype=np.int64)
        for k in range(3):
            # entries (1,2), (2,0), (0,1)
            for pos in range(3):
                if pos == 0:
                    a2, b2 = 1, 2
                elif pos == 1:
                    a2, b2 = 2, 0
                else:
                    a2, b2 = 0, 1
                s = 0
                for i in range(7):
                    if B[a2, i] == 0:
                        continue
                    for j in range(7):
                        s += B[a2, i] * forms[k, i, j] % p * B[b2, j]
                V[k, pos] = s % p
        # rank of V
        W = V.copy()
        vrank = 0
        wpiv = np.full(3, -1, dtype=np.int64)
        for c in range(3):
            piv = -1
            for r2 in range(vrank, 3):
                if W[r2, c] != 0:
                    piv = r2
                    break
            if piv < 0:
                continue
            if piv != vrank:
                for t in range(3):
                    tmp = W[vrank, t]
                    W[vrank, t] = W[piv, t]
                    W[piv, t] = tmp
            inv = 1
            a = W[vrank, c] % p
            for e in range(p - 2):
                inv = inv * a % p
            for t in range(3):
                W[vrank, t] = W[vrank, t] * inv % p
            for r2 in range(3):
                if r2 != vrank and W[r2, c] != 0:
                    f = W[r2, c]
                    for t in range(3):
                        W[r2, t] = (W[r2, t] - f * W[vrank, t]) % p
            wpiv[vrank] = c
            vrank += 1
        if vrank == 3:
            continue
        if vrank < 2:
            exceptional[nexc] = idx
            nexc += 1
            continue
        # unique kernel vector omega of V
        omega = np.zeros(3, dtype=np.int64)
        freec = -1
        for c in range(3):
            if c != wpiv[0] and c != wpiv[1]:
                freec = c
        omega[freec] = 1
        omega[wpiv[0]] = (-W[0, freec]) % p
        omega[wpiv[1]] = (-W[1, freec]) % p
        # the plane of K/<p1> with exterior square omega is omega-perp
        # (dot product in the B coordinates)
        u = np.zeros((2, 3), dtype=np.int64)
        un = 0
        lead3 = -1
        for c in range(3):
            if omega[c] != 0:
                lead3 = c
                break
        inv = 1
        a = omega[lead3] % p
        for e in range(p - 2):
            inv = inv * a % p
        for c in range(3):
            if c == lead3:
                continue
            for t in range(3):
                u[un, t] = 0
            u[un, c] = 1
            u[un, lead3] = (-omega[c] * inv) % p
            un += 1
        # E = <p1, u0*B, u1*B>, stored in RREF-canonical form
        E = np.zeros((3, 7), dtype=np.int64)
        for t in range(7):
            E[0, t] = p1[t]
        for rr in range(2):
            for t in range(7):
                s = 0
                for c in range(3):
                    s += u[rr, c] * B[c, t]
                E[rr + 1, t] = s % p
        erank = 0
        for c in range(7):
            if erank == 3:
                break
            piv = -1
            for r2 in range(erank, 3):
                if E[r2, c] != 0:
                    piv = r2
                    break
            if piv < 0:
                continue
            if piv != erank:
                for t in range(7):
                    tmp = E[erank, t]
                    E[erank, t] = E[piv, t]
                    E[piv, t] = tmp
            inv = 1
            a = E[erank, c] % p
            for e in range(p - 2):
                inv = inv * a % p
            for t in range(7):
                E[erank, t] = E[erank, t] * inv % p
            for r2 in range(3):
                if r2 != erank and E[r2, c] != 0:
                    f = E[r2, c]
                    for t in range(7):
                        E[r2, t] = (E[r2, t] - f * E[erank, t]) % p
            erank += 1
        if erank != 3:
            exceptional[nexc] = idx
            nexc += 1
            continue
        for r2 in range(3):
            for t in range(7):
                out[nout, r2, t] = E[r2, t]
        nout += 1
    return nout, nexc


def _all_planes_through(eta, p1, K_rows, fp, p):
    """Enumeration fallback: all isotropic 3-spaces through p1 inside
    the span of K_rows (which contains p1), by a vectorized sweep of the
    2-subspaces of a complement of p1."""
    from . import linalg
    comp = []
    span = [[fp.normalize(c) for c in p1]]
    _, _, span = linalg.rref(span, fp)
    for v in K_rows:
        cand = span + [list(v)]
        rk, _, red = linalg.rref([list(r) for r in cand], fp)
        if rk > len(span):
            span = red
            comp.append(list(v))
    m = len(comp)
    if m < 2:
        return []
    planes = _rref_batch(2, m, p)
    compm = np.array(comp, dtype=np.int64)
    rows23 = planes @ compm % p                      # (N, 2, 7)
    n = rows23.shape[0]
    mats = np.zeros((n, 3, 7), dtype=np.int64)
    mats[:, 0, :] = np.array(p1, dtype=np.int64)
    mats[:, 1:, :] = rows23
    keep = np.ones(n, dtype=bool)
    for f in eta.forms:
        fm = np.array(f, dtype=np.int64)
        g = np.einsum("nij,jk,nlk->nil", mats, fm, mats) % p
        keep &= (g[:, 0, 1] == 0) & (g[:, 0, 2] == 0) & (g[:, 1, 2] == 0)
    out = []
    for rows in mats[keep]:
        out.append(SubspaceE.from_rows([[int(x) for x in r] for r in rows],
                                       fp))
    return out


def enumerate_points(eta, max_p=13):
    """All isotropic 3-spaces of a skew net over F_p, p small."""
    fp = eta.field
    p = fp.char
    if p == 0 or p > max_p:
        raise ValueError(f"enumeration needs a prime field with p <= {max_p}")
    if all(all(x == 0 for row in m for x in row) for m in eta.forms):
        if p > 2:
            raise ValueError("zero net: the full Grassmannian is too large")
        return brute_points(eta)
    forms = np.array(eta.forms, dtype=np.int64)
    total = (p ** 7 - 1) // (p - 1)
    out = np.zeros((total, 3, 7), dtype=np.int16)
    exceptional = np.zeros(total, dtype=np.int64)
    nout, nexc = _scan_points(forms, p, out, exceptional)
    found = {}
    if nout:
        uniq = np.unique(out[:nout].reshape(nout, 21), axis=0)
        for flat in uniq:
            rows = tuple(tuple(int(x) for x in flat[7 * r:7 * r + 7])
                         for r in range(3))
            found[rows] = SubspaceE(rows)
    from . import linalg
    for t in range(nexc):
        idx = int(exceptional[t])
        p1 = _rep_from_index(idx, p)
        A = [[sum(p1[i] * eta.forms[k][i][j] for i in range(7)) % p
              for j in range(7)] for k in range(3)]
        K = linalg.kernel([list(map(fp.normalize, row)) for row in A],
                          fp, ncols=7)
        for E in _all_planes_through(eta, p1, K, fp, p):
            found[E.rows] = E
    points = [found[k] for k in sorted(found)]
    for E in points:
        if not skewfano.isotropic(eta, E):
            raise AssertionError("enumerated subspace fails isotropy")
    return points


def _rep_from_index(idx, p):
    rem = idx
    lead = 0
    block = p ** 6
    while rem >= block:
        rem -= block
        lead += 1
        block //= p
    v = [0] * 7
    v[lead] = 1
    r = rem
    for t in range(6 - lead):
        v[6 - t] = r % p
        r //= p
    return v


def _rref_batch(k, m, p):
    """All RREF-canonical k x m matrices over F_p as one numpy array."""
    blocks = []
    for piv in itertools.combinations(range(m), k):
        frees = [[c for c in range(m) if c > piv[r] and c not in piv]
                 for r in range(k)]
        nf = sum(len(f) for f in frees)
        vals = np.array(list(itertools.product(range(p), repeat=nf)),
                        dtype=np.int64).reshape(p ** nf, nf)
        block = np.zeros((p ** nf, k, m), dtype=np.int64)
        t = 0
        for r in range(k):
            block[:, r, piv[r]] = 1
            for c in frees[r]:
                block[:, r, c] = vals[:, t]
                t += 1
        blocks.append(block)
    return np.concatenate(blocks)


GRASSMANNIAN_COUNTS = {2: 11811, 3: 925771}


def brute_points(eta):
    """Oracle: filter every RREF-canonical 3x7 matrix by isotropy."""
    fp = eta.field
    p = fp.char
    if p not in (2, 3):
        raise ValueError("brute-force oracle only runs over F_2 and F_3")
    mats = _rref_batch(3, 7, p)
    if mats.shape[0] != GRASSMANNIAN_COUNTS[p]:
        raise AssertionError("canonical-form enumeration miscounted")
    keep = np.ones(mats.shape[0], dtype=bool)
    for m in eta.forms:
        f = np.array(m, dtype=np.int64)
        g = np.einsum("nij,jk,nlk->nil", mats, f, mats) % p
        keep &= (g[:, 0, 1] == 0) & (g[:, 0, 2] == 0) & (g[:, 1, 2] == 0)
    out = []
    for rows in mats[keep]:
        out.append(SubspaceE(tuple(tuple(int(x) for x in r) for r in rows)))
    return sorted(out, key=lambda E: E.rows)


@dataclass
class CensusReport:
    p: int
    point_count: int
    line_count_sampled: int
    points: list
    lines: list
    pair_budget: int
    pairs_tested: int
    truncated: bool
    seed: int
    elapsed: float

    def serialize(self):
        out = [f"p {self.p}", f"seed {self.seed}",
               f"points {self.point_count}",
               f"lines_sampled {self.line_count_sampled}",
               f"pairs_tested {self.pairs_tested}",
               f"pair_budget {self.pair_budget}",
               f"truncated {int(self.truncated)}"]
        for E in self.points:
            out.append("point " + " ".join(
                ",".join(str(x) for x in row) for row in E.rows))
        for line in self.lines:
            out.append("line " + " ".join(
                ",".join(str(x) for x in row) for row in line.pencil))
        return "\n".join(out) + "\n"


def sample_lines(eta, points, pair_budget=20000, seed=0):
    """Detect lines among pairs of enumerated points, up to a budget.

    Returns (lines, pairs_tested, truncated); deduplicated by the span
    of the pencil."""
    pairs = list(itertools.combinations(range(len(points)), 2))
    rng = random.Random(seed)
    rng.shuffle(pairs)
    truncated = len(pairs) > pair_budget
    pairs = pairs[:pair_budget]
    from . import linalg
    fp = eta.field
    seen = {}
    for (a, b) in pairs:
        line = skewfano.line_detect(eta, points[a], points[b])
        if line is None:
            continue
        base = [list(r) for r in line.pencil[:2]]
        _, _, base = linalg.rref(base, fp)
        span4 = [list(r) for r in line.pencil]
        _, _, span4 = linalg.rref(span4, fp)
        key = (tuple(tuple(x for x in r) for r in base),
               tuple(tuple(x for x in r) for r in span4))
        if key not in seen:
            seen[key] = line
    lines = [seen[k] for k in sorted(seen)]
    return lines, len(pairs), truncated


def census(eta, pair_budget=20000, seed=0):
    t0 = time.time()
    points = enumerate_points(eta)
    lines, tested, truncated = sample_lines(eta, points, pair_budget, seed)
    return CensusReport(
        p=eta.field.char, point_count=len(points),
        line_count_sampled=len(lines), points=points, lines=lines,
        pair_budget=pair_budget, pairs_tested=tested, truncated=truncated,
        seed=seed, elapsed=time.time() - t0)


def line_members(line, eta):
    """The p+1 member subspaces of a line's pencil."""
    fp = eta.field
    p = fp.char
    base = [list(line.pencil[0]), list(line.pencil[1])]
    out = []
    combos = [(1, t) for t in range(p)] + [(0, 1)]
    for (al, be) in combos:
        third = [fp.normalize(al * x + be * y)
                 for x, y in zip(line.pencil[2], line.pencil[3])]
        out.append(SubspaceE.from_rows(base + [third], fp))
    return out
