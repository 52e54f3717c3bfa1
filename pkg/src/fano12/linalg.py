"""Dense exact linear algebra over an exact field.

Matrices are lists of row lists of raw scalars (mpq or int, depending on
the field).  All bases returned by these routines are RREF-canonical, so
every downstream "choose a basis" step is deterministic.
"""


def zeros(rows, cols, field):
    z = field.from_int(0)
    return [[z] * cols for _ in range(rows)]


def identity(n, field):
    m = zeros(n, n, field)
    one = field.from_int(1)
    for i in range(n):
        m[i][i] = one
    return m


def mat_mul(a, b, field):
    n, k = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(cols):
            s = sum(ai[t] * b[t][j] for t in range(k))
            row.append(field.normalize(s))
        out.append(row)
    return out


def mat_vec(a, v, field):
    return [field.normalize(sum(x * y for x, y in zip(row, v))) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(matrix, field):
    """Reduced row echelon form.

    Returns (rank, pivot_columns, rows) where rows are the nonzero RREF
    rows with leading entries 1.  pivot_columns is strictly increasing.
    """
    rows = [[field.normalize(x) for x in row] for row in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.normalize(x * inv) for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [field.normalize(x - f * y) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots, rows[:r]


def rank(matrix, field):
    if not matrix:
        return 0
    return rref(matrix, field)[0]


def kernel(matrix, field, ncols=None):
    """Canonical basis of the right kernel, as rows, in RREF."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return identity(ncols, field)
    r, pivots, rows = rref(matrix, field)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    one = field.from_int(1)
    zero = field.from_int(0)
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = field.normalize(-rows[i][f])
        basis.append(v)
    if not basis:
        return []
    return rref(basis, field)[2]


def row_space(matrix, field):
    """RREF-canonical basis of the row span."""
    if not matrix:
        return []
    return rref(matrix, field)[2]


def row_space_contains(basis_rref, vector, field):
    """Reduce vector against an RREF basis; True iff it lies in the span."""
    v = [field.normalize(x) for x in vector]
    for row in basis_rref:
        lead = next((c for c, x in enumerate(row) if x != 0), None)
        if lead is not None and v[lead] != 0:
            f = v[lead]
            v = [field.normalize(x - f * y) for x, y in zip(v, row)]
    return all(x == 0 for x in v)


def in_span(basis, vector, field):
    if not basis:
        return all(field.normalize(x) == 0 for x in vector)
    return row_space_contains(row_space(basis, field), vector, field)


def solve(matrix, rhs, field):
    """One solution x of matrix @ x = rhs, or None if inconsistent."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(nrows)]
    r, pivots, rows = rref(aug, field)
    zero = field.from_int(0)
    if any(p == ncols for p in pivots):
        return None
    x = [zero] * ncols
    for i, p in enumerate(pivots):
        x[p] = rows[i][ncols]
    return x


def intersect_row_spaces(a, b, field):
    """RREF basis of rowspace(a) ∩ rowspace(b)."""
    a = row_space(a, field)
    b = row_space(b, field)
    if not a or not b:
        return []
    # coefficients (u, v) with u·a = v·b  <=>  [a^T | -b^T] kernel
    ncols = len(a[0])
    stacked = []
    for c in range(ncols):
        stacked.append([row[c] for row in a] + [field.normalize(-row[c]) for row in b])
    ker = kernel(stacked, field, len(a) + len(b))
    vecs = []
    for k in ker:
        u = k[: len(a)]
        vec = [field.normalize(sum(u[i] * a[i][c] for i in range(len(a))))
               for c in range(ncols)]
        if any(x != 0 for x in vec):
            vecs.append(vec)
    return row_space(vecs, field) if vecs else []


def det(matrix, field):
    """Exact determinant by Gaussian elimination."""
    n = len(matrix)
    rows = [[field.normalize(x) for x in row] for row in matrix]
    d = field.from_int(1)
    sign = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            return field.from_int(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        d = field.normalize(d * rows[c][c])
        inv = field.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = field.normalize(rows[i][c] * inv)
                rows[i] = [field.normalize(x - f * y) for x, y in zip(rows[i], rows[c])]
    return field.normalize(d * sign) if sign < 0 else d


def mat_inv(matrix, field):
    n = len(matrix)
    aug = [list(matrix[i]) + identity(n, field)[i] for i in range(n)]
    r, pivots, rows = rref(aug, field)
    if pivots[:n] != list(range(n)) or r < n:
        raise ValueError("matrix not invertible")
    return [row[n:] for row in rows]


def is_positive_definite(matrix, field):
    """Exact Sylvester criterion: all leading principal minors positive.

    Only meaningful over the rationals; the input must be symmetric.
    """
    if field.char != 0:
        raise ValueError("positive definiteness needs characteristic 0")
    n = len(matrix)
    for i in range(n):
        for j in range(i):
            if field.normalize(matrix[i][j]) != field.normalize(matrix[j][i]):
                raise ValueError("matrix is not symmetric")
    for k in range(1, n + 1):
        minor = [row[:k] for row in matrix[:k]]
        if det(minor, field) <= 0:
            return False
    return True
