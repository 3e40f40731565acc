"""Exact dense linear algebra over field nodes of the ring tower.

Matrices are lists of rows of :class:`Scalar`.  Vectors are plain lists.
Everything works over any ring whose ``is_field`` is true; callers holding
entries in a polynomial ring coerce to its fraction field first.
"""
from __future__ import annotations

from ..errors import NonSquare
from .laurent import LaurentPoly


def zeros(ring, nrows, ncols):
    z = ring.zero()
    return [[z] * ncols for _ in range(nrows)]


def identity(ring, n):
    z, o = ring.zero(), ring.one()
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def shape(m):
    return len(m), (len(m[0]) if m else 0)


def transpose(m, ncols=None):
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a, b, ring):
    n, k = len(a), (len(a[0]) if a else 0)
    p = len(b[0]) if b else 0
    if k != len(b):
        raise ValueError(f"shape mismatch {n}x{k} * {len(b)}x{p}")
    z = ring.zero()
    out = []
    for row in a:
        nz = [(j, x) for j, x in enumerate(row) if x]
        new = []
        for c in range(p):
            s = z
            for j, x in nz:
                y = b[j][c]
                if y:
                    s = s + x * y
            new.append(s)
        out.append(new)
    return out


def matvec(a, v, ring):
    z = ring.zero()
    out = []
    for row in a:
        s = z
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in r] for r in a]


def map_matrix(a, f):
    return [[f(x) for x in r] for r in a]


def is_zero_matrix(a):
    return not any(x for r in a for x in r)


def block_diag(a, b, ring):
    n, m = len(a), len(b)
    z = ring.zero()
    return [list(r) + [z] * m for r in a] + [[z] * n + list(r) for r in b]


def rref(m, ring):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    rows = [list(r) for r in m]
    nrows, ncols = shape(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m, ring):
    return len(rref(m, ring)[1])


def nullspace(m, ring, ncols=None):
    """Basis of the right kernel ``{v : m v = 0}`` as a list of vectors."""
    if not m:
        n = ncols if ncols is not None else 0
        return [[ring.one() if i == j else ring.zero() for i in range(n)] for j in range(n)]
    n = len(m[0])
    rows, pivots = rref(m, ring)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ring.zero()] * n
        v[f] = ring.one()
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(v)
    return basis


def left_nullspace(m, ring):
    return nullspace(transpose(m, len(m)), ring, len(m))


def solve(a, b, ring):
    """One solution ``x`` of ``a x = b`` or ``None`` if inconsistent."""
    n = len(a[0]) if a else 0
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    rows, pivots = rref(aug, ring)
    if n in pivots:
        return None
    x = [ring.zero()] * n
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][n]
    return x


def inverse(m, ring):
    n = len(m)
    aug = [list(r) + e for r, e in zip(m, identity(ring, n))]
    rows, pivots = rref(aug, ring)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [r[n:] for r in rows]


def det(m, ring):
    n = len(m)
    rows = [list(r) for r in m]
    d = ring.one()
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return ring.zero()
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        d = d * rows[c][c]
        inv = rows[c][c].inverse()
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return d


def trace(m, ring):
    s = ring.zero()
    for i in range(len(m)):
        s = s + m[i][i]
    return s


def span_basis(vectors, ring):
    """Row-reduced basis of the span of ``vectors``."""
    if not vectors:
        return []
    return rref(vectors, ring)[0]


def hessenberg(m, ring):
    """Upper Hessenberg matrix similar to ``m`` (Gaussian similarity steps)."""
    h = [list(r) for r in m]
    n = len(h)
    for c in range(n - 2):
        piv = next((i for i in range(c + 1, n) if h[i][c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            h[piv], h[c + 1] = h[c + 1], h[piv]
            for r in h:
                r[piv], r[c + 1] = r[c + 1], r[piv]
        inv = h[c + 1][c].inverse()
        for i in range(c + 2, n):
            if not h[i][c]:
                continue
            f = h[i][c] * inv
            # row_i -= f * row_{c+1}; then col_{c+1} += f * col_i
            h[i] = [x - f * y for x, y in zip(h[i], h[c + 1])]
            for r in h:
                if r[i]:
                    r[c + 1] = r[c + 1] + f * r[i]
    return h


def charpoly(m, ring, var="X"):
    """Characteristic polynomial ``det(X*I - m)`` as a monic LaurentPoly.

    Reduces to Hessenberg form, then runs the standard three-term recurrence
    on leading principal minors.
    """
    n = len(m)
    if any(len(r) != n for r in m):
        raise NonSquare(f"charpoly needs a square matrix, got {len(m)} rows of lengths {[len(r) for r in m]}")
    if not ring.is_field:
        raise TypeError(f"charpoly expects entries in a field, got {ring}")
    one = ring.one()
    h = hessenberg(m, ring)
    x = LaurentPoly(var, {1: one})
    p = [LaurentPoly(var, {0: one})]
    for k in range(1, n + 1):
        pk = (x - h[k - 1][k - 1]) * p[k - 1]
        prod = one
        for i in range(k - 1, 0, -1):
            prod = prod * h[i][i - 1]
            if not prod:
                break
            c = h[i - 1][k - 1] * prod
            if c:
                pk = pk - p[i - 1] * c
        p.append(pk)
    return p[n]
