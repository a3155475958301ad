"""Exact dense linear algebra over a wsakit field.

Matrices are plain lists of rows.  Everything is Gaussian elimination
with exact division; no pivoting heuristics are needed since arithmetic
is exact.  Column convention: nullspace(A) solves A x = 0; row-acting
maps v -> v A use left_kernel.
"""

from __future__ import annotations


def zeros(field, rows, cols):
    z = field.zero
    return [[z] * cols for _ in range(rows)]


def identity(field, n):
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def transpose(m):
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def mat_mul(field, a, b):
    if not a or not b:
        return [[field.zero] * (len(b[0]) if b else 0) for _ in a]
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(field, n, m)
    for i in range(n):
        row = a[i]
        for t in range(k):
            c = row[t]
            if not c:
                continue
            bt = b[t]
            orow = out[i]
            for j in range(m):
                if bt[j]:
                    orow[j] = orow[j] + c * bt[j]
    return out


def vec_mat(field, v, m):
    """Row vector times matrix."""
    if not m:
        return []
    cols = len(m[0])
    out = [field.zero] * cols
    for i, c in enumerate(v):
        if not c:
            continue
        row = m[i]
        for j in range(cols):
            if row[j]:
                out[j] = out[j] + c * row[j]
    return out


def rref(field, m):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(field, m):
    return len(rref(field, m)[1])


def nullspace(field, m):
    """Basis of {x : m x = 0} (x indexed by columns of m)."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [
            [field.one if j == i else field.zero for j in range(cols)]
            for i in range(cols)
        ]
    red, pivots = rref(field, m)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * cols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def left_kernel(field, m):
    """Basis of {v : v m = 0} (v indexed by rows of m)."""
    return nullspace(field, transpose(m))


def solve(field, a, b):
    """One solution x of a x = b, or None if inconsistent."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [list(a[i]) + [b[i]] for i in range(rows)]
    red, pivots = rref(field, aug)
    if cols in pivots:
        return None
    x = [field.zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def det(field, m):
    n = len(m)
    if n == 0:
        return field.one
    a = [list(row) for row in m]
    sign = field.one
    result = field.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c]), None)
        if pivot is None:
            return field.zero
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        pv = a[c][c]
        result = result * pv
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / pv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * result


def is_invertible(field, m):
    n = len(m)
    if n == 0:
        return True
    if any(len(row) != n for row in m):
        return False
    return rank(field, m) == n


def inverse(field, m):
    n = len(m)
    aug = [list(m[i]) + identity(field, n)[i] for i in range(n)]
    red, pivots = rref(field, aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]
