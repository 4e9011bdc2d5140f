"""Exact dense linear algebra over a field ring (Gaussian elimination throughout)."""

from __future__ import annotations

from .errors import Singular


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, u):
    return [c * a for a in u]


def vec_zero(ring, n):
    return [ring.zero] * n


def vec_is_zero(u):
    return not any(bool(a) for a in u)


def basis_vector(ring, n, i):
    v = [ring.zero] * n
    v[i] = ring.one
    return v


def mat_vec(ring, m, v):
    out = []
    for row in m:
        acc = ring.zero
        for a, b in zip(row, v):
            if bool(a) and bool(b):
                acc = acc + a * b
        out.append(acc)
    return out


def rref(matrix, ncols=None):
    """Row-reduce a copy of `matrix`; returns (rows, pivot_columns)."""
    m = [list(row) for row in matrix]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def solve(matrix, rhs):
    """One exact solution of matrix * x = rhs, or None if inconsistent."""
    if not matrix:
        return None
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug)
    ncols = len(matrix[0])
    if ncols in pivots:
        return None
    zero = matrix[0][0] - matrix[0][0]
    x = [zero] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][-1]
    return x


def nullspace(ring, matrix, ncols):
    """Basis of the kernel of `matrix` acting on ring^ncols."""
    if not matrix:
        return [basis_vector(ring, ncols, i) for i in range(ncols)]
    red, pivots = rref(matrix)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = vec_zero(ring, ncols)
        v[fc] = ring.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [
        [sum_prod(a[i], [b[t][j] for t in range(k)]) for j in range(m)]
        for i in range(n)
    ]


def sum_prod(u, v):
    acc = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc + a * b
    return acc


def mat_inv(ring, matrix):
    n = len(matrix)
    aug = [list(row) + basis_vector(ring, n, i) for i, row in enumerate(matrix)]
    red, pivots = rref(aug, ncols=n)
    if len(pivots) != n:
        raise Singular("matrix is singular")
    return [row[n:] for row in red]


def column_space_contains(matrix, vec) -> bool:
    """True iff vec lies in the span of the columns of matrix."""
    return solve(matrix, vec) is not None


def columns(matrix):
    return [[row[j] for row in matrix] for j in range(len(matrix[0]))]


def from_columns(cols):
    return [[col[i] for col in cols] for i in range(len(cols[0]))]


def sym_diagonalize(ring, gram):
    """Diagonal entries of a congruent diagonal form of a symmetric matrix.

    Uses simultaneous row/column operations; requires 2 invertible.
    """
    g = [list(row) for row in gram]
    n = len(g)
    diag = []
    for k in range(n):
        piv = None
        for i in range(k, n):
            if g[i][i]:
                piv = i
                break
        if piv is None:
            found = False
            for i in range(k, n):
                for j in range(i + 1, n):
                    if g[i][j]:
                        # add row/col j into i: new (i,i) entry is 2*g[i][j] != 0
                        for t in range(n):
                            g[i][t] = g[i][t] + g[j][t]
                        for t in range(n):
                            g[t][i] = g[t][i] + g[t][j]
                        piv = i
                        found = True
                        break
                if found:
                    break
            if piv is None:
                break
        if piv != k:
            g[k], g[piv] = g[piv], g[k]
            for t in range(n):
                g[t][k], g[t][piv] = g[t][piv], g[t][k]
        d = g[k][k]
        diag.append(d)
        for i in range(k + 1, n):
            if g[i][k]:
                f = ring.div(g[i][k], d)
                for t in range(n):
                    g[i][t] = g[i][t] - f * g[k][t]
                for t in range(n):
                    g[t][i] = g[t][i] - f * g[t][k]
    return diag
