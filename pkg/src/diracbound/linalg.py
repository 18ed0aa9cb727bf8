"""Exact dense linear algebra over the package's scalar fields.

Matrices are lists of row lists whose entries live in one field (Fraction,
GaussQ or QSqrt5).  Everything here is elimination-based and exact; no
floating point enters unless the caller converts explicitly.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .fields import conj, to_float


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = [[b[r][c] for r in range(k)] for c in range(m)]
    out = []
    for i in range(n):
        row_a = a[i]
        row = []
        for c in range(m):
            col = bt[c]
            s = row_a[0] * col[0]
            for j in range(1, k):
                if row_a[j]:
                    s = s + row_a[j] * col[j]
            row.append(s)
        out.append(row)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    return [[x * s for x in row] for row in a]


def mat_identity(n, one=Fraction(1)):
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_is_zero(a) -> bool:
    return all(not x for row in a for x in row)


def mat_dagger(a):
    n, m = len(a), len(a[0])
    return [[conj(a[i][j]) for i in range(n)] for j in range(m)]


def mat_trace(a):
    t = a[0][0]
    for i in range(1, len(a)):
        t = t + a[i][i]
    return t


def mat_to_numpy(a) -> np.ndarray:
    return np.array([[to_float(x) for x in row] for row in a], dtype=complex)


def rref(rows):
    """Row-reduce in place a copy of `rows`; return (reduced, pivot_cols)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def kernel_basis(rows, ncols=None):
    """Basis of the right null space of the matrix given by `rows`.

    Returns a list of vectors (lists of field elements).  For an empty row
    list, `ncols` must be given.
    """
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for empty matrix")
        one = Fraction(1)
        return [[one if i == j else Fraction(0) for j in range(ncols)]
                for i in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows)
    one = rows[0][0] - rows[0][0] + 1  # 1 in the row's field
    zero = one - one
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc] * one
        basis.append(v)
    return basis


class ColumnSolver:
    """Repeated exact solves of  B x = v  for a fixed full-rank column set B.

    Columns are given as vectors; consistency of each solve is checked and a
    ValueError is raised when v is outside the span.
    """

    def __init__(self, columns):
        if not columns:
            self.k = 0
            self.n = None
            return
        self.k = len(columns)
        self.n = len(columns[0])
        # work matrix: columns side by side
        m = [[columns[j][i] for j in range(self.k)] for i in range(self.n)]
        self.ops = []  # (row_swap | eliminate) log applied later to RHS
        self.pivot_rows = []
        r = 0
        for c in range(self.k):
            pivot = None
            for i in range(r, self.n):
                if m[i][c]:
                    pivot = i
                    break
            if pivot is None:
                raise ValueError("columns are linearly dependent")
            if pivot != r:
                m[r], m[pivot] = m[pivot], m[r]
                self.ops.append(("swap", r, pivot, None))
            for i in range(r + 1, self.n):
                if m[i][c]:
                    f = m[i][c] / m[r][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
                    self.ops.append(("elim", i, r, f))
            self.pivot_rows.append(r)
            r += 1
        self.u = m  # upper-triangular in the first k pivot rows

    def solve(self, v):
        """Coordinates x with B x = v; raises ValueError if inconsistent."""
        if self.k == 0:
            if any(x for x in v):
                raise ValueError("inconsistent: empty basis, nonzero vector")
            return []
        w = list(v)
        for kind, i, j, f in self.ops:
            if kind == "swap":
                w[i], w[j] = w[j], w[i]
            else:
                w[i] = w[i] - f * w[j]
        x = [None] * self.k
        for c in range(self.k - 1, -1, -1):
            r = self.pivot_rows[c]
            s = w[r]
            for c2 in range(c + 1, self.k):
                if self.u[r][c2]:
                    s = s - self.u[r][c2] * x[c2]
            x[c] = s / self.u[r][c]
        # consistency: the remaining rows must vanish
        for r in range(self.k, self.n):
            s = w[r]
            for c2 in range(self.k):
                if self.u[r][c2]:
                    s = s - self.u[r][c2] * x[c2]
            if s:
                raise ValueError("vector outside column span")
        return x


def charpoly(m):
    """Characteristic polynomial of a square matrix, highest degree first.

    Faddeev-LeVerrier; exact in any field of characteristic zero.  Returns
    [1, c_{n-1}, ..., c_0] for det(xI - M).
    """
    n = len(m)
    one = m[0][0] - m[0][0] + 1
    zero = one - one
    coeffs = [one]
    a = [row[:] for row in m]
    for k in range(1, n + 1):
        c = -mat_trace(a) / k
        coeffs.append(c)
        if k == n:
            break
        for i in range(n):
            a[i][i] = a[i][i] + c
        a = mat_mul(m, a)
    return coeffs


def eigenvalues_all_at_most(m, bound) -> bool:
    """Exact test that every eigenvalue of self-adjoint `m` is <= bound.

    Works by checking that bound*I - m is positive semidefinite via the
    sign-alternation of its characteristic polynomial (valid because the
    matrix has real spectrum).
    """
    n = len(m)
    shifted = [[(bound if i == j else 0) - m[i][j] if i == j else -m[i][j]
                for j in range(n)] for i in range(n)]
    # fix diagonal: bound - m[i][i]
    for i in range(n):
        shifted[i][i] = bound - m[i][i]
    return poly_roots_nonnegative(charpoly(shifted))


def poly_roots_nonnegative(coeffs) -> bool:
    """True iff a real-rooted monic polynomial has only nonnegative roots.

    For p(x) = prod (x - r_i) with r_i real: all r_i >= 0 iff the
    coefficient of x^{n-j} times (-1)^j is >= 0 for every j.
    """
    for j, c in enumerate(coeffs):
        v = c if j % 2 == 0 else -c
        if _sign(v) < 0:
            return False
    return True


def _sign(x) -> int:
    if hasattr(x, "sign"):
        return x.sign()
    if isinstance(x, (int, Fraction)):
        return 0 if x == 0 else (1 if x > 0 else -1)
    if hasattr(x, "im") and hasattr(x, "re"):
        if x.im:
            raise ValueError("sign of a non-real scalar")
        v = x.re
        return 0 if v == 0 else (1 if v > 0 else -1)
    raise TypeError(type(x))
