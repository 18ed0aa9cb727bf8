"""Clifford algebra generators and spin actions over the Gaussian rationals.

Generators are built by the usual 2x2 tensor recursion
    c_{2j-1} = t^(j-1) (x) a (x) 1...,   c_{2j} = t^(j-1) (x) b (x) 1...
with a = [[0,1],[-1,0]], b = [[0,i],[i,0]], t = [[1,0],[0,-1]], so that
c_i c_j + c_j c_i = -2 delta_ij on a module of dimension 2^floor(n/2).
All entries lie in {0, +-1, +-i}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .fields import GaussQ, I
from .linalg import mat_identity, mat_mul, mat_scale

ZERO = GaussQ(0)
ONE = GaussQ(1)

_A = ((ZERO, ONE), (-ONE, ZERO))
_B = ((ZERO, I), (I, ZERO))
_T = ((ONE, ZERO), (ZERO, -ONE))


def _kron(x, y):
    nx, ny = len(x), len(y)
    out = []
    for i in range(nx):
        for k in range(ny):
            out.append([x[i][j] * y[k][l] for j in range(nx) for l in range(ny)])
    return out


def _chain(factors):
    m = [[factors[0][i][j] for j in range(2)] for i in range(2)]
    for f in factors[1:]:
        m = _kron(m, f)
    return m


@lru_cache(maxsize=None)
def clifford_generators(n: int):
    """Tuple of n generator matrices of size 2^floor(n/2), c_i^2 = -1."""
    if n < 1:
        raise ValueError("need n >= 1")
    m = n // 2
    if n == 1:
        return ([[GaussQ(0, 1)]],)
    one2 = ((ONE, ZERO), (ZERO, ONE))
    gens = []
    for j in range(1, m + 1):
        pre = [_T] * (j - 1)
        post = [one2] * (m - j)
        gens.append(_chain(pre + [_A] + post))
        gens.append(_chain(pre + [_B] + post))
    if n % 2:
        gens.append(mat_scale(_chain([_T] * m), I))
    return tuple(gens)


def volume_element(gens):
    """Product c_1 ... c_n of the generators."""
    m = gens[0]
    for g in gens[1:]:
        m = mat_mul(m, g)
    return m


def spin_action(coeff, gens):
    """Quarter-sum (1/4) sum_ij coeff[j][i] c_i c_j of Clifford bilinears.

    `coeff[j][i]` is the matrix of a skew endomorphism of the underlying
    inner-product space in its orthonormal basis, i.e. <X e_i, e_j>; the
    result is the image of X under the infinitesimal spin representation.
    """
    n = len(gens)
    dim = len(gens[0])
    acc = [[ZERO] * dim for _ in range(dim)]
    quarter = Fraction(1, 4)
    for i in range(n):
        for j in range(n):
            c = coeff[j][i]
            if not c:
                continue
            prod = mat_mul(gens[i], gens[j])
            for r in range(dim):
                row = prod[r]
                arow = acc[r]
                for s in range(dim):
                    if row[s]:
                        arow[s] = arow[s] + row[s] * (c * quarter)
    return acc


def anticommutator_defect(gens):
    """Max violation of c_i c_j + c_j c_i = -2 delta_ij (None when exact)."""
    n = len(gens)
    dim = len(gens[0])
    for i in range(n):
        for j in range(i, n):
            m = mat_mul(gens[i], gens[j])
            m2 = mat_mul(gens[j], gens[i])
            for r in range(dim):
                for k in range(dim):
                    v = m[r][k] + m2[r][k]
                    if i == j and r == k:
                        v = v + 2
                    if v:
                        return (i, j, r, k, v)
    return None
