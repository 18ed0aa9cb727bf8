"""Root systems, weights, Casimir eigenvalues and weight multiplicities.

Weights and roots are stored as tuples of integers holding *doubled*
epsilon-coordinates, so the half-integer spin weights stay integral.  A
weight (3, 1) of B2 therefore means (3/2, 1/2) in the usual coordinates.

The invariant inner product is a rational multiple (``gram_scale``) of the
standard Euclidean pairing of epsilon-coordinates; for the A family the
pairing is taken modulo the all-ones direction, and a diagonal Gram matrix
is supported for embedded Cartan subalgebras whose metric is rescaled.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

Vec = tuple[int, ...]


class LieConfigError(ValueError):
    """Unsupported family/rank combination or malformed root data."""


class DomainError(ValueError):
    """Operation applied outside its stated domain (e.g. non-dominant weight)."""


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vscale(u: Vec, k: int) -> Vec:
    return tuple(k * a for a in u)


def _dot(u: Vec, v: Vec) -> int:
    return sum(a * b for a, b in zip(u, v))


class RootSystem:
    """A reduced root system with an invariant rational inner product.

    Parameters
    ----------
    family : one of "A", "B", "C", "D", "G"
    rank : rank of the (semisimple part of the) system; for embedded or
        reducible systems use `from_roots`.
    gram_scale : global rational scale of the weight-space inner product.
    """

    def __init__(self, family: str, rank: int, gram_scale=Fraction(1)):
        family = family.upper()
        if family not in ("A", "B", "C", "D", "G"):
            raise LieConfigError(f"unsupported family {family!r}")
        if family == "G" and rank != 2:
            raise LieConfigError("G family only exists in rank 2")
        if rank < 1:
            raise LieConfigError("rank must be positive")
        self.family = family
        self.rank = rank
        self.gram_scale = Fraction(gram_scale)
        self.ambient = {"A": rank + 1, "G": 3}.get(family, rank)
        # only the A family works modulo the all-ones direction; G2 weights
        # are honest sum-zero vectors of R^3
        self.sum_zero = family == "A"
        self.gram_diag = None
        self.positive_roots = self._positive_roots()
        self.simple_roots = self._simple_roots()
        self.rho = self._half_sum()
        self._simple_coord_cache: dict[Vec, tuple[Fraction, ...]] = {}
        self._validate()

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_roots(cls, positive_roots, simple_roots, ambient,
                   gram_scale=Fraction(1), sum_zero=False, gram_diag=None,
                   name="custom"):
        """Root data given explicitly (embedded / reducible / torus cases)."""
        rs = cls.__new__(cls)
        rs.family = name
        rs.rank = len(simple_roots)
        rs.gram_scale = Fraction(gram_scale)
        rs.ambient = ambient
        rs.sum_zero = sum_zero
        rs.gram_diag = tuple(Fraction(d) for d in gram_diag) if gram_diag else None
        rs.positive_roots = [tuple(r) for r in positive_roots]
        rs.simple_roots = [tuple(r) for r in simple_roots]
        rs.rho = rs._half_sum()
        rs._simple_coord_cache = {}
        rs._validate()
        return rs

    # -- construction helpers --------------------------------------------

    def _positive_roots(self):
        l, fam = self.rank, self.family
        roots = []
        if fam == "A":
            n = l + 1
            for i in range(n):
                for j in range(i + 1, n):
                    r = [0] * n
                    r[i], r[j] = 2, -2
                    roots.append(tuple(r))
        elif fam in ("B", "C", "D"):
            for i in range(l):
                for j in range(i + 1, l):
                    for sj in (-2, 2):
                        r = [0] * l
                        r[i], r[j] = 2, sj
                        roots.append(tuple(r))
            if fam == "B":
                for i in range(l):
                    r = [0] * l
                    r[i] = 2
                    roots.append(tuple(r))
            elif fam == "C":
                for i in range(l):
                    r = [0] * l
                    r[i] = 4
                    roots.append(tuple(r))
        else:  # G2 in the sum-zero plane of R^3
            a1, a2 = (2, -2, 0), (-4, 2, 2)
            roots = [a1, a2, vadd(a1, a2), vadd(vscale(a1, 2), a2),
                     vadd(vscale(a1, 3), a2), vadd(vscale(a1, 3), vscale(a2, 2))]
        return roots

    def _simple_roots(self):
        l, fam = self.rank, self.family
        if fam == "A":
            n = l + 1
            out = []
            for i in range(l):
                r = [0] * n
                r[i], r[i + 1] = 2, -2
                out.append(tuple(r))
            return out
        if fam in ("B", "C", "D"):
            out = []
            for i in range(l - 1):
                r = [0] * l
                r[i], r[i + 1] = 2, -2
                out.append(tuple(r))
            last = [0] * l
            if fam == "B":
                last[l - 1] = 2
            elif fam == "C":
                last[l - 1] = 4
            else:
                if l >= 2:
                    last[l - 2], last[l - 1] = 2, 2
                else:
                    return out  # D1 is a torus: no roots
            out.append(tuple(last))
            return out
        return [(2, -2, 0), (-4, 2, 2)]

    def _half_sum(self) -> Vec:
        if not self.positive_roots:
            return tuple([0] * self.ambient)
        acc = [0] * self.ambient
        for r in self.positive_roots:
            for i, x in enumerate(r):
                acc[i] += x
        if any(x % 2 for x in acc):
            raise LieConfigError("half-sum of positive roots is not a lattice point")
        return tuple(x // 2 for x in acc)

    def _validate(self):
        counts = {"A": self.rank * (self.rank + 1) // 2,
                  "B": self.rank * self.rank,
                  "C": self.rank * self.rank,
                  "D": self.rank * (self.rank - 1),
                  "G": 6}
        expected = counts.get(self.family)
        if expected is not None and len(self.positive_roots) != expected:
            raise LieConfigError(
                f"{self.family}{self.rank}: expected {expected} positive roots, "
                f"got {len(self.positive_roots)}")
        for a in self.simple_roots:
            if a not in self.positive_roots:
                raise LieConfigError("simple root missing from positive roots")
        g = self.gram_matrix()
        n = len(g)
        for k in range(1, n + 1):
            if _det([row[:k] for row in g[:k]]) <= 0:
                raise LieConfigError("Gram matrix is not positive definite")

    # -- inner product ----------------------------------------------------

    def ip0(self, u: Vec, v: Vec) -> Fraction:
        """Scale-free inner product of two stored (doubled) weights."""
        if self.gram_diag is not None:
            s = sum(d * a * b for d, a, b in zip(self.gram_diag, u, v))
            return Fraction(s, 4) if isinstance(s, int) else s / 4
        d = _dot(u, v)
        if self.sum_zero:
            return Fraction(d, 4) - Fraction(sum(u) * sum(v), 4 * self.ambient)
        return Fraction(d, 4)

    def ip(self, u: Vec, v: Vec) -> Fraction:
        return self.gram_scale * self.ip0(u, v)

    def norm2(self, u: Vec) -> Fraction:
        return self.ip(u, u)

    def gram_matrix(self):
        """Rational Gram matrix on a basis of the weight space."""
        if self.gram_diag is not None:
            return [[self.gram_diag[i] if i == j else Fraction(0)
                     for j in range(self.ambient)] for i in range(self.ambient)]
        n = self.ambient
        if self.sum_zero:
            # restrict I - J/n to the first n-1 coordinates of representatives
            return [[(Fraction(1) if i == j else Fraction(0)) - Fraction(1, n)
                     for j in range(n - 1)] for i in range(n - 1)]
        return [[Fraction(1) if i == j else Fraction(0)
                 for j in range(n)] for i in range(n)]

    def cartan_matrix(self):
        return [[self.coroot_pairing(b, a) for b in self.simple_roots]
                for a in self.simple_roots]

    # -- dominance and the Weyl group --------------------------------------

    def coroot_pairing(self, w: Vec, alpha: Vec) -> Fraction:
        num = 2 * self.ip0(w, alpha)
        den = self.ip0(alpha, alpha)
        return num / den

    def is_dominant(self, w: Vec) -> bool:
        return all(self.coroot_pairing(w, a) >= 0 for a in self.simple_roots)

    def reflect(self, w: Vec, alpha: Vec) -> Vec:
        k = self.coroot_pairing(w, alpha)
        if k.denominator != 1:
            raise DomainError("weight is not in the lattice of this root system")
        return vsub(w, vscale(alpha, int(k)))

    def dominantize(self, w: Vec) -> Vec:
        cur = w
        changed = True
        while changed:
            changed = False
            for a in self.simple_roots:
                if self.coroot_pairing(cur, a) < 0:
                    cur = self.reflect(cur, a)
                    changed = True
        return cur

    def weyl_orbit(self, w: Vec) -> set[Vec]:
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for v in frontier:
                for a in self.simple_roots:
                    u = self.reflect(v, a)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return seen

    def dual_weight(self, w: Vec) -> Vec:
        """Highest weight of the dual representation, -w0 w."""
        return self.dominantize(vneg(w))

    # -- representation data -----------------------------------------------

    def casimir(self, w: Vec) -> Fraction:
        """Casimir eigenvalue <w, w + 2*rho> of the irreducible with h.w. w."""
        if not self.is_dominant(w):
            raise DomainError(f"casimir: weight {w} is not dominant")
        return self.ip(w, vadd(w, vscale(self.rho, 2)))

    def _simple_coords(self, v: Vec):
        """Coordinates of v in the simple-root basis (None if outside span)."""
        if v in self._simple_coord_cache:
            return self._simple_coord_cache[v]
        # solve sum c_i alpha_i = v by pairing with simple coroots:
        # coroot_pairing(v, a_j) = sum_i c_i A_ji with A the Cartan matrix
        n = len(self.simple_roots)
        if n == 0:
            return None if any(v) else ()
        a = [[Fraction(self.coroot_pairing(self.simple_roots[i], aj))
              for i in range(n)] for aj in self.simple_roots]
        b = [Fraction(self.coroot_pairing(v, aj)) for aj in self.simple_roots]
        coords = _solve_square(a, b)
        if coords is None:
            self._simple_coord_cache[v] = None
            return None
        # confirm (v may have a component outside the root span)
        acc = [Fraction(0)] * self.ambient
        for c, alpha in zip(coords, self.simple_roots):
            for i, x in enumerate(alpha):
                acc[i] += c * x
        resid = [Fraction(x) - y for x, y in zip(v, acc)]
        if self.sum_zero:
            ok = len(set(resid)) == 1  # multiple of the all-ones vector
        else:
            ok = all(r == 0 for r in resid)
        out = tuple(coords) if ok else None
        self._simple_coord_cache[v] = out
        return out

    def lattice_le(self, mu: Vec, lam: Vec) -> bool:
        """True iff lam - mu is a nonnegative integer sum of simple roots."""
        coords = self._simple_coords(vsub(lam, mu))
        if coords is None:
            return False
        return all(c.denominator == 1 and c >= 0 for c in coords)

    def weights_of(self, lam: Vec) -> set[Vec]:
        """All distinct weights of the irreducible with highest weight lam."""
        if not self.is_dominant(lam):
            raise DomainError("weights_of: highest weight must be dominant")
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for v in frontier:
                for a in self.simple_roots:
                    u = vsub(v, a)
                    if u in seen:
                        continue
                    if self.lattice_le(self.dominantize(u), lam):
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return seen

    def dominant_weights_of(self, lam: Vec) -> list[Vec]:
        doms = [w for w in self.weights_of(lam) if self.is_dominant(w)]
        doms.sort(key=lambda w: (-self.ip0(w, w), w))
        return doms

    def weight_multiplicities(self, lam: Vec) -> dict[Vec, int]:
        """Multiplicity of every dominant weight of V^lam (Freudenthal)."""
        if not self.is_dominant(lam):
            raise DomainError("weight_multiplicities: weight must be dominant")
        doms = self.dominant_weights_of(lam)
        # process by decreasing closeness to lam
        def height(mu):
            coords = self._simple_coords(vsub(lam, mu))
            return sum(coords)
        doms.sort(key=height)
        lam_rho = vadd(lam, self.rho)
        nlam = self.ip0(lam_rho, lam_rho)
        mult: dict[Vec, int] = {}
        all_weights = self.weights_of(lam)
        for mu in doms:
            if mu == lam:
                mult[mu] = 1
                continue
            total = Fraction(0)
            for alpha in self.positive_roots:
                nu = vadd(mu, alpha)
                while nu in all_weights:
                    m = mult.get(self.dominantize(nu))
                    if m is None:
                        raise RuntimeError("Freudenthal ordering failure")
                    total += m * self.ip0(nu, alpha)
                    nu = vadd(nu, alpha)
            mu_rho = vadd(mu, self.rho)
            den = nlam - self.ip0(mu_rho, mu_rho)
            val = 2 * total / den
            if val.denominator != 1 or val <= 0:
                raise RuntimeError("Freudenthal produced a non-positive multiplicity")
            mult[mu] = int(val)
        return mult

    def weight_multiset(self, lam: Vec) -> dict[Vec, int]:
        """Multiplicity of *every* weight of V^lam (full Weyl orbits)."""
        out: dict[Vec, int] = {}
        for mu, m in self.weight_multiplicities(lam).items():
            for w in self.weyl_orbit(mu):
                out[w] = m
        return out

    def dimension(self, lam: Vec) -> int:
        if not self.is_dominant(lam):
            raise DomainError("dimension: weight must be dominant")
        num = Fraction(1)
        lam_rho = vadd(lam, self.rho)
        for alpha in self.positive_roots:
            num *= self.ip0(lam_rho, alpha) / self.ip0(self.rho, alpha)
        if num.denominator != 1:
            raise RuntimeError("Weyl dimension formula gave a non-integer")
        return int(num)

    def multiplicity_at(self, lam: Vec, nu: Vec) -> int:
        """Multiplicity of the (arbitrary) weight nu inside V^lam."""
        nu_dom = self.dominantize(nu)
        if not self.lattice_le(nu_dom, lam):
            return 0
        return self.weight_multiplicities(lam).get(nu_dom, 0)

    # -- ordered enumeration ------------------------------------------------

    def enumerate_dominant(self, generators: Iterable[Vec],
                           limit: Fraction | None = None,
                           budget: int = 100000) -> Iterator[tuple[Fraction, Vec]]:
        """Yield (casimir, weight) over the monoid spanned by `generators`,
        in nondecreasing Casimir order, starting from the zero weight.

        Stops when the queue head exceeds `limit` (if given).  Raises
        SearchBudgetError when more than `budget` nodes are popped.
        """
        zero = tuple([0] * self.ambient)
        gens = [tuple(g) for g in generators]
        heap: list[tuple[Fraction, Vec]] = [(Fraction(0), zero)]
        seen = {zero}
        popped = 0
        while heap:
            c, w = heapq.heappop(heap)
            if limit is not None and c > limit:
                return
            popped += 1
            if popped > budget:
                raise SearchBudgetError(popped, c)
            yield c, w
            for g in gens:
                u = vadd(w, g)
                if u not in seen:
                    seen.add(u)
                    heapq.heappush(heap, (self.casimir(u), u))


class SearchBudgetError(RuntimeError):
    """Best-first enumeration exceeded its node budget."""

    def __init__(self, nodes: int, reached):
        super().__init__(f"search budget exhausted after {nodes} nodes "
                         f"(casimir reached {reached})")
        self.nodes = nodes
        self.reached = reached


def fundamental_generators(rs: RootSystem) -> list[Vec]:
    """Monoid generators of the dominant chamber of the full weight lattice.

    For the A family, representatives are normalised with last coordinate 0.
    """
    l, fam = rs.rank, rs.family
    if fam == "A":
        n = l + 1
        return [tuple([2] * j + [0] * (n - j)) for j in range(1, n)]
    if fam == "B":
        gens = [tuple([2] * j + [0] * (l - j)) for j in range(1, l)]
        gens.append(tuple([1] * l))
        return gens
    if fam == "C":
        return [tuple([2] * j + [0] * (l - j)) for j in range(1, l + 1)]
    if fam == "D":
        gens = [tuple([2] * j + [0] * (l - j)) for j in range(1, l - 1)]
        gens.append(tuple([1] * (l - 1) + [-1]))
        gens.append(tuple([1] * l))
        return gens
    if fam == "G":
        return [(0, -2, 2), (-2, -2, 4)]
    raise LieConfigError(f"no generator table for family {fam}")


def _det(m):
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def _solve_square(a, b):
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]
