"""Restriction of irreducible representations to a compatible subalgebra.

The embedding is described at the level of Cartan duals: a rational matrix
sending weights of the big algebra to weights of the subalgebra (identity
for equal rank, a coordinate projection when the rank drops, and the
principal 2a+b map for the 5-dimensional irreducible so(3) inside so(5)).

Branching itself is done by pushing the full weight multiset through the
embedding and repeatedly stripping the lexicographically highest dominant
weight together with the full weight multiset of its irreducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .roots import DomainError, RootSystem, Vec, vadd, vsub


class EmbeddingInconsistencyError(ValueError):
    """Subtraction drove a multiplicity negative: the embedding data is wrong."""


@dataclass(frozen=True)
class CartanEmbedding:
    """Weight-restriction map between two root systems."""

    g: RootSystem
    h: RootSystem
    matrix: tuple[tuple[int, ...], ...]  # acts on doubled coordinates

    def __post_init__(self):
        for row in self.matrix:
            if len(row) != self.g.ambient:
                raise DomainError("embedding matrix has wrong shape")
        if len(self.matrix) != self.h.ambient:
            raise DomainError("embedding matrix has wrong shape")
        self._check_root_lattice()

    def restrict(self, w: Vec) -> Vec:
        return tuple(sum(r * x for r, x in zip(row, w)) for row in self.matrix)

    def _check_root_lattice(self):
        """Every positive root of h must be hit from the g weight lattice."""
        for alpha in self.h.positive_roots:
            if not self._in_image(alpha):
                raise DomainError(
                    f"h-root {alpha} is outside the image of the embedding")

    def _in_image(self, target: Vec) -> bool:
        rows = [list(r) for r in self.matrix]
        n = self.g.ambient
        simple = all(
            all(x in (0, 1) for x in row) and sum(row) <= 1 for row in rows)
        if simple:
            return True
        if len(rows) == 1:
            g = 0
            for x in rows[0]:
                g = gcd(g, x)
            return g != 0 and target[0] % g == 0
        raise DomainError("unsupported embedding matrix shape for lattice check")


@dataclass
class BranchingResult:
    """Multiset of h-highest weights occurring in a restricted irreducible."""

    gamma: Vec
    embedding: CartanEmbedding
    components: dict[Vec, int] = field(default_factory=dict)

    def multiplicity(self, mu: Vec) -> int:
        return self.components.get(mu, 0)

    def total_dimension(self) -> int:
        h = self.embedding.h
        return sum(m * h.dimension(mu) for mu, m in self.components.items())


def restricted_multiset(gamma: Vec, emb: CartanEmbedding) -> dict[Vec, int]:
    """Weight multiset of V^gamma pushed through the embedding."""
    out: dict[Vec, int] = {}
    for w, m in emb.g.weight_multiset(gamma).items():
        rw = emb.restrict(w)
        out[rw] = out.get(rw, 0) + m
    return out


def branch(gamma: Vec, emb: CartanEmbedding) -> BranchingResult:
    """Decompose V^gamma restricted along `emb` into h-irreducibles."""
    g, h = emb.g, emb.h
    if not g.is_dominant(gamma):
        raise DomainError("branch: gamma must be dominant")
    remaining = {w: m for w, m in restricted_multiset(gamma, emb).items() if m}
    result: dict[Vec, int] = {}
    h_multiset_cache: dict[Vec, dict[Vec, int]] = {}
    while remaining:
        candidates = [w for w in remaining if h.is_dominant(w)]
        if not candidates:
            raise EmbeddingInconsistencyError(
                f"no dominant weight left in nonempty multiset for {gamma}")
        mu = max(candidates)
        mult = remaining[mu]
        if mult < 0:
            raise EmbeddingInconsistencyError(
                f"negative multiplicity {mult} at {mu} while branching {gamma}")
        result[mu] = result.get(mu, 0) + mult
        if mu not in h_multiset_cache:
            h_multiset_cache[mu] = h.weight_multiset(mu)
        for w, m in h_multiset_cache[mu].items():
            new = remaining.get(w, 0) - mult * m
            if new < 0:
                raise EmbeddingInconsistencyError(
                    f"multiplicity of {w} driven to {new} while branching {gamma}")
            if new:
                remaining[w] = new
            else:
                remaining.pop(w, None)
    br = BranchingResult(gamma=gamma, embedding=emb, components=result)
    if br.total_dimension() != g.dimension(gamma):
        raise EmbeddingInconsistencyError(
            f"dimension identity failed for {gamma}: "
            f"{br.total_dimension()} != {g.dimension(gamma)}")
    return br


def _signed_orbit(h: RootSystem, start: Vec):
    """Weyl orbit of a strictly dominant vector with determinant signs."""
    seen = {start: 1}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for a in h.simple_roots:
                u = h.reflect(v, a)
                if u not in seen:
                    seen[u] = -seen[v]
                    nxt.append(u)
        frontier = nxt
    return seen


def alternating_multiplicity(multiset: dict[Vec, int], h: RootSystem,
                             mu: Vec) -> int:
    """Multiplicity of the h-irreducible with h.w. mu inside a weight multiset.

    Weyl character alternation over the orbit of mu + rho_h; used as an
    independent cross-check of `branch` and as the fast admissibility test
    for very large representations.
    """
    target = vadd(mu, h.rho)
    total = 0
    for v, sign in _signed_orbit(h, target).items():
        total += sign * multiset.get(vsub(v, h.rho), 0)
    return total


def hom_dimension(gamma: Vec, emb: CartanEmbedding,
                  sigma_weights: list[Vec], sigma_mult: int) -> int:
    """dim Hom_H(V^gamma, Sigma) for Sigma = sigma_mult * (+) sigma_i."""
    multiset = restricted_multiset(gamma, emb)
    return sigma_mult * sum(
        alternating_multiplicity(multiset, emb.h, mu) for mu in sigma_weights)
