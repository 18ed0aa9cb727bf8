from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diracbound.roots import (DomainError, LieConfigError, RootSystem,
                              fundamental_generators, vadd, vneg, vscale)

B2 = RootSystem("B", 2)            # so(5) with the -tr/2 metric
A3 = RootSystem("A", 3)            # su(4)
G2 = RootSystem("G", 2)
A1 = RootSystem("A", 1)


def w(*xs):
    """Weight in ordinary epsilon-coordinates; stores doubled integers."""
    out = []
    for x in xs:
        d = Fraction(x) * 2
        assert d.denominator == 1
        out.append(int(d))
    return tuple(out)


class TestConstruction:
    def test_positive_root_counts(self):
        assert len(A3.positive_roots) == 6
        assert len(B2.positive_roots) == 4
        assert len(G2.positive_roots) == 6
        assert len(RootSystem("C", 3).positive_roots) == 9
        assert len(RootSystem("D", 4).positive_roots) == 12

    def test_b2_rho_and_norm(self):
        # direct summation oracle: positive roots of B2 are e1+-e2, e1, e2
        roots = [w(1, -1), w(1, 1), w(1, 0), w(0, 1)]
        acc = (0, 0)
        for r in roots:
            acc = vadd(acc, r)
        assert B2.rho == tuple(x // 2 for x in acc) == w(Fraction(3, 2), Fraction(1, 2))
        assert B2.norm2(B2.rho) == Fraction(10, 4)
        # so(3) inside so(5) has |rho_H|^2 = 1/20: the difference matches 49/20
        assert B2.norm2(B2.rho) - Fraction(49, 20) == Fraction(1, 20)

    def test_rho_equals_half_sum_everywhere(self):
        for rs in (A3, B2, G2, RootSystem("D", 3), RootSystem("C", 2)):
            acc = tuple([0] * rs.ambient)
            for r in rs.positive_roots:
                acc = vadd(acc, r)
            assert rs.rho == tuple(x // 2 for x in acc)

    def test_unsupported_family(self):
        with pytest.raises(LieConfigError):
            RootSystem("E", 8)
        with pytest.raises(LieConfigError):
            RootSystem("G", 3)

    def test_gram_positive_definite(self):
        for rs in (A3, B2, G2):
            g = rs.gram_matrix()
            assert all(g[i][j] == g[j][i] for i in range(len(g))
                       for j in range(len(g)))

    def test_cartan_matrix_g2(self):
        cm = G2.cartan_matrix()
        assert sorted([cm[0][1], cm[1][0]]) == [-3, -1]
        assert cm[0][0] == cm[1][1] == 2


class TestCasimir:
    def test_trivial(self):
        assert B2.casimir((0, 0)) == 0
        assert A3.casimir((0, 0, 0, 0)) == 0

    def test_so5_standard(self):
        # oracle: |gamma+rho|^2 - |rho|^2 = (5/2)^2 + (1/2)^2 - 10/4 = 4
        gamma = w(1, 0)
        lhs = B2.norm2(vadd(gamma, B2.rho)) - B2.norm2(B2.rho)
        assert lhs == 4
        assert B2.casimir(gamma) == 4

    @pytest.mark.parametrize("p,q", [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1)])
    def test_so5_closed_form(self, p, q):
        # closed form p^2 + 3p + q^2 + q for the -tr/2 metric on so(5)
        assert B2.casimir(w(p, q)) == p * p + 3 * p + q * q + q

    def test_non_dominant_rejected(self):
        with pytest.raises(DomainError):
            B2.casimir(w(0, 1))

    def test_zero_iff_trivial(self):
        for c, wt in B2.enumerate_dominant(fundamental_generators(B2),
                                           limit=Fraction(8)):
            assert (c == 0) == (wt == (0, 0))

    def test_dual_invariance(self):
        for gamma in [w(1, 0, 0, 0), w(1, 1, 0, 0), w(2, 1, 0, 0)]:
            assert A3.casimir(gamma) == A3.casimir(A3.dual_weight(gamma))

    def test_scaling_monotone(self):
        for gamma in [w(1, 0), w(Fraction(1, 2), Fraction(1, 2)), w(1, 1)]:
            prev = B2.casimir(gamma)
            for k in (2, 3):
                cur = B2.casimir(vscale(gamma, k))
                assert cur > prev
                prev = cur


class TestMultiplicities:
    def test_a1_adjoint(self):
        adj = w(1, -1)
        ms = A1.weight_multiset(adj)
        assert ms == {w(1, -1): 1, w(0, 0): 1, w(-1, 1): 1}

    def test_a3_adjoint_zero_weight(self):
        # oracle: character of 4 (x) 4bar minus the trivial summand
        std = [w(1, 0, 0, 0), w(0, 1, 0, 0), w(0, 0, 1, 0), w(0, 0, 0, 1)]
        conv: dict = {}
        for u in std:
            for v in std:
                k = vadd(u, vneg(v))
                conv[k] = conv.get(k, 0) + 1
        conv[(0, 0, 0, 0)] -= 1
        adj = w(1, 0, 0, -1)
        assert A3.weight_multiset(adj) == {k: v for k, v in conv.items() if v}
        assert A3.multiplicity_at(adj, (0, 0, 0, 0)) == 3

    def test_b2_spin(self):
        spin = w(Fraction(1, 2), Fraction(1, 2))
        ms = A3_spin = B2.weight_multiset(spin)
        assert len(ms) == 4
        assert all(m == 1 for m in ms.values())
        assert set(ms) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
        assert B2.dimension(spin) == 4

    def test_highest_weight_mult_one(self):
        for gamma in [w(1, 1), w(2, 1), w(Fraction(3, 2), Fraction(1, 2))]:
            assert B2.weight_multiplicities(gamma)[gamma] == 1

    def test_sum_matches_dimension(self):
        for rs, gamma in [(B2, w(1, 1)), (B2, w(2, 0)), (A3, w(1, 1, 0, 0)),
                          (G2, (0, -2, 2)), (A3, w(2, 1, 0, 0))]:
            ms = rs.weight_multiset(gamma)
            assert sum(ms.values()) == rs.dimension(gamma)

    def test_weyl_invariance(self):
        for rs, gamma in [(B2, w(2, 1)), (A3, w(1, 1, 0, 0)), (G2, (0, -2, 2))]:
            ms = rs.weight_multiset(gamma)
            for alpha in rs.simple_roots:
                for wt, m in ms.items():
                    assert ms[rs.reflect(wt, alpha)] == m


class TestDimension:
    def test_trivial(self):
        assert B2.dimension((0, 0)) == 1

    def test_b2_lambda2(self):
        # oracle: antisymmetric square of the 5-dim standard representation
        std = [w(1, 0), w(-1, 0), w(0, 1), w(0, -1), w(0, 0)]
        pairs = [vadd(std[i], std[j]) for i in range(5) for j in range(i + 1, 5)]
        assert len(pairs) == 10
        assert max(pairs) == w(1, 1)
        assert B2.dimension(w(1, 1)) == 10

    def test_g2_seven(self):
        assert G2.dimension((0, -2, 2)) == 7

    def test_spheres_spinor_dims(self):
        # spin representation of so(2m+1) has dimension 2^m
        for m in (1, 2, 3):
            rs = RootSystem("B", m)
            spin = tuple([1] * m)
            assert rs.dimension(spin) == 2 ** m

    def test_su4_dims(self):
        assert A3.dimension(w(1, 0, 0, 0)) == 4
        assert A3.dimension(w(1, 1, 0, 0)) == 6
        assert A3.dimension(w(1, 1, 1, 0)) == 4
        assert A3.dimension(w(1, 0, 0, -1)) == 15
        assert A3.dimension(w(2, 0, 0, 0)) == 10


class TestEnumeration:
    def test_order_is_nondecreasing(self):
        last = Fraction(-1)
        count = 0
        for c, wt in B2.enumerate_dominant(fundamental_generators(B2),
                                           limit=Fraction(20)):
            assert c >= last
            assert B2.is_dominant(wt)
            last = c
            count += 1
        assert count > 5

    def test_enumeration_complete_b2(self):
        got = {wt for _, wt in B2.enumerate_dominant(
            fundamental_generators(B2), limit=Fraction(10))}
        # brute force over a box of doubled coordinates
        expect = set()
        for a in range(0, 12):
            for b in range(0, 12):
                if (a - b) % 2 == 0 and a >= b:
                    wt = (a, b)
                    if B2.casimir(wt) <= 10:
                        expect.add(wt)
        assert got == expect

    def test_budget(self):
        from diracbound.roots import SearchBudgetError
        with pytest.raises(SearchBudgetError):
            list(B2.enumerate_dominant(fundamental_generators(B2),
                                       limit=Fraction(10 ** 6), budget=10))


@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3))
@settings(max_examples=20, deadline=None)
def test_dominantize_idempotent_and_in_orbit(a, b):
    wt = (2 * a + 2 * b, 2 * b)  # dominant B2 weight
    for v in B2.weyl_orbit(wt):
        assert B2.dominantize(v) == wt
