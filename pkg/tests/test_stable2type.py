import itertools

import pytest

from supercoh import stable2type as s2t
from supercoh.exact_linalg import AbelianGroupPresentation as G

Z = G(1, ())
Z2 = G(0, (2,))
Z3 = G(0, (3,))
Z4 = G(0, (4,))
Z8 = G(0, (8,))


class TestTensorMod2:
    def test_values(self):
        assert s2t.tensor_mod2(Z) == Z2
        assert s2t.tensor_mod2(Z8) == Z2
        assert s2t.tensor_mod2(Z3) == G.trivial()
        assert s2t.tensor_mod2(G(2, (6, 12))) == G(0, (2, 2, 2, 2))
        assert s2t.tensor_mod2(G(1, (3, 3))) == G(0, (2,))


class TestEnumeration:
    @pytest.mark.parametrize(
        "pi0,pi1,count",
        [(Z8, Z2, 2), (Z2, Z2, 2), (Z, Z2, 2), (Z3, Z2, 1), (Z2, Z3, 1)],
    )
    def test_counts(self, pi0, pi1, count):
        assert len(s2t.enumerate_symmetric_structures(pi0, pi1)) == count

    def test_formula_vs_bruteforce(self):
        # |structures| = |Hom(pi0 (x) Z/2, pi1[2])| counted elementwise
        groups = [Z, Z2, Z3, Z8, G(0, (2, 4)), G(1, (2,))]
        for pi0, pi1 in itertools.product(groups, repeat=2):
            tor2 = [
                x
                for x in itertools.product(*(range(d) for d in pi1.invariant_factors))
                if all((2 * c) % d == 0 for c, d in zip(x, pi1.invariant_factors))
            ]
            s = s2t.tensor_mod2(pi0)
            expected = len(tor2) ** len(s.invariant_factors)
            got = len(s2t.enumerate_symmetric_structures(pi0, pi1))
            assert got == expected, (pi0, pi1)

    def test_cap(self):
        big = G(0, (2,) * 8)
        with pytest.raises(ValueError):
            s2t.enumerate_symmetric_structures(big, big, cap=10)


class TestValidation:
    def test_q_must_be_two_torsion(self):
        with pytest.raises(ValueError):
            s2t.Stable2TypeData(Z2, Z4, ((1,),))
        s2t.Stable2TypeData(Z2, Z4, ((2,),))  # d/2 is fine

    def test_q_column_count(self):
        with pytest.raises(ValueError):
            s2t.Stable2TypeData(Z2, Z2, ())


class TestEquivalence:
    def test_reflexive(self):
        for data in s2t.catalog().values():
            assert s2t.equivalent(data, data)

    def test_zero_vs_nonzero(self):
        nonzero = s2t.Stable2TypeData(Z2, Z2, ((1,),))
        zero = s2t.Stable2TypeData(Z2, Z2, ((0,),))
        assert not s2t.equivalent(nonzero, zero)
        assert not s2t.equivalent(zero, nonzero)

    def test_z4_nonzero_structures(self):
        a = s2t.Stable2TypeData(Z4, Z2, ((1,),))
        b = s2t.Stable2TypeData(Z4, Z2, ((1,),))
        assert s2t.equivalent(a, b)

    def test_different_groups(self):
        assert not s2t.equivalent(
            s2t.Stable2TypeData(Z2, Z2, ((1,),)),
            s2t.Stable2TypeData(Z4, Z2, ((1,),)),
        )

    def test_symmetric_and_transitive_sample(self):
        pool = s2t.enumerate_symmetric_structures(G(0, (2, 2)), Z2)
        for a, b in itertools.product(pool, repeat=2):
            ab = s2t.equivalent(a, b)
            ba = s2t.equivalent(b, a)
            assert ab == ba
        # transitivity spot check on an equivalence chain
        for a, b, c in itertools.product(pool, repeat=3):
            if s2t.equivalent(a, b) and s2t.equivalent(b, c):
                assert s2t.equivalent(a, c)

    def test_swap_generators_equivalence(self):
        # (Z/2)^2 with q hitting one generator is equivalent to hitting the other
        pi0 = G(0, (2, 2))
        a = s2t.Stable2TypeData(pi0, Z2, ((1,), (0,)))
        b = s2t.Stable2TypeData(pi0, Z2, ((0,), (1,)))
        assert s2t.equivalent(a, b)


class TestCatalog:
    def test_entries(self):
        cat = s2t.catalog()
        assert cat["sphere"].pi0 == Z
        assert cat["ku"].pi0 == Z2
        assert cat["ko"].pi0 == Z8
        for name in ("sphere", "ku", "ko"):
            assert cat[name].pi1 == Z2
            assert not s2t.is_trivial(cat[name])

    def test_freed_aliases(self):
        cat = s2t.catalog()
        assert cat["calg_c"] == cat["ku"]
        assert cat["calg_r"] == cat["ko"]

    def test_unit_compatibility(self):
        cat = s2t.catalog()
        for name in ("ku", "ko"):
            unit = s2t.unit_map_matrix(name)
            induced = s2t.mod2_induced_map(unit, cat["sphere"].pi0, cat[name].pi0)
            assert s2t.compose_q_with_mod2(cat[name], induced) == cat["sphere"].q


class TestProduct:
    def test_unit_product(self):
        triv = s2t.Stable2TypeData(G.trivial(), G.trivial(), ())
        for data in s2t.catalog().values():
            p = s2t.product(data, triv)
            assert p.pi0 == data.pi0 and p.pi1 == data.pi1 and p.q == data.q

    def test_rank_addition(self):
        cat = s2t.catalog()
        p = s2t.product(cat["sphere"], cat["sphere"])
        assert p.pi0 == G(2, ())
        assert len(p.q) == 2

    def test_block_structure(self):
        cat = s2t.catalog()
        p = s2t.product(cat["ku"], cat["ko"])
        assert p.pi0 == G(0, (2, 8))
        assert p.pi1 == G(0, (2, 2))
        # each factor's generator maps into its own pi1 summand
        cols = sorted(p.q)
        assert cols == [(0, 1), (1, 0)]

    def test_product_preserves_nontriviality(self):
        cat = s2t.catalog()
        assert not s2t.is_trivial(s2t.product(cat["ku"], cat["ku"]))

    def test_coprime_torsion_normalization(self):
        # Z/3 x Z/2 renormalizes to Z/6; the odd factor contributes nothing
        # mod 2, so the transported q is exactly the ku generator's image
        cat = s2t.catalog()
        d3 = s2t.Stable2TypeData(G(0, (3,)), G.trivial(), ())
        p = s2t.product(d3, cat["ku"])
        assert p.pi0 == G(0, (6,))
        assert p.pi1 == G(0, (2,))
        assert p.q == ((1,),)
        assert not s2t.is_trivial(p)

    def test_triviality_multiplicative(self):
        zero = s2t.Stable2TypeData(Z2, Z2, ((0,),))
        nonzero = s2t.Stable2TypeData(Z2, Z2, ((1,),))
        assert s2t.is_trivial(s2t.product(zero, zero))
        assert not s2t.is_trivial(s2t.product(zero, nonzero))
        assert not s2t.is_trivial(s2t.product(nonzero, zero))

    def test_product_with_z4_pi1(self):
        # 2-torsion of Z/4 is {0, 2}; transport must keep values 2-torsion
        a = s2t.Stable2TypeData(Z2, Z4, ((2,),))
        b = s2t.Stable2TypeData(Z2, Z2, ((1,),))
        p = s2t.product(a, b)
        assert p.pi0 == G(0, (2, 2))
        assert p.pi1 == G(0, (2, 4))
        for col in p.q:
            doubled = [2 * c for c in col]
            assert all(
                d % o == 0 for d, o in zip(doubled, (2, 4))
            )
        assert not s2t.is_trivial(p)
