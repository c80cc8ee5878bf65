import random

import pytest

from supercoh import brauer, corpus, operations, simplicial
from supercoh.brauer import (
    BrauerElement,
    abstract_group,
    add,
    commutativity_certificate,
    element,
    element_order,
    equals,
    identity_element,
    negate,
    twist_subgroup,
)
from supercoh.exact_linalg import AbelianGroupPresentation as G
from supercoh.simplicial import Cochain, cohomology, is_cohomologous

CORPUS = ("point", "s1", "s2", "t2", "klein", "rp2", "s1xs1")


def h1_generator(x):
    _, basis = cohomology(x, 1, 2)
    return basis[0].cochain


class TestElementValidation:
    def test_layouts(self, rp2):
        e = identity_element(rp2, "ku")
        assert (e.a.modulus, e.b.modulus, e.c.modulus) == (2, 2, 0)
        assert (e.a.degree, e.b.degree, e.c.degree) == (0, 1, 3)
        e = identity_element(rp2, "ko")
        assert (e.a.modulus, e.b.modulus, e.c.modulus) == (8, 2, 2)
        assert (e.a.degree, e.b.degree, e.c.degree) == (0, 1, 2)

    def test_unknown_variant(self, rp2):
        with pytest.raises(ValueError):
            identity_element(rp2, "kq")

    def test_noncocycle_rejected(self, rp2):
        vals = [0] * rp2.simplex_count(1)
        vals[0] = 1
        with pytest.raises(ValueError):
            element(rp2, "ko", b=vals)

    def test_context_mismatch(self, rp2, t2):
        with pytest.raises(ValueError):
            add(identity_element(rp2, "ko"), identity_element(t2, "ko"))
        with pytest.raises(ValueError):
            add(identity_element(rp2, "ko"), identity_element(rp2, "ku"))


class TestAdd:
    def test_identity_both_variants(self, rp2):
        rng = random.Random(0)
        for variant in ("ku", "ko"):
            x = brauer.random_element(rp2, variant, rng)
            assert equals(add(x, identity_element(rp2, variant)), x)

    def test_ko_rp2_order_four_element(self, rp2):
        w = h1_generator(rp2)
        x = element(rp2, "ko", b=w.values)
        x2 = add(x, x)
        # square lands in the c sector and equals w cup w, which is nonzero
        assert x2.a.is_zero() and x2.b.is_zero()
        assert is_cohomologous(x2.c, operations.cup(w, w))
        assert not is_cohomologous(x2.c, Cochain.zero(rp2, 2, 2))
        assert element_order(x) == 4

    def test_ku_extension_on_product(self):
        prod, p1, p2 = corpus.product_with_projections("rp2", "rp2")
        rp2 = corpus.complex_by_name("rp2")
        w = h1_generator(rp2)
        b1, b2 = p1.pullback(w), p2.pullback(w)
        x = element(prod, "ku", b=b1.values)
        y = element(prod, "ku", b=b2.values)
        z = add(x, y)
        s = operations.reduce_mod(z.c, 2)
        assert not is_cohomologous(s, Cochain.zero(prod, 3, 2))
        # Cartan: Sq1(b1 b2) = b1^2 b2 + b1 b2^2, the mixed classes of the product
        cartan = operations.cup(operations.cup(b1, b1), b2) + operations.cup(
            b1, operations.cup(b2, b2)
        )
        assert is_cohomologous(s, cartan)

    def test_twist_term_scaling(self, t2):
        # the c slot of x+y deviates from c+c' exactly when beta(b cup b') is
        # a nonzero class: never on the torus, always for the product pair
        rng = random.Random(9)
        for _ in range(5):
            x = brauer.random_element(t2, "ku", rng)
            y = brauer.random_element(t2, "ku", rng)
            s = add(x, y)
            assert is_cohomologous(s.c, x.c + y.c)
        prod, p1, p2 = corpus.product_with_projections("rp2", "rp2")
        rp2 = corpus.complex_by_name("rp2")
        w = h1_generator(rp2)
        x = element(prod, "ku", b=p1.pullback(w).values)
        y = element(prod, "ku", b=p2.pullback(w).values)
        s = add(x, y)
        assert not is_cohomologous(s.c, x.c + y.c)

    def test_forgetting_twist_is_homomorphism(self, klein):
        rng = random.Random(1)
        for variant in ("ku", "ko"):
            x = brauer.random_element(klein, variant, rng)
            y = brauer.random_element(klein, variant, rng)
            s = add(x, y)
            assert s.a.values == (x.a + y.a).values
            assert s.b.values == (x.b + y.b).values


class TestNegate:
    def test_identity(self, rp2):
        for variant in ("ku", "ko"):
            e = identity_element(rp2, variant)
            assert equals(negate(e), e)

    def test_ko_rp2(self, rp2):
        w = h1_generator(rp2)
        x = element(rp2, "ko", b=w.values)
        n = negate(x)
        assert is_cohomologous(n.c, operations.cup(w, w))
        assert equals(add(x, n), identity_element(rp2, "ko"))

    def test_ku_point_involution(self, point):
        x = element(point, "ku", a=[1])
        assert equals(negate(x), x)

    def test_randomized_inverse(self):
        rng = random.Random(2)
        for name in ("t2", "rp2", "klein"):
            x = corpus.complex_by_name(name)
            for variant in ("ku", "ko"):
                for _ in range(5):
                    el = brauer.random_element(x, variant, rng)
                    assert equals(add(el, negate(el)), identity_element(x, variant))


class TestEquals:
    def test_self(self, rp2):
        rng = random.Random(3)
        x = brauer.random_element(rp2, "ko", rng)
        assert equals(x, x)

    def test_coboundary_shift(self, rp2):
        rng = random.Random(4)
        x = brauer.random_element(rp2, "ko", rng)
        shifted = BrauerElement(
            "ko",
            x.a,
            x.b + brauer._random_coboundary(rp2, 1, 2, rng),
            x.c + brauer._random_coboundary(rp2, 2, 2, rng),
        )
        assert equals(x, shifted)

    def test_generator_vs_identity(self, rp2):
        w = h1_generator(rp2)
        x = element(rp2, "ko", b=w.values)
        assert not equals(x, identity_element(rp2, "ko"))


class TestElementOrder:
    def test_identity_is_one(self, rp2):
        for variant in ("ku", "ko"):
            assert element_order(identity_element(rp2, variant)) == 1

    def test_ko_point_full_order(self, point):
        assert element_order(element(point, "ko", a=[1])) == 8

    def test_cap_exceeded(self, point):
        assert element_order(element(point, "ko", a=[1]), cap=3) is None

    def test_free_part_is_infinite(self, s2):
        # H^2(S2;Z) = Z sits in no finite-order element... the c slot for ku
        # is degree 3, so build on a 3-sphere boundary instead: use s2 x s1
        prod, _, _ = corpus.product_with_projections("s2", "s1")
        _, basis = cohomology(prod, 3, 0)
        if basis:
            x = element(prod, "ku", c=basis[0].cochain.values)
            assert element_order(x) == "infinite"


class TestAbstractGroup:
    def test_point(self, point):
        assert abstract_group(point, "ku") == G(0, (2,))
        assert abstract_group(point, "ko") == G(0, (8,))

    def test_rp2_ko(self, rp2):
        assert abstract_group(rp2, "ko") == G(0, (4, 8))

    def test_s1_ku(self, s1):
        assert abstract_group(s1, "ku") == G(0, (2, 2))

    def test_order_matches_sector_product(self):
        # |G| = |H^0| * |H^1| * |H^c-torsion| for finite cases
        for name in ("point", "s1", "t2", "klein", "rp2", "rp2xrp2"):
            x = corpus.complex_by_name(name)
            for variant, mods in (("ku", (2, 2, 0)), ("ko", (8, 2, 2))):
                degs = (0, 1, 3) if variant == "ku" else (0, 1, 2)
                expected = 1
                for d, m in zip(degs, mods):
                    pres, _ = cohomology(x, d, m)
                    if m == 0:
                        o = 1
                        for f in pres.invariant_factors:
                            o *= f
                    else:
                        o = pres.order()
                    expected *= o
                got = abstract_group(x, variant).order()
                assert got == expected, (name, variant)

    def test_torus_untwisted(self, t2):
        # every degree-1 class lifts integrally, so the ku group is the plain product
        assert abstract_group(t2, "ku") == G(0, (2, 2, 2))

    def test_disconnected_base(self):
        from supercoh.simplicial import SimplicialComplex

        two_points = SimplicialComplex(2, [(0,), (1,)])
        assert abstract_group(two_points, "ku") == G(0, (2, 2))
        assert abstract_group(two_points, "ko") == G(0, (8, 8))
        circle_and_point = SimplicialComplex(4, [(0, 1), (1, 2), (0, 2), (3,)])
        assert abstract_group(circle_and_point, "ku") == G(0, (2, 2, 2))

    def test_product_groups(self, rp2xrp2):
        # ko: 2b1 = x^2 and 2b2 = y^2 force two Z/4 factors over H^2 = (Z/2)^3
        assert abstract_group(rp2xrp2, "ko") == G(0, (2, 4, 4, 8))
        assert twist_subgroup(rp2xrp2, "ko") == G(0, (2, 4, 4))
        # ku: beta(b^2) = 0 for both generators, so the group splits abstractly
        # even though the addition law carries the nonzero beta(b1 b2) twist
        assert abstract_group(rp2xrp2, "ku") == G(0, (2, 2, 2, 2))
        assert twist_subgroup(rp2xrp2, "ku") == G(0, (2, 2, 2))


class TestTwistSubgroup:
    def test_point_trivial(self, point):
        assert twist_subgroup(point, "ku").is_trivial()
        assert twist_subgroup(point, "ko").is_trivial()

    def test_rp2_ko(self, rp2):
        assert twist_subgroup(rp2, "ko") == G(0, (4,))

    def test_t2_ku(self, t2):
        assert twist_subgroup(t2, "ku") == G(0, (2, 2))

    def test_klein_ko(self, klein):
        # H^1 = (Z/2)^2, H^2 = Z/2 with one generator squaring nontrivially
        assert twist_subgroup(klein, "ko") == G(0, (2, 4))


class TestCommutativityCertificate:
    def test_equal_elements_zero_witness(self, rp2):
        rng = random.Random(5)
        x = brauer.random_element(rp2, "ko", rng)
        w = commutativity_certificate(x, x)
        assert w.is_zero()

    def test_product_pair_nonzero_witness(self):
        prod, p1, p2 = corpus.product_with_projections("rp2", "rp2")
        rp2 = corpus.complex_by_name("rp2")
        wgen = h1_generator(rp2)
        x = element(prod, "ku", b=p1.pullback(wgen).values)
        y = element(prod, "ku", b=p2.pullback(wgen).values)
        w = commutativity_certificate(x, y)
        assert not w.is_zero()

    def test_s1_pairs_trivial_classes(self, s1):
        rng = random.Random(6)
        for variant in ("ku", "ko"):
            x = brauer.random_element(s1, variant, rng)
            y = brauer.random_element(s1, variant, rng)
            commutativity_certificate(x, y)  # exact verification inside

    def test_randomized_witnesses(self):
        rng = random.Random(7)
        for name in ("t2", "klein", "rp2"):
            x = corpus.complex_by_name(name)
            for variant in ("ku", "ko"):
                for _ in range(5):
                    a = brauer.random_element(x, variant, rng)
                    b = brauer.random_element(x, variant, rng)
                    commutativity_certificate(a, b)


class TestGroupAxiomsRandomized:
    @pytest.mark.parametrize("name", CORPUS)
    def test_axioms(self, name):
        x = corpus.complex_by_name(name)
        rng = random.Random(hash(name) % 2**32)
        for variant in ("ku", "ko"):
            ident = identity_element(x, variant)
            for _ in range(10):
                a = brauer.random_element(x, variant, rng)
                b = brauer.random_element(x, variant, rng)
                c = brauer.random_element(x, variant, rng)
                assert equals(add(add(a, b), c), add(a, add(b, c)))
                assert equals(add(a, ident), a)
                assert equals(add(a, negate(a)), ident)
                assert equals(add(a, b), add(b, a))


def test_json_roundtrip(rp2):
    rng = random.Random(8)
    x = brauer.random_element(rp2, "ko", rng)
    data = x.to_json_dict()
    again = BrauerElement.from_json_dict(data, rp2)
    assert equals(x, again)
