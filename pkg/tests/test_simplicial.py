import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercoh import corpus
from supercoh.exact_linalg import AbelianGroupPresentation as G
from supercoh.simplicial import (
    Cochain,
    CohomologyClass,
    SimplicialComplex,
    SimplicialMap,
    class_coordinates,
    coboundary_matrix,
    cohomology,
    generator_orders,
    is_cohomologous,
)

MODULI = (0, 2, 3, 4, 8)


def test_closure_and_indexing(rp2):
    assert rp2.simplex_count(0) == 6
    assert rp2.simplex_count(1) == 15
    assert rp2.simplex_count(2) == 10
    assert rp2.index_of((0, 1)) >= 0
    assert rp2.contains((0, 1, 3))
    assert not rp2.contains((0, 1, 2))


def test_bad_simplices_rejected():
    with pytest.raises(ValueError):
        SimplicialComplex(3, [(1, 0)])
    with pytest.raises(ValueError):
        SimplicialComplex(2, [(0, 5)])
    with pytest.raises(ValueError):
        SimplicialComplex(8, [tuple(range(8))])  # above the dimension cap


def test_components(s1, rp2):
    assert len(s1.components()) == 1
    two = SimplicialComplex(4, [(0, 1), (2, 3)])
    assert two.components() == ((0, 1), (2, 3))
    assert two.component_of(3) == 1


def test_coboundary_point(point):
    m = coboundary_matrix(point, 0)
    assert (m.rows, m.cols) == (0, 1)


def test_coboundary_circle_rank(s1):
    from supercoh.exact_linalg import smith_decomposition

    m = coboundary_matrix(s1, 0)
    assert (m.rows, m.cols) == (3, 3)
    assert smith_decomposition(m).rank() == 2


def test_coboundary_out_of_range(s1):
    with pytest.raises(ValueError):
        coboundary_matrix(s1, 5)


def test_delta_squared_zero(all_surfaces):
    for x in all_surfaces.values():
        for q in range(x.dim - 1):
            a = coboundary_matrix(x, q)
            b = coboundary_matrix(x, q + 1)
            assert b.mul(a).is_zero()
            for n in MODULI[1:]:
                an = coboundary_matrix(x, q, n)
                bn = coboundary_matrix(x, q + 1, n)
                assert all(v % n == 0 for v in bn.mul(an).entries)


KNOWN_COHOMOLOGY = {
    # (complex, degree, modulus) -> presentation
    ("point", 0, 0): G(1, ()),
    ("s1", 1, 0): G(1, ()),
    ("s1", 1, 2): G(0, (2,)),
    ("s2", 2, 0): G(1, ()),
    ("s2", 1, 0): G.trivial(),
    ("t2", 1, 0): G(2, ()),
    ("t2", 2, 0): G(1, ()),
    ("t2", 1, 2): G(0, (2, 2)),
    ("rp2", 1, 0): G.trivial(),
    ("rp2", 2, 0): G(0, (2,)),
    ("rp2", 1, 2): G(0, (2,)),
    ("rp2", 2, 2): G(0, (2,)),
    ("rp2", 0, 8): G(0, (8,)),
    ("klein", 1, 0): G(1, ()),
    ("klein", 2, 0): G(0, (2,)),
    ("klein", 1, 2): G(0, (2, 2)),
    ("klein", 2, 2): G(0, (2,)),
    ("s1xs1", 1, 2): G(0, (2, 2)),
    ("s1xs1", 2, 0): G(1, ()),
    # universal coefficients: H^1(RP2;Z/4) = Tor(Z/2, Z/4) = Z/2 and
    # H^2(RP2;Z/4) = Z/2 (x) Z/4 = Z/2
    ("rp2", 1, 4): G(0, (2,)),
    ("rp2", 2, 4): G(0, (2,)),
}


@pytest.mark.parametrize("key", sorted(KNOWN_COHOMOLOGY, key=str))
def test_known_cohomology(key):
    name, q, n = key
    x = corpus.complex_by_name(name)
    pres, basis = cohomology(x, q, n)
    assert pres == KNOWN_COHOMOLOGY[key]
    # representatives are cocycles matching the presentation size
    total_gens = pres.free_rank + len(pres.invariant_factors)
    assert len(basis) == total_gens
    for cls in basis:
        assert cls.cochain.is_cocycle()


def test_degree_beyond_dimension(rp2):
    pres, basis = cohomology(rp2, 5, 0)
    assert pres.is_trivial() and basis == []


def test_sparse_path_agrees_with_dense(all_surfaces):
    from supercoh.simplicial import _cohomology_integral, _cohomology_integral_sparse

    for x in all_surfaces.values():
        for q in range(1, x.dim + 1):
            for n in (0, 4, 6, 8):
                dense = _cohomology_integral(x, q, n)
                sparse = _cohomology_integral_sparse(x, q, n)
                assert dense[0] == sparse[0]
                assert dense[2] == sparse[2]
                zero = Cochain.zero(x, q, n)
                for cls, order in zip(sparse[1], sparse[2]):
                    assert cls.cochain.is_cocycle()
                    assert not is_cohomologous(cls.cochain, zero)
                    if order:
                        assert is_cohomologous(cls.cochain.scale(order), zero)


def moore3():
    """Mapping cone of the 3-fold circle cover: H^* = (Z, 0, Z/3)."""
    tris = []
    for i in range(9):
        tris.append(tuple(sorted((i, (i + 1) % 9, 12))))
    for i in range(9):
        j = (i + 1) % 9
        fi, fj = 9 + (i % 3), 9 + (j % 3)
        tris.append(tuple(sorted((i, j, fj))))
        tris.append(tuple(sorted((i, fi, fj))))
    return SimplicialComplex(13, tris)


def test_moore_space_torsion():
    m = moore3()
    assert cohomology(m, 1, 0)[0].is_trivial()
    assert cohomology(m, 2, 0)[0] == G(0, (3,))
    assert cohomology(m, 1, 3)[0] == G(0, (3,))


def test_coprime_torsion_merges_to_invariant_factors(rp2):
    # RP2 disjoint union Moore(Z/3): H^2 = Z/2 + Z/3, i.e. invariant factor 6;
    # exercises the CRT generator merge in both integral paths
    from supercoh.simplicial import _cohomology_integral, _cohomology_integral_sparse

    shift = rp2.vertex_count
    mixed = SimplicialComplex(
        shift + 13,
        list(rp2.maximal_simplices)
        + [tuple(v + shift for v in s) for s in moore3().maximal_simplices],
    )
    for path in (_cohomology_integral, _cohomology_integral_sparse):
        pres, basis, orders = path(mixed, 2, 0)
        assert pres == G(0, (6,)), path.__name__
        assert orders == [6]
        gen = basis[0].cochain
        zero = Cochain.zero(mixed, 2, 0)
        assert not is_cohomologous(gen, zero)
        for k in (2, 3):
            assert not is_cohomologous(gen.scale(k), zero)
        assert is_cohomologous(gen.scale(6), zero)


def test_class_coordinates_roundtrip():
    import random

    rng = random.Random(6)
    for name, q, n in (("t2", 1, 2), ("klein", 1, 0), ("rp2", 2, 0)):
        x = corpus.complex_by_name(name)
        pres, basis = cohomology(x, q, n)
        orders = generator_orders(x, q, n)
        if not basis:
            continue
        for _ in range(10):
            coeffs = [
                rng.randrange(o) if o else rng.randint(-3, 3) for o in orders
            ]
            combo = Cochain.zero(x, q, n)
            for c, cls in zip(coeffs, basis):
                combo = combo + cls.cochain.scale(c)
            if q >= 1:
                noise = Cochain(
                    x, q - 1, n,
                    tuple(rng.randint(0, 4) for _ in range(x.simplex_count(q - 1))),
                )
                combo = combo + noise.coboundary()
            assert class_coordinates(combo, basis, orders) == coeffs


def test_product_integral_cohomology_kunneth(rp2xrp2):
    # Kunneth for RP2 x RP2 over Z: H^2 = (Z/2)^2, H^3 = Z/2 (Tor), H^4 = Z/2
    assert cohomology(rp2xrp2, 2, 0)[0] == G(0, (2, 2))
    assert cohomology(rp2xrp2, 3, 0)[0] == G(0, (2,))
    assert cohomology(rp2xrp2, 4, 0)[0] == G(0, (2,))
    assert cohomology(rp2xrp2, 1, 0)[0].is_trivial()


def test_cone_acyclic(rp2, t2):
    for base in (rp2, t2):
        c = corpus.cone(base)
        for q in range(1, c.dim + 1):
            for n in (0, 2, 3):
                pres, _ = cohomology(c, q, n)
                assert pres.is_trivial(), (q, n)


def test_euler_characteristic_vs_betti(all_surfaces):
    for x in all_surfaces.values():
        chi = x.euler_characteristic()
        betti = sum(
            (-1) ** q * cohomology(x, q, 0)[0].free_rank for q in range(x.dim + 1)
        )
        assert chi == betti


def test_is_cohomologous_basics(rp2):
    _, basis = cohomology(rp2, 1, 2)
    w = basis[0].cochain
    zero = Cochain.zero(rp2, 1, 2)
    assert is_cohomologous(w, w)
    assert not is_cohomologous(w, zero)
    # a coboundary is cohomologous to zero
    z = Cochain(rp2, 0, 2, tuple(i % 2 for i in range(6)))
    assert is_cohomologous(z.coboundary(), zero)


def test_is_cohomologous_context_mismatch(rp2, t2):
    a = Cochain.zero(rp2, 1, 2)
    b = Cochain.zero(t2, 1, 2)
    with pytest.raises(ValueError):
        is_cohomologous(a, b)


def test_is_cohomologous_requires_cocycles(rp2):
    values = [0] * rp2.simplex_count(1)
    values[0] = 1
    noncocycle = Cochain(rp2, 1, 0, tuple(values))
    if not noncocycle.is_cocycle():
        with pytest.raises(ValueError):
            is_cohomologous(noncocycle, Cochain.zero(rp2, 1, 0))


def test_class_coordinates(t2):
    pres, basis = cohomology(t2, 1, 2)
    orders = generator_orders(t2, 1, 2)
    b1, b2 = basis
    x = b1.cochain + b2.cochain
    assert class_coordinates(x, basis, orders) == [1, 1]
    assert class_coordinates(b1.cochain, basis, orders) == [1, 0]


def test_cocycle_certificate(rp2):
    values = [0] * rp2.simplex_count(1)
    values[0] = 1
    c = Cochain(rp2, 1, 0, tuple(values))
    if not c.is_cocycle():
        with pytest.raises(ValueError):
            CohomologyClass(c)


class TestSimplicialMap:
    def test_projection_pullback_is_chain_map(self):
        prod, p1, p2 = corpus.product_with_projections("rp2", "s1")
        rp2 = corpus.complex_by_name("rp2")
        import random

        rng = random.Random(1)
        for proj, target in ((p1, rp2), (p2, corpus.complex_by_name("s1"))):
            for q in range(target.dim):
                vals = tuple(rng.randint(0, 5) for _ in range(target.simplex_count(q)))
                c = Cochain(target, q, 0, vals)
                assert (
                    proj.pullback(c.coboundary()).values
                    == proj.pullback(c).coboundary().values
                )

    def test_invalid_vertex_map(self, s1):
        with pytest.raises(ValueError):
            SimplicialMap(s1, s1, [1, 0, 2])  # not monotone on the (0,1) edge
        with pytest.raises(ValueError):
            SimplicialMap(s1, s1, [0, 1])  # wrong length


def test_constant_map_is_legal(rp2, point):
    m = SimplicialMap(rp2, point, [0] * 6)
    _, basis = cohomology(point, 0, 2)
    pulled = m.pullback(basis[0].cochain)
    assert pulled.values == (1,) * 6


def test_json_roundtrip(rp2):
    data = rp2.to_json_dict()
    again = SimplicialComplex.from_json_dict(data)
    assert again == rp2


@st.composite
def random_complexes(draw):
    """Small random complexes, deliberately non-pure and possibly disconnected."""
    n = draw(st.integers(1, 7))
    n_simplices = draw(st.integers(0, 6))
    maximal = []
    for _ in range(n_simplices):
        size = draw(st.integers(1, min(4, n)))
        verts = draw(
            st.lists(st.integers(0, n - 1), min_size=size, max_size=size, unique=True)
        )
        maximal.append(tuple(sorted(verts)))
    return SimplicialComplex(n, maximal)


class TestRandomComplexes:
    @given(random_complexes())
    @settings(max_examples=60, deadline=None)
    def test_delta_squared_and_euler(self, x):
        for q in range(max(x.dim - 1, 0)):
            a = coboundary_matrix(x, q)
            b = coboundary_matrix(x, q + 1)
            assert b.mul(a).is_zero()
        # Euler characteristic agrees with the alternating Betti sum
        chi = x.euler_characteristic()
        betti = sum(
            (-1) ** q * cohomology(x, q, 0)[0].free_rank for q in range(x.dim + 1)
        )
        assert chi == betti

    @given(random_complexes())
    @settings(max_examples=40, deadline=None)
    def test_h0_counts_components(self, x):
        pres, basis = cohomology(x, 0, 0)
        assert pres == G(len(x.components()), ())
        for cls in basis:
            assert cls.cochain.is_cocycle()

    @given(random_complexes())
    @settings(max_examples=30, deadline=None)
    def test_cone_kills_cohomology(self, x):
        c = corpus.cone(x)
        for q in range(1, c.dim + 1):
            assert cohomology(c, q, 0)[0].is_trivial()
            assert cohomology(c, q, 2)[0].is_trivial()

    @given(random_complexes(), st.sampled_from([2, 3, 4, 8]))
    @settings(max_examples=40, deadline=None)
    def test_mod_n_basis_is_sound(self, x, n):
        for q in range(x.dim + 1):
            pres, basis = cohomology(x, q, n)
            orders = generator_orders(x, q, n)
            zero = Cochain.zero(x, q, n)
            for cls, order in zip(basis, orders):
                assert cls.cochain.is_cocycle()
                assert not is_cohomologous(cls.cochain, zero)
                assert order > 0
                assert is_cohomologous(cls.cochain.scale(order), zero)
