import random

import pytest
from hypothesis import given, settings, strategies as st

from geodex.perm import (Perm, compose, inverse, orbit, orbit_tuples,
                         schreier_sims, contains, minimal_blocks, is_primitive,
                         tuple_orbit_size)
from geodex import grp, families, autsearch

from conftest import brute_force_closure


def perms(n):
    return st.permutations(range(n)).map(Perm)


# ---------------------------------------------------------------------------
# compose / inverse

def test_compose_identity():
    p = Perm([2, 0, 1])
    assert compose(Perm.identity(3), p) == p
    assert compose(p, Perm.identity(3)) == p


def test_compose_hand_example():
    # x -> p -> q, evaluated by hand
    assert compose(Perm([1, 2, 0]), Perm([0, 2, 1])).images == (2, 1, 0)


def test_compose_left_to_right():
    p, q = Perm([1, 0, 2]), Perm([0, 2, 1])
    assert compose(p, q)(0) == q(p(0))


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Perm([0, 1]), Perm([0, 1, 2]))


def test_inverse_examples():
    assert inverse(Perm.identity(4)) == Perm.identity(4)
    assert inverse(Perm([1, 2, 0])).images == (2, 0, 1)
    invol = Perm([1, 0, 2])
    assert inverse(invol) == invol


def test_perm_validation():
    with pytest.raises(ValueError):
        Perm([0, 0, 1])
    with pytest.raises(ValueError):
        Perm([0, 1, 3])


@settings(max_examples=60)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_compose_associative_and_inverse_laws(pqr):
    p, q, r = pqr
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, inverse(p)).is_identity()
    assert compose(inverse(p), p).is_identity()


# ---------------------------------------------------------------------------
# orbits

def test_orbit_identity_only():
    assert orbit([Perm.identity(5)], 0) == {0}


def test_orbit_full_cycle():
    c = Perm([(i + 1) % 7 for i in range(7)])
    for x in range(7):
        assert orbit([c], x) == set(range(7))


def test_orbit_out_of_range():
    with pytest.raises(ValueError):
        orbit([Perm.identity(3)], 5)


def test_orbit_family_b_distance_two_sphere():
    # orbit of ac under the connection-set stabilizer has size (p^2-1)(p-1)
    E = grp.extraspecial_p3(3)
    S = grp.ep3_family_b_set(E)
    stab = [al.as_perm() for al in grp.aut_stab_set(E, S)]
    ac = E.mul[E.generators[0]][grp.ep3_index(E, 0, 0, 1)]
    assert len(orbit(stab, ac)) == (9 - 1) * (3 - 1)  # 16


def test_orbits_partition_domain():
    random.seed(4)
    for _ in range(25):
        n = random.randint(2, 10)
        gens = [Perm(random.sample(range(n), n)) for _ in range(random.randint(1, 3))]
        seen = []
        for x in range(n):
            seen.append(frozenset(orbit(gens, x)))
        assert set().union(*seen) == set(range(n))
        for a in seen:
            for b in seen:
                assert a == b or not (a & b)


def test_orbit_tuples_identity():
    assert orbit_tuples([Perm.identity(4)], (1, 3)) == {(1, 3)}


def test_orbit_tuples_symmetric_group_triples():
    g1, g2 = Perm([1, 0, 2, 3]), Perm([1, 2, 3, 0])
    triples = orbit_tuples([g1, g2], (0, 1, 2))
    assert len(triples) == 4 * 3 * 2
    assert all(len(set(t)) == 3 for t in triples)


def test_orbit_tuples_c5_two_geodesics():
    c5 = families.cycle(5)
    gens = autsearch.automorphism_generators(c5)
    geos = c5.enumerate_2geodesics()
    assert len(geos) == 10
    assert orbit_tuples(gens, geos[0]) == set(geos)


def test_tuple_orbit_size_matches_closure():
    random.seed(8)
    for _ in range(20):
        n = random.randint(3, 7)
        gens = [Perm(random.sample(range(n), n)) for _ in range(2)]
        t = tuple(random.sample(range(n), 3))
        assert tuple_orbit_size(gens, t) == len(orbit_tuples(gens, t))


# ---------------------------------------------------------------------------
# schreier-sims

def test_schreier_sims_empty():
    G = schreier_sims([], degree=5)
    assert G.order == 1
    assert G.contains(Perm.identity(5))


def test_schreier_sims_s4():
    G = schreier_sims([Perm([1, 0, 2, 3]), Perm([1, 2, 3, 0])])
    assert G.order == 24


def test_schreier_sims_regular_e27():
    E = grp.extraspecial_p3(3)
    G = schreier_sims(grp.right_regular_generators(E))
    assert G.order == 27


def test_schreier_sims_vs_brute_closure():
    random.seed(17)
    for _ in range(30):
        n = random.randint(2, 6)
        gens = [Perm(random.sample(range(n), n)) for _ in range(random.randint(1, 3))]
        expected = len(brute_force_closure([g.images for g in gens]))
        assert schreier_sims(gens).order == expected


def test_chain_recompute_and_membership_invariants():
    random.seed(23)
    gens = [Perm([1, 0, 2, 3, 4]), Perm([1, 2, 3, 4, 0])]
    G = schreier_sims(gens)
    assert G.order == 120
    for g in gens:
        assert G.contains(g)
    shuffled = list(gens[::-1])
    assert schreier_sims(shuffled).order == G.order
    product = 1
    for size in G.transversal_sizes:
        product *= size
    assert product == G.order


def test_contains_parity_oracle():
    a4 = schreier_sims([Perm([1, 2, 0, 3]), Perm([0, 2, 3, 1])])
    assert a4.order == 12
    assert contains(a4, Perm([1, 2, 0, 3]))
    assert contains(a4, Perm.identity(4))
    assert not contains(a4, Perm([1, 0, 2, 3]))  # odd permutation


def test_contains_degree_mismatch():
    G = schreier_sims([Perm([1, 0])])
    with pytest.raises(ValueError):
        contains(G, Perm([1, 0, 2]))


def test_orbit_stabilizer_identity():
    gens = [Perm([1, 0, 2, 3, 4]), Perm([1, 2, 3, 4, 0])]
    G = schreier_sims(gens, base_prefix=(0,))
    stab = schreier_sims(G.level_generators(1), degree=5)
    assert len(orbit(gens, 0)) * stab.order == G.order


def test_level_generators_fix_base_prefix():
    gens = [Perm([1, 0, 2, 3, 4]), Perm([1, 2, 3, 4, 0])]
    G = schreier_sims(gens, base_prefix=(0, 1))
    for g in G.level_generators(1):
        assert g(0) == 0
    for g in G.level_generators(2):
        assert g(0) == 0 and g(1) == 1


def test_degree_cap():
    with pytest.raises(ValueError):
        schreier_sims([], degree=2048)


# ---------------------------------------------------------------------------
# blocks and primitivity

def test_minimal_blocks_symmetric_group():
    G = schreier_sims([Perm([1, 0, 2, 3]), Perm([1, 2, 3, 0])])
    assert minimal_blocks(G, 0, 2) == [[0, 1, 2, 3]]


def test_minimal_blocks_z9_cosets():
    R1 = Perm([(i + 1) % 9 for i in range(9)])
    Z9 = schreier_sims([R1])
    assert minimal_blocks(Z9, 0, 3) == [[0, 3, 6], [1, 4, 7], [2, 5, 8]]


def test_minimal_blocks_k33_parts():
    k33 = families.complete_multipartite(3, 3)
    G = schreier_sims(autsearch.automorphism_generators(k33))
    blocks = minimal_blocks(G, 0, 1)  # vertices 0,1 share a part
    assert blocks == [[0, 1, 2], [3, 4, 5], [6, 7, 8]]


def test_minimal_blocks_requires_transitive():
    G = schreier_sims([Perm([1, 0, 2])])
    with pytest.raises(ValueError):
        minimal_blocks(G, 0, 1)


def test_is_primitive_examples():
    h23 = families.hamming(2, 3)
    assert is_primitive(schreier_sims(autsearch.automorphism_generators(h23)))
    k33 = families.complete_multipartite(3, 3)
    assert not is_primitive(schreier_sims(autsearch.automorphism_generators(k33)))
    gA = families.ep3_family_A(3)
    assert not is_primitive(schreier_sims(autsearch.automorphism_generators(gA)))


def test_primitive_implies_trivial_blocks_everywhere():
    G = schreier_sims([Perm([1, 0, 2, 3, 4]), Perm([1, 2, 3, 4, 0])])
    assert is_primitive(G)
    for y in range(1, 5):
        assert minimal_blocks(G, 0, y) == [[0, 1, 2, 3, 4]]
