import random

import pytest

from geodex import analyze, autsearch, families, grp
from geodex.graph import from_edges
from geodex.perm import Perm, orbit_tuples, schreier_sims


def closure_flags(g):
    """Independent flag computation: close the full tuple sets directly."""
    gens = autsearch.automorphism_generators(g)

    def single_orbit(tuples):
        if not tuples:
            return True
        return len(orbit_tuples(gens, tuples[0])) == len(set(tuples))

    return {
        "arc": single_orbit(g.enumerate_arcs()),
        "two_arc": single_orbit(g.enumerate_2arcs()),
        "geo": single_orbit(g.enumerate_2geodesics()),
    }


def test_k9_report():
    rep = analyze.transitivity_report(families.complete(9))
    assert rep.two_arc_transitive
    assert rep.two_geodesics == 0
    assert rep.two_geodesic_transitive  # vacuous
    assert rep.primitive
    assert rep.aut_order == 362880


def test_family_b_p3_report():
    rep = analyze.transitivity_report(families.ep3_family_B(3))
    assert rep.two_geodesic_transitive
    assert rep.distance_transitive
    assert not rep.two_arc_transitive
    assert rep.girth == 3
    assert rep.diameter == 3
    assert rep.aut_order == 1296
    assert not rep.primitive
    assert rep.vertex_transitive and rep.arc_transitive


def test_family_a_p5_report():
    rep = analyze.transitivity_report(families.ep3_family_A(5))
    assert rep.two_geodesic_transitive
    assert not rep.two_arc_transitive
    assert not rep.distance_transitive
    assert rep.aut_order == 4000


def test_star_is_2geodesic_transitive_but_not_vertex_transitive():
    star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    rep = analyze.transitivity_report(star)
    assert not rep.vertex_transitive
    assert rep.two_geodesic_transitive
    assert not rep.arc_transitive
    assert not rep.distance_transitive


def test_disconnected_rejected():
    g = from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        analyze.transitivity_report(g)


def test_flags_match_direct_closure_random():
    random.seed(19)
    done = 0
    while done < 60:
        n = random.randint(2, 9)
        g = from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                           if random.random() < 0.5])
        if not g.is_connected():
            continue
        rep = analyze.transitivity_report(g)
        fc = closure_flags(g)
        assert rep.arc_transitive == fc["arc"]
        assert rep.two_arc_transitive == fc["two_arc"]
        assert rep.two_geodesic_transitive == fc["geo"]
        done += 1


@pytest.mark.parametrize("spec", ["cycle:9", "complete:8", "kmb:3,3",
                                  "hamming:2,3", "kbb:4", "kbbm:4",
                                  "hamming:3,2", "kmb:4,2", "ep3A:3"])
def test_flags_match_direct_closure_named(spec):
    g = families.from_spec(spec)
    rep = analyze.transitivity_report(g)
    fc = closure_flags(g)
    assert rep.arc_transitive == fc["arc"]
    assert rep.two_arc_transitive == fc["two_arc"]
    assert rep.two_geodesic_transitive == fc["geo"]


def test_flag_monotonicity_named_corpus():
    specs = ["cycle:8", "cycle:9", "cycle:27", "complete:8", "complete:9",
             "complete:27", "kbb:4", "kbbm:4", "kmb:3,3", "kmb:4,2", "kmb:9,3",
             "kmb:3,9", "hamming:2,3", "hamming:3,2", "hamming:3,3",
             "hamming:2,5", "hamming2c:5", "kmb:5,5", "ep3A:3", "ep3B:3",
             "schlafli", "schlafli_complement"]
    for spec in specs:
        rep = analyze.transitivity_report(families.from_spec(spec))
        if rep.two_arc_transitive:
            assert rep.two_geodesic_transitive, spec
        if rep.distance_transitive:
            assert rep.arc_transitive, spec
        if rep.arc_transitive:
            assert rep.vertex_transitive, spec


def test_supplied_generators_give_weaker_or_equal_flags():
    E = grp.extraspecial_p3(3)
    g = families.ep3_family_B(3)
    regular_only = grp.right_regular_generators(E)
    weak = analyze.transitivity_report(g, supplied_generators=regular_only)
    full = analyze.transitivity_report(g)
    assert weak.generators_source == "supplied"
    assert weak.vertex_transitive
    for key, value in weak.flags().items():
        if value:
            assert full.flags()[key], key
    # the regular group alone is not transitive on arcs
    assert not weak.arc_transitive


def test_supplied_normalizer_matches_full_for_normal_cayley():
    # for a normal Cayley graph, R(G) with Aut(G,S) generates the full group
    E = grp.extraspecial_p3(3)
    S = grp.ep3_family_b_set(E)
    gens = grp.right_regular_generators(E) + \
        [al.as_perm() for al in grp.aut_stab_set(E, S)]
    g = families.cayley(E, S)
    via_subgroup = analyze.transitivity_report(g, supplied_generators=gens)
    via_search = analyze.transitivity_report(g)
    assert via_subgroup.flags() == via_search.flags()
    assert via_subgroup.aut_order == via_search.aut_order == 1296


def test_flags_only_mode():
    g = families.complete(9)
    gens = [Perm([1, 0] + list(range(2, 9))), Perm([(i + 1) % 9 for i in range(9)])]
    rep = analyze.transitivity_report(g, supplied_generators=gens, flags_only=True)
    assert rep.aut_order is None
    assert rep.two_arc_transitive and rep.vertex_transitive and rep.primitive
    full = analyze.transitivity_report(g)
    assert rep.flags() == full.flags()


def test_two_point_stabilizer_regular_on_second_sphere():
    # the arc stabilizer acts regularly on the p(p-1) distance-2 neighbours
    for p in (3, 5):
        g = families.ep3_family_B(p)
        gens = autsearch.automorphism_generators(g)
        a_vertex = min(g.neighbors(0))
        chain = schreier_sims(gens, degree=g.n, base_prefix=(0, a_vertex))
        two_point = chain.level_generators(2)
        stab_order = chain.order // (chain.transversal_sizes[0] * chain.transversal_sizes[1])
        dist = g.distances_from(0)
        targets = [v for v in g.neighbors(a_vertex) if dist[v] == 2]
        assert len(targets) == p * (p - 1)
        assert stab_order == p * (p - 1)
        from geodex.perm import orbit
        assert orbit(two_point, targets[0]) == set(targets)


# ---------------------------------------------------------------------------
# normal Cayley

def test_normal_cayley_families():
    E3 = grp.extraspecial_p3(3)
    assert analyze.is_normal_cayley(E3, grp.ep3_family_b_set(E3))
    assert analyze.is_normal_cayley(E3, grp.ep3_family_a_set(E3))


def test_normal_cayley_h2p():
    # p = 3 is the normal exception; p = 5 is not normal
    Z32 = grp.elementary_abelian(3, 2)
    assert analyze.is_normal_cayley(Z32, grp.cyclic_closure(Z32, Z32.generators))
    Z52 = grp.elementary_abelian(5, 2)
    assert not analyze.is_normal_cayley(Z52, grp.cyclic_closure(Z52, Z52.generators))


def test_normal_cayley_requires_connected():
    Z9 = grp.cyclic(9)
    with pytest.raises(ValueError):
        analyze.is_normal_cayley(Z9, {3, 6})


# ---------------------------------------------------------------------------
# classification

def test_classify_named_examples():
    assert analyze.classify_named(families.schlafli_complement()).tag == "schlafli_complement"
    assert analyze.classify_named(families.schlafli()).tag == "schlafli"
    E = grp.extraspecial_p3(3)
    g274 = families.cayley(E, grp.ep3_family_a_set(E))
    assert analyze.classify_named(g274).tag == "ep3A:3"
    assert analyze.classify_named(families.hamming(3, 3)).tag == "hamming:3,3"


def test_classify_under_relabeling():
    random.seed(71)
    g = families.ep3_family_B(3).relabel(random.sample(range(27), 27))
    got = analyze.classify_named(g)
    assert got.tag == "ep3B:3" and got.method == "canonical-key"


def test_classify_parameter_match_at_125():
    got = analyze.classify_named(families.ep3_family_B(5))
    assert got.tag == "ep3B:5" and got.method == "parameter-match"
    got = analyze.classify_named(families.hamming(3, 5))
    assert got.tag == "hamming:3,5"


def test_classify_unrecognized():
    random.seed(9)
    while True:
        edges = [(i, j) for i in range(27) for j in range(i + 1, 27)
                 if random.random() < 0.15]
        g = from_edges(27, edges)
        if g.is_connected():
            break
    assert analyze.classify_named(g).tag == "unrecognized"


def test_classify_rejects_bad_order():
    with pytest.raises(ValueError):
        analyze.classify_named(families.cycle(6))
    with pytest.raises(ValueError):
        analyze.classify_named(from_edges(16, [(i, (i + 1) % 16) for i in range(16)]))
