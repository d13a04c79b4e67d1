import math
import random

import pytest

from geodex import autsearch, families, grp
from geodex.graph import distance_partition
from geodex.perm import schreier_sims


def aut_order(g):
    return schreier_sims(autsearch.automorphism_generators(g), degree=g.n).order


def test_parameter_validation():
    for bad in (lambda: families.cycle(2),
                lambda: families.complete_multipartite(2, 2),
                lambda: families.complete_multipartite(3, 1),
                lambda: families.hamming(1, 3),
                lambda: families.hamming2_complement(2),
                lambda: families.ep3_family_A(2),
                lambda: families.ep3_family_B(4)):
        with pytest.raises(ValueError):
            bad()


def test_multipartite_shapes():
    k33 = families.complete_multipartite(3, 3)
    assert k33.n == 9 and k33.valency_if_regular() == 6
    k42 = families.complete_multipartite(4, 2)
    assert k42.n == 8 and k42.valency_if_regular() == 6


def test_cycle4_has_2geodesics():
    c4 = families.cycle(4)
    assert c4.diameter() == 2 and c4.count_2geodesics() > 0


def test_hamming_shapes():
    h23 = families.hamming(2, 3)
    assert h23.n == 9 and h23.valency_if_regular() == 4
    h32 = families.hamming(3, 2)
    assert h32.n == 8 and h32.girth() == 4
    parts = distance_partition(h32, 0).sizes
    assert parts == (1, 3, 3, 1)
    assert families.hamming2_complement(5).valency_if_regular() == 16


def test_hamming_is_cayley_on_axes():
    for d, n in ((2, 3), (3, 3), (2, 5)):
        G = grp.elementary_abelian(n, d)
        S = grp.cyclic_closure(G, G.generators)
        assert families.cayley(G, S) == families.hamming(d, n)


def test_hamming_complement_pair_bit_exact():
    for n in (3, 5):
        assert families.hamming2_complement(n) == families.hamming(2, n).complement()
        assert families.hamming2_complement(n).complement() == families.hamming(2, n)


def test_cayley_complete_and_cycle():
    Z9 = grp.cyclic(9)
    assert families.cayley(Z9, range(1, 9)) == families.complete(9)
    assert families.cayley(Z9, {1, 8}) == families.cycle(9)


def test_cayley_validates_connection_set():
    Z9 = grp.cyclic(9)
    with pytest.raises(ValueError):
        families.cayley(Z9, {0, 1, 8})
    with pytest.raises(ValueError):
        families.cayley(Z9, {1})


def test_cayley_vertex_transitive_witness():
    E = grp.extraspecial_p3(3)
    graph = families.cayley(E, grp.ep3_family_b_set(E))
    for r in grp.right_regular(E):
        for u in range(27):
            for v in graph.neighbors(u):
                assert graph.has_edge(r(u), r(v))


@pytest.mark.parametrize("p", [3, 5])
def test_family_a(p):
    g = families.ep3_family_A(p)
    assert g.n == p ** 3
    assert g.valency_if_regular() == 2 * (p - 1)
    assert g.is_connected()


@pytest.mark.parametrize("p", [3, 5])
def test_family_b(p):
    g = families.ep3_family_B(p)
    assert g.valency_if_regular() == p * p - 1
    expected = (1, p * p - 1, (p * p - 1) * (p - 1), p - 1)
    for v in range(0, g.n, max(1, g.n // 7)):
        assert distance_partition(g, v).sizes == expected


def test_schlafli_strongly_regular():
    s = families.schlafli()
    assert s.n == 27 and s.valency_if_regular() == 16 and s.girth() == 3
    for u in range(27):
        for v in range(u + 1, 27):
            common = s.common_neighbors(u, v)
            assert common == (10 if s.has_edge(u, v) else 8)


def test_schlafli_complement_parameters():
    c = families.schlafli_complement()
    assert c.valency_if_regular() == 10
    for u in range(27):
        for v in range(u + 1, 27):
            common = c.common_neighbors(u, v)
            assert common == (1 if c.has_edge(u, v) else 5)
    assert families.schlafli() == c.complement()


def test_schlafli_aut_order():
    assert aut_order(families.schlafli()) == 51840


def test_from_spec_round_trip():
    specs = ["cycle:9", "complete:27", "kbb:4", "kbbm:5", "kmb:9,3",
             "hamming:3,5", "hamming2c:5", "ep3A:3", "ep3B:5", "schlafli",
             "schlafli_complement"]
    for spec in specs:
        g = families.from_spec(spec)
        assert g.n >= 3


def test_from_spec_errors():
    for bad in ("nope:3", "cycle", "cycle:x", "kmb:3", "hamming:2,3,4", ""):
        with pytest.raises(ValueError):
            families.from_spec(bad)


def test_catalog_orders():
    tags27 = [tag for tag, _ in families.catalog_for_order(27)]
    assert tags27 == ["cycle:27", "complete:27", "hamming:3,3", "kmb:3,9",
                      "kmb:9,3", "ep3A:3", "ep3B:3", "schlafli",
                      "schlafli_complement"]
    tags9 = [tag for tag, _ in families.catalog_for_order(9)]
    assert tags9 == ["cycle:9", "complete:9", "hamming:2,3", "hamming2c:3",
                     "kmb:3,3"]
    for tag, g in families.catalog_for_order(8):
        assert g.n == 8
