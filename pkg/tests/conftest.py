import itertools

import pytest

from geodex.cli import census as census_mod


@pytest.fixture(scope="session")
def census4():
    return census_mod.run_census(4)


@pytest.fixture(scope="session")
def census8():
    return census_mod.run_census(8)


@pytest.fixture(scope="session")
def census9():
    return census_mod.run_census(9)


@pytest.fixture(scope="session")
def census25():
    return census_mod.run_census(25)


@pytest.fixture(scope="session")
def census27():
    return census_mod.run_census(27)


def brute_force_closure(gens):
    """All products of the given permutation tuples (the whole group)."""
    seen = set(gens) or {tuple()}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(seen):
                for c in (tuple(b[i] for i in a), tuple(a[i] for i in b)):
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
        frontier = nxt
    return seen


def brute_force_automorphisms(graph):
    """Every adjacency-preserving permutation, by filtering all n!."""
    out = []
    for perm in itertools.permutations(range(graph.n)):
        ok = True
        for u in range(graph.n):
            for v in graph.neighbors(u):
                if not graph.has_edge(perm[u], perm[v]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(perm)
    return out
