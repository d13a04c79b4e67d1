"""Transitivity predicates and classification against the named catalog.

Flags are decided through the stabilizer chain rather than by closing the
full tuple sets: for a vertex-transitive graph, transitivity on arcs,
2-arcs, 2-geodesics and distance-i pairs reduces to orbit computations of
the one-point stabilizer on neighbour pairs and points.  Two structural
facts short-circuit the 2-arc flag:

- a graph of girth 3 that has any 2-geodesic cannot be 2-arc transitive
  (triangle 2-arcs and 2-geodesics are disjoint invariant classes);
- with girth at least 4 every 2-arc is a 2-geodesic, so the flags agree.

A flag over an empty tuple set is True; this convention makes complete
graphs 2-geodesic transitive.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import autsearch, families, grp
from .graph import Graph, distance_partition
from .grp import FiniteGroup
from .perm import Perm, orbit, schreier_sims, is_primitive, tuple_orbit_size


@dataclass(frozen=True)
class TransitivityReport:
    n: int
    valency: int | None
    girth: int | None
    diameter: int
    distance_distribution: tuple[int, ...]
    arcs: int
    two_arcs: int
    two_geodesics: int
    aut_order: int | None
    vertex_transitive: bool
    arc_transitive: bool
    two_arc_transitive: bool
    two_geodesic_transitive: bool
    distance_transitive: bool
    primitive: bool
    generators_source: str = "autsearch"
    normal_cayley: bool | None = None

    def flags(self) -> dict[str, bool]:
        return {
            "vertex_transitive": self.vertex_transitive,
            "arc_transitive": self.arc_transitive,
            "two_arc_transitive": self.two_arc_transitive,
            "two_geodesic_transitive": self.two_geodesic_transitive,
            "distance_transitive": self.distance_transitive,
            "primitive": self.primitive,
        }


def _pair_orbit(stab_gens: list[Perm], seed: tuple[int, int]) -> set[tuple[int, int]]:
    raw = list({g.images for g in stab_gens})
    seen = {seed}
    queue = deque([seed])
    while queue:
        u, w = queue.popleft()
        for g in raw:
            img = (g[u], g[w])
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return seen


def _schreier_stabilizer_generators(gens: list[Perm], n: int, point: int) -> list[Perm]:
    """Generators of the stabilizer of a point, by Schreier's lemma.

    Avoids building a full stabilizer chain; the generator list may be
    large but generates the exact stabilizer of the group of ``gens``.
    """
    tables = [g.images for g in gens]
    transversal: dict[int, tuple[int, ...]] = {point: tuple(range(n))}
    order = [point]
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        t_x = transversal[x]
        for g in tables:
            y = g[x]
            if y not in transversal:
                transversal[y] = tuple(map(g.__getitem__, t_x))
                order.append(y)
    identity = tuple(range(n))
    out: set[tuple[int, ...]] = set()
    for x in order:
        t_x = transversal[x]
        for g in tables:
            t_y = transversal[g[x]]
            inv_t_y = [0] * n
            for i, v in enumerate(t_y):
                inv_t_y[v] = i
            s = tuple(inv_t_y[g[t_x[i]]] for i in range(n))
            if s != identity:
                out.add(s)
    return [Perm(s) for s in sorted(out)]


def _primitive_from_gens(gens: list[Perm], n: int) -> bool:
    from .perm import minimal_blocks
    group = _GensOnlyGroup(gens, n)
    for y in range(1, n):
        if len(minimal_blocks(group, 0, y)) != 1:
            return False
    return True


class _GensOnlyGroup:
    """Quacks like PermGroup for block computations (generators + degree)."""

    def __init__(self, generators: list[Perm], degree: int):
        self.generators = generators
        self.degree = degree


def _neighbor_pairs(graph: Graph, v: int, nonadjacent_only: bool) -> list[tuple[int, int]]:
    nbrs = graph.neighbors(v)
    out = []
    for u in nbrs:
        for w in nbrs:
            if u != w and not (nonadjacent_only and graph.has_edge(u, w)):
                out.append((u, w))
    return out


def transitivity_report(graph: Graph, supplied_generators: list[Perm] | None = None,
                        node_budget: int | None = None,
                        normal_cayley: bool | None = None,
                        flags_only: bool = False) -> TransitivityReport:
    """Compute the full report; flags refer to the automorphism group.

    When supplied_generators is given, flags are computed for the group they
    generate; true flags of the full group can only be stronger.  With
    flags_only the stabilizer chain (and hence aut_order) is skipped:
    the vertex stabilizer is generated by Schreier generators instead,
    which keeps huge groups such as S_125 tractable.
    """
    if not graph.is_connected():
        raise ValueError("transitivity_report requires a connected graph")
    n = graph.n
    if supplied_generators is None:
        gens = autsearch.automorphism_generators(graph, node_budget)
        source = "autsearch"
    else:
        gens = list(supplied_generators)
        for g in gens:
            if g.degree != n:
                raise ValueError("supplied generator degree mismatch")
            if not _preserves_adjacency(graph, g.images):
                raise ValueError("supplied generator is not an automorphism")
        source = "supplied"

    if flags_only:
        aut_order = None
        vt = n == 1 or len(orbit(gens, 0)) == n
        if not vt:
            raise ValueError("flags_only mode expects a vertex-transitive group")
        stab_gens = _schreier_stabilizer_generators(gens, n, 0)
        chain = None
    else:
        chain = schreier_sims(gens, degree=n, base_prefix=(0,))
        aut_order = chain.order
        sizes = chain.transversal_sizes
        vt = n == 1 or (bool(sizes) and sizes[0] == n)
        stab_gens = chain.level_generators(1) if vt else []

    dp = distance_partition(graph, 0)
    layers = dp.sizes
    girth = graph.girth()
    diameter = graph.diameter()
    n_arcs = graph.count_arcs()
    n_2arcs = graph.count_2arcs()
    n_2geo = graph.count_2geodesics()

    if vt:
        nbrs0 = set(graph.neighbors(0))

        if n_arcs == 0:
            arc_t = True
        else:
            seed = min(nbrs0)
            arc_t = orbit(stab_gens, seed) >= nbrs0 if stab_gens else len(nbrs0) == 1

        geo_pairs = _neighbor_pairs(graph, 0, nonadjacent_only=True)
        if not geo_pairs:
            geo_t = True
        else:
            geo_t = len(_pair_orbit(stab_gens, min(geo_pairs))) == len(geo_pairs)

        if n_2arcs == 0:
            two_arc_t = True
        elif girth == 3 and n_2geo > 0:
            two_arc_t = False
        elif girth == 3:
            all_pairs = _neighbor_pairs(graph, 0, nonadjacent_only=False)
            two_arc_t = len(_pair_orbit(stab_gens, min(all_pairs))) == len(all_pairs)
        else:
            two_arc_t = geo_t

        dist_t = vt
        for layer in dp.layers[1:]:
            if len(_point_orbit_within(stab_gens, layer[0])) != len(layer):
                dist_t = False
                break

        if n <= 1:
            primitive = True
        elif chain is not None:
            primitive = is_primitive(chain)
        else:
            primitive = _primitive_from_gens(gens, n)
    else:
        arc_t = n_arcs == 0
        dist_t = False
        primitive = False
        if n_2geo == 0:
            geo_t = True
        else:
            seed = _first_2geodesic(graph)
            geo_t = tuple_orbit_size(gens, seed, degree=n) == n_2geo
        if n_2arcs == 0:
            two_arc_t = True
        elif girth == 3 and n_2geo > 0:
            two_arc_t = False
        elif girth is not None and girth == 3:
            seed = _first_2arc(graph)
            two_arc_t = tuple_orbit_size(gens, seed, degree=n) == n_2arcs
        else:
            two_arc_t = geo_t

    return TransitivityReport(
        n=n, valency=graph.valency_if_regular(), girth=girth, diameter=diameter,
        distance_distribution=layers, arcs=n_arcs, two_arcs=n_2arcs,
        two_geodesics=n_2geo, aut_order=aut_order, vertex_transitive=vt,
        arc_transitive=arc_t, two_arc_transitive=two_arc_t,
        two_geodesic_transitive=geo_t, distance_transitive=dist_t,
        primitive=primitive, generators_source=source,
        normal_cayley=normal_cayley)


def _point_orbit_within(gens: list[Perm], x: int) -> set[int]:
    return orbit(gens, x) if gens else {x}


def _first_2arc(graph: Graph) -> tuple[int, int, int]:
    for u in range(graph.n):
        for v in graph.neighbors(u):
            for w in graph.neighbors(v):
                if w != u:
                    return (u, v, w)
    raise ValueError("graph has no 2-arcs")


def _first_2geodesic(graph: Graph) -> tuple[int, int, int]:
    for u in range(graph.n):
        ru = graph.rows[u]
        for v in graph.neighbors(u):
            rest = graph.rows[v] & ~ru & ~(1 << u)
            if rest:
                return (u, v, (rest & -rest).bit_length() - 1)
    raise ValueError("graph has no 2-geodesics")


def _preserves_adjacency(graph: Graph, images: tuple[int, ...]) -> bool:
    rows = graph.rows
    for u in range(graph.n):
        acc = 0
        r = rows[u]
        while r:
            low = r & -r
            acc |= 1 << images[low.bit_length() - 1]
            r ^= low
        if acc != rows[images[u]]:
            return False
    return True


# ---------------------------------------------------------------------------
# normal Cayley test

def is_normal_cayley(G: FiniteGroup, S, aut_generators: list[Perm] | None = None) -> bool:
    """Whether the right-regular copy of G is normal in Aut(Cay(G, S)).

    Decided by the order identity |Aut| = |G| * |Aut(G, S)| and cross-checked
    by conjugating regular generators into the regular copy.
    """
    S = grp.check_connection_set(G, S)
    graph = families.cayley(G, S)
    if not graph.is_connected():
        raise ValueError("normality test requires a connected Cayley graph")
    if aut_generators is None:
        aut_generators = autsearch.automorphism_generators(graph)
    chain = schreier_sims(aut_generators, degree=G.size)
    by_order = chain.order == G.size * len(grp.aut_stab_set(G, S))

    regular = grp.right_regular(G)
    regular_set = {p.images for p in regular}
    by_conjugation = True
    for a in aut_generators:
        a_inv = a.inverse()
        for g in G.generators:
            conj = a_inv * regular[g] * a
            if conj.images not in regular_set:
                by_conjugation = False
                break
        if not by_conjugation:
            break
    assert by_order == by_conjugation, "normality criteria disagree"
    return by_order


# ---------------------------------------------------------------------------
# catalog classification

@dataclass(frozen=True)
class Classification:
    tag: str
    method: str | None

    @property
    def recognized(self) -> bool:
        return self.tag != "unrecognized"


KEY_MATCH_MAX_ORDER = 64


def _prime_power_root(n: int) -> tuple[int, int]:
    for e in (1, 2, 3):
        p = round(n ** (1 / e))
        for pp in (p - 1, p, p + 1):
            if pp >= 2 and pp ** e == n and grp.is_prime(pp):
                return pp, e
    raise ValueError(f"{n} is not a prime power with exponent <= 3")


def classify_named(graph: Graph) -> Classification:
    """Match a graph against the named catalog of its order.

    Orders up to KEY_MATCH_MAX_ORDER are matched by canonical key; larger
    orders by structural parameters (valency, girth, diameter, distance
    distribution), which distinguish all catalog members at those orders.
    """
    _prime_power_root(graph.n)
    catalog = families.catalog_for_order(graph.n)
    if graph.n <= KEY_MATCH_MAX_ORDER:
        key = autsearch.canonical_key(graph)
        for tag, candidate in catalog:
            if autsearch.canonical_key(candidate) == key:
                return Classification(tag, "canonical-key")
        return Classification("unrecognized", None)
    profile = _parameter_profile(graph)
    matches = [tag for tag, candidate in catalog
               if _parameter_profile(candidate) == profile]
    if len(matches) == 1:
        return Classification(matches[0], "parameter-match")
    return Classification("unrecognized", None)


def _parameter_profile(graph: Graph):
    if not graph.is_connected():
        return ("disconnected", graph.n, graph.edge_count())
    return (graph.n, graph.valency_if_regular(), graph.girth(), graph.diameter(),
            distance_partition(graph, 0).sizes, graph.count_2geodesics())
