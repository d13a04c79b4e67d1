"""Exhaustive Cayley-graph census for small orders.

For every group of the requested order and every connected, identity-free,
inverse-closed connection set, the census analyzes Cay(G, S) and emits one
record per isomorphism class that is 2-geodesic transitive, split into
2-arc transitive vs not.  As in the classification this work verifies,
2-geodesic transitivity subsumes arc transitivity: the automorphism group
must be transitive on arcs and on 2-geodesics.  (The distinction is real:
Cay(Z_8, {1,3,4,5,7}) is transitive on its 64 2-geodesics but has two arc
orbits, and no such graph belongs to the classified lists.)

Raw enumeration over 2^13 subsets per group of order 27 is reduced by two
output-preserving steps:

- connection sets in one Aut(G)-orbit give isomorphic graphs, so only one
  representative per orbit is analyzed (orbits are computed on the
  inverse-pair atoms, with a small generating set of the induced atom
  permutation group);
- an emitted graph must have a constant common-neighbour count over
  adjacent pairs (arc transitivity) and over distance-2 pairs
  (transitivity on 2-geodesics), so violators are discarded before the
  automorphism search.

Both reductions can be switched off; tests compare the outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import analyze, autsearch, families, grp
from ..graph import Graph
from ..perm import Perm, schreier_sims

SUPPORTED_ORDERS = (4, 8, 9, 25, 27)


def groups_of_order(n: int) -> list[grp.FiniteGroup]:
    """All groups of a supported census order, in a fixed documented order."""
    if n == 4:
        return [grp.cyclic(4), grp.elementary_abelian(2, 2)]
    if n == 8:
        return [grp.cyclic(8),
                grp.direct_product(grp.cyclic(4), grp.cyclic(2)),
                grp.elementary_abelian(2, 3),
                grp.dihedral(8),
                grp.quaternion8()]
    if n == 9:
        return [grp.cyclic(9), grp.elementary_abelian(3, 2)]
    if n == 25:
        return [grp.cyclic(25), grp.elementary_abelian(5, 2)]
    if n == 27:
        return [grp.cyclic(27),
                grp.direct_product(grp.cyclic(9), grp.cyclic(3)),
                grp.elementary_abelian(3, 3),
                grp.modular_p3(3),
                grp.extraspecial_p3(3)]
    raise ValueError(f"unsupported census order {n}; supported: {SUPPORTED_ORDERS}")


def inverse_pair_atoms(G: grp.FiniteGroup) -> list[tuple[int, ...]]:
    """The sets {g, g^-1} over non-identity elements, ordered by least member."""
    atoms = []
    seen = set()
    for g in range(G.size):
        if g == G.identity or g in seen:
            continue
        inv = G.inv[g]
        atoms.append((g,) if inv == g else (g, inv))
        seen.update((g, inv))
    return atoms


def _atom_permutation(atoms, atom_of, alpha_images) -> tuple[int, ...]:
    return tuple(atom_of[alpha_images[atom[0]]] for atom in atoms)


def _small_generating_set(perms: list[Perm]) -> list[Perm]:
    """A few elements generating the same group as the whole list."""
    if not perms:
        return []
    degree = perms[0].degree
    target = schreier_sims(perms, degree=degree).order
    gens: list[Perm] = []
    order = 1
    for p in perms:
        if order == target:
            break
        trial = gens + [p]
        got = schreier_sims(trial, degree=degree).order
        if got > order:
            gens = trial
            order = got
    assert order == target
    return gens


def connection_set_orbit_reps(G: grp.FiniteGroup, reduce_by_aut: bool = True
                              ) -> list[tuple[int, frozenset[int]]]:
    """(atom mask, member set) pairs for every inverse-closed candidate,
    reduced to one representative per Aut(G)-orbit when requested."""
    atoms = inverse_pair_atoms(G)
    k = len(atoms)
    all_masks = range(1, 1 << k)

    def members(mask: int) -> frozenset[int]:
        out = []
        for i in range(k):
            if mask >> i & 1:
                out.extend(atoms[i])
        return frozenset(out)

    if not reduce_by_aut:
        return [(mask, members(mask)) for mask in all_masks]

    atom_of = {}
    for i, atom in enumerate(atoms):
        for g in atom:
            atom_of[g] = i
    atom_perms = {_atom_permutation(atoms, atom_of, alpha.images)
                  for alpha in grp.automorphism_group(G)}
    gens = _small_generating_set([Perm(t) for t in sorted(atom_perms)])
    gen_tables = [g.images for g in gens]

    seen = bytearray(1 << k)
    reps = []
    for mask in all_masks:
        if seen[mask]:
            continue
        reps.append((mask, members(mask)))
        stack = [mask]
        seen[mask] = 1
        while stack:
            cur = stack.pop()
            for table in gen_tables:
                img = 0
                rem = cur
                while rem:
                    low = rem & -rem
                    img |= 1 << table[low.bit_length() - 1]
                    rem ^= low
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
    return reps


def mu_constant(graph: Graph) -> bool:
    """Constant common-neighbour counts over adjacent and distance-2 pairs.

    Both are necessary for the emitted classes: transitivity on arcs forces
    the first, transitivity on 2-geodesics forces the second.
    """
    lam = None
    mu = None
    for u in range(graph.n):
        dist = graph.distances_from(u)
        for v in range(graph.n):
            if dist[v] == 1:
                value = graph.common_neighbors(u, v)
                if lam is None:
                    lam = value
                elif value != lam:
                    return False
            elif dist[v] == 2:
                value = graph.common_neighbors(u, v)
                if mu is None:
                    mu = value
                elif value != mu:
                    return False
    return True


@dataclass(frozen=True)
class CensusRecord:
    group_tag: str                # first group realizing the class
    connection_mask: int          # bitmask over element indices
    canonical_key: bytes
    family: str
    report: analyze.TransitivityReport
    groups: tuple[str, ...] = ()  # every group of this order realizing the class

    def summary(self) -> str:
        r = self.report
        return (f"family={self.family} n={r.n} valency={r.valency} "
                f"girth={r.girth} diameter={r.diameter} aut_order={r.aut_order} "
                f"two_arc_transitive={r.two_arc_transitive} "
                f"distance_transitive={r.distance_transitive} "
                f"primitive={r.primitive} groups={','.join(self.groups)} "
                f"mask=0x{self.connection_mask:x} key={self.canonical_key.hex()}")


@dataclass(frozen=True)
class CensusResult:
    order: int
    candidates: int
    representatives: int
    analyzed: int
    records: tuple[CensusRecord, ...]   # only 2-geodesic transitive classes

    @property
    def two_arc_transitive(self) -> tuple[CensusRecord, ...]:
        return tuple(r for r in self.records if r.report.two_arc_transitive)

    @property
    def not_two_arc_transitive(self) -> tuple[CensusRecord, ...]:
        return tuple(r for r in self.records if not r.report.two_arc_transitive)

    def family_tags(self) -> tuple[set[str], set[str]]:
        return ({r.family for r in self.two_arc_transitive},
                {r.family for r in self.not_two_arc_transitive})


def _element_mask(S: frozenset[int]) -> int:
    mask = 0
    for s in S:
        mask |= 1 << s
    return mask


def run_census(order: int, reduce_by_aut: bool = True, mu_filter: bool = True,
               jobs: int = 1, node_budget: int | None = None) -> CensusResult:
    """Census of all Cayley graphs of the given order; see module docstring."""
    groups = groups_of_order(order)
    candidates = 0
    reps: list[tuple[str, grp.FiniteGroup, int, frozenset[int]]] = []
    for G in groups:
        pairs = connection_set_orbit_reps(G, reduce_by_aut)
        candidates += (1 << len(inverse_pair_atoms(G))) - 1
        for mask, S in pairs:
            reps.append((G.name, G, mask, S))

    survivors: list[tuple[str, grp.FiniteGroup, frozenset[int], Graph]] = []
    for name, G, mask, S in reps:
        if len(G.subgroup_closure(S)) != G.size:
            continue  # disconnected Cayley graph
        graph = families.cayley(G, S)
        if mu_filter and not mu_constant(graph):
            continue  # cannot be 2-geodesic transitive
        survivors.append((name, G, S, graph))

    if jobs > 1:
        keyed = _keys_parallel([g for *_, g in survivors], jobs, node_budget)
    else:
        keyed = [autsearch.canonical_key(g, node_budget) for *_, g in survivors]

    by_key: dict[bytes, tuple[str, grp.FiniteGroup, frozenset[int], Graph]] = {}
    groups_by_key: dict[bytes, dict[str, None]] = {}
    for (name, G, S, graph), key in zip(survivors, keyed):
        if key not in by_key:
            by_key[key] = (name, G, S, graph)
        groups_by_key.setdefault(key, {})[name] = None

    records = []
    analyzed = 0
    for key in sorted(by_key):
        name, G, S, graph = by_key[key]
        analyzed += 1
        report = analyze.transitivity_report(graph, node_budget=node_budget)
        if not (report.arc_transitive and report.two_geodesic_transitive):
            continue
        classification = analyze.classify_named(graph)
        records.append(CensusRecord(
            group_tag=name, connection_mask=_element_mask(S), canonical_key=key,
            family=classification.tag, report=report,
            groups=tuple(groups_by_key[key])))
    return CensusResult(order=order, candidates=candidates,
                        representatives=len(reps), analyzed=analyzed,
                        records=tuple(records))


def _keys_parallel(graphs: list[Graph], jobs: int, node_budget: int | None) -> list[bytes]:
    from concurrent.futures import ProcessPoolExecutor
    payload = [(g.n, g.rows, node_budget) for g in graphs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_key_worker, payload, chunksize=16))


def _key_worker(args: tuple[int, tuple[int, ...], int | None]) -> bytes:
    n, rows, node_budget = args
    return autsearch.canonical_key(Graph(n, rows), node_budget)


def render(result: CensusResult) -> str:
    lines = [f"census order={result.order} candidates={result.candidates} "
             f"representatives={result.representatives} analyzed={result.analyzed} "
             f"classes={len(result.records)}"]
    lines.append("[2-arc transitive]")
    lines.extend(f"  {rec.summary()}" for rec in result.two_arc_transitive)
    lines.append("[2-geodesic transitive, not 2-arc transitive]")
    lines.extend(f"  {rec.summary()}" for rec in result.not_two_arc_transitive)
    return "\n".join(lines) + "\n"
