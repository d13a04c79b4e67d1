"""Graph automorphism generators and canonical forms.

Individualization-refinement with backtracking in the McKay style:

- partitions are refined to the coarsest equitable refinement (every cell
  has uniform neighbour counts into every cell);
- the search individualizes vertices of the first smallest non-singleton
  cell, in ascending order;
- discovered automorphisms prune sibling branches (two branch vertices in
  one orbit of the already-found automorphisms that fix the current
  individualization prefix lead to identical subtrees);
- a leaf is a discrete partition; its relabeled adjacency matrix is
  compared with the first leaf and the best leaf so far.  Equal matrices
  certify automorphisms; the canonical form is the lexicographically
  smallest matrix over all (unpruned) leaves.

Correctness before speed: the search carries a hard node budget and fails
loudly rather than returning a truncated group.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .graph import Graph
from .perm import Perm

DEFAULT_NODE_BUDGET = 10_000_000


class SearchBudgetExceeded(RuntimeError):
    """The backtracking search exceeded its node budget."""


def unit_partition(n: int) -> list[list[int]]:
    return [list(range(n))] if n else []


def _validate_partition(n: int, partition) -> list[list[int]]:
    cells = [sorted(c) for c in partition]
    seen: set[int] = set()
    for cell in cells:
        if not cell:
            raise ValueError("empty cell")
        for v in cell:
            if not 0 <= v < n or v in seen:
                raise ValueError("cells must be disjoint and in range")
            seen.add(v)
    if len(seen) != n:
        raise ValueError("cells must cover all vertices")
    return cells


def _refine_cells(rows, cells: list[list[int]], active: list[int] | None = None
                  ) -> list[list[int]]:
    """Coarsest equitable refinement; mutates and returns ``cells``.

    ``active`` indexes the cells whose splitting power must be (re)checked;
    None means all of them.
    """
    alive: set[int] = set(map(id, cells))
    queue: deque[list[int]] = deque(cells if active is None
                                    else [cells[i] for i in active])
    queued: set[int] = set(map(id, queue))
    while queue:
        splitter = queue.popleft()
        queued.discard(id(splitter))
        if id(splitter) not in alive:
            continue
        wmask = 0
        for v in splitter:
            wmask |= 1 << v
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            first_count = (rows[cell[0]] & wmask).bit_count()
            buckets: dict[int, list[int]] = {}
            uniform = True
            for v in cell:
                cnt = (rows[v] & wmask).bit_count()
                if cnt != first_count:
                    uniform = False
                buckets.setdefault(cnt, []).append(v)
            if uniform:
                i += 1
                continue
            frags = [buckets[c] for c in sorted(buckets)]
            alive.discard(id(cell))
            cells[i:i + 1] = frags
            for frag in frags:
                alive.add(id(frag))
                if id(frag) not in queued:
                    queue.append(frag)
                    queued.add(id(frag))
            if id(cell) == id(splitter):
                # the splitter itself fragmented; its fragments are queued
                break
            i += len(frags)
    return cells


def refine(graph: Graph, partition) -> list[list[int]]:
    """The coarsest equitable refinement of an ordered partition.

    Fragments replace their parent cell in place, ordered by ascending
    neighbour count into the splitting cell, so the result only depends on
    the graph and the partition (never on vertex labels beyond the input
    order).  Idempotent.
    """
    cells = _validate_partition(graph.n, partition)
    return _refine_cells(graph.rows, cells, None)


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


class _SearchResult:
    __slots__ = ("generators", "canonical_pos", "canonical_rows", "nodes")

    def __init__(self, generators, canonical_pos, canonical_rows, nodes):
        self.generators = generators
        self.canonical_pos = canonical_pos
        self.canonical_rows = canonical_rows
        self.nodes = nodes


def _leaf_key(graph: Graph, cells: list[list[int]]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Relabeled adjacency rows (column-ascending bit order) and the labeling."""
    n = graph.n
    pos = [0] * n
    for new, cell in enumerate(cells):
        pos[cell[0]] = new
    top = 1 << (n - 1) if n else 0
    rows = graph.rows
    out = []
    for cell in cells:
        r = rows[cell[0]]
        acc = 0
        while r:
            low = r & -r
            acc |= top >> pos[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return tuple(out), tuple(pos)


def _run_search(graph: Graph, node_budget: int) -> _SearchResult:
    n = graph.n
    if n == 0:
        return _SearchResult([], (), (), 0)
    rows = graph.rows
    root = _refine_cells(rows, unit_partition(n), None)

    gens: list[tuple[int, ...]] = []
    first: tuple | None = None   # (key_rows, pos)
    best: tuple | None = None
    nodes = 0

    def record_leaf(cells: list[list[int]]) -> None:
        nonlocal first, best
        key, pos = _leaf_key(graph, cells)
        if first is None:
            first = (key, pos)
            best = (key, pos)
            return
        for ref_key, ref_pos in (first, best):
            if key == ref_key:
                inv_ref = [0] * n
                for old, new in enumerate(ref_pos):
                    inv_ref[new] = old
                gamma = tuple(inv_ref[pos[u]] for u in range(n))
                if any(gamma[u] != u for u in range(n)):
                    _check_automorphism(graph, gamma)
                    gens.append(gamma)
                break
        if key < best[0]:
            best = (key, pos)

    def homogeneous(cells: list[list[int]]) -> bool:
        # every cell induces a complete or empty subgraph and every pair of
        # cells is fully joined or fully separated; the partition being
        # equitable, checking one representative per cell suffices
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        for i, cell in enumerate(cells):
            k = len(cell)
            if k == 1:
                continue
            row = rows[cell[0]]
            if (row & masks[i]).bit_count() not in (0, k - 1):
                return False
            for j, other in enumerate(cells):
                if j != i and (row & masks[j]).bit_count() not in (0, len(other)):
                    return False
        return True

    def collapse_homogeneous(cells: list[list[int]]) -> None:
        # all leaves below carry one matrix; the cell-wise symmetric groups
        # are automorphisms, so the whole subtree contributes exactly this
        record_leaf([[v] for cell in cells for v in cell])
        for cell in cells:
            if len(cell) < 2:
                continue
            swap = list(range(n))
            swap[cell[0]], swap[cell[1]] = cell[1], cell[0]
            new = [tuple(swap)]
            if len(cell) > 2:
                cyc = list(range(n))
                for a, b in zip(cell, cell[1:]):
                    cyc[a] = b
                cyc[cell[-1]] = cell[0]
                new.append(tuple(cyc))
            for g in new:
                _check_automorphism(graph, g)
                gens.append(g)

    def descend(cells: list[list[int]], prefix: list[int]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetExceeded(
                f"automorphism search exceeded {node_budget} nodes")
        target = -1
        target_size = n + 1
        for i, cell in enumerate(cells):
            k = len(cell)
            if 1 < k < target_size:
                target = i
                target_size = k
                if k == 2:
                    break
        if target < 0:
            record_leaf(cells)
            return
        if homogeneous(cells):
            collapse_homogeneous(cells)
            return
        cell = cells[target]
        explored: list[int] = []
        uf: _UnionFind | None = None
        uf_gens = -1
        for v in cell:
            if explored:
                if uf is None or uf_gens != len(gens):
                    uf = _UnionFind(n)
                    for g in gens:
                        if all(g[x] == x for x in prefix):
                            for x in range(n):
                                uf.union(x, g[x])
                    uf_gens = len(gens)
                roots = {uf.find(u) for u in explored}
                if uf.find(v) in roots:
                    continue
            child = [list(c) for c in cells]
            rest = [x for x in cell if x != v]
            child[target:target + 1] = [[v], rest]
            _refine_cells(rows, child, [target, target + 1])
            prefix.append(v)
            descend(child, prefix)
            prefix.pop()
            explored.append(v)

    descend(root, [])
    return _SearchResult([Perm(g) for g in gens], best[1], best[0], nodes)


def _check_automorphism(graph: Graph, gamma: tuple[int, ...]) -> None:
    rows = graph.rows
    for u in range(graph.n):
        acc = 0
        r = rows[u]
        while r:
            low = r & -r
            acc |= 1 << gamma[low.bit_length() - 1]
            r ^= low
        if acc != rows[gamma[u]]:
            raise AssertionError("search produced a non-automorphism")


_budget_override: int | None = None


@lru_cache(maxsize=512)
def _cached_search(graph: Graph) -> _SearchResult:
    budget = _budget_override if _budget_override is not None else DEFAULT_NODE_BUDGET
    return _run_search(graph, budget)


def _search(graph: Graph, node_budget: int | None) -> _SearchResult:
    global _budget_override
    if node_budget is None:
        return _cached_search(graph)
    _budget_override = node_budget
    try:
        return _run_search(graph, node_budget)
    finally:
        _budget_override = None


def automorphism_generators(graph: Graph, node_budget: int | None = None) -> list[Perm]:
    """Generators of the full automorphism group (verified edge-preserving)."""
    return list(_search(graph, node_budget).generators)


def canonical_labeling(graph: Graph, node_budget: int | None = None) -> Perm:
    """A relabeling onto the canonical form (vertex -> canonical position)."""
    pos = _search(graph, node_budget).canonical_pos
    return Perm(pos) if pos else Perm(())


def canonical_key(graph: Graph, node_budget: int | None = None) -> bytes:
    """Bytes identifying the isomorphism class: n plus the canonical matrix."""
    res = _search(graph, node_budget)
    n = graph.n
    bits = bytearray()
    acc = 0
    nbits = 0
    top = 1 << (n - 1) if n else 0
    for i in range(n):
        row = res.canonical_rows[i]
        for j in range(i + 1, n):
            acc = (acc << 1) | (1 if row & (top >> j) else 0)
            nbits += 1
            if nbits == 8:
                bits.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        bits.append(acc << (8 - nbits))
    return n.to_bytes(4, "big") + bytes(bits)


def are_isomorphic(g1: Graph, g2: Graph, node_budget: int | None = None) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    return canonical_key(g1, node_budget) == canonical_key(g2, node_budget)


def isomorphism_witness(g1: Graph, g2: Graph) -> list[int] | None:
    """An explicit vertex map g1 -> g2 when the graphs are isomorphic."""
    if not are_isomorphic(g1, g2):
        return None
    pos1 = _search(g1, None).canonical_pos
    pos2 = _search(g2, None).canonical_pos
    inv2 = [0] * g2.n
    for old, new in enumerate(pos2):
        inv2[new] = old
    return [inv2[pos1[u]] for u in range(g1.n)]
