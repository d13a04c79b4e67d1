"""Simple undirected graphs with adjacency stored as bit rows.

Rows are Python ints used as bitsets, so neighbourhood intersections are
single AND operations; the census leans on this for its many adjacency
checks.  All enumerations are produced in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: tuple[int, ...]):
        self.n = n
        self.rows = rows
        object.__setattr__(self, "_hash", hash((n, rows)))

    def __setattr__(self, name, value):
        if name in ("n", "rows") and hasattr(self, "_hash"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"

    # -- basics ------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    def valency_if_regular(self) -> int | None:
        degs = {r.bit_count() for r in self.rows}
        return degs.pop() if len(degs) == 1 else None

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full & ~r) & ~(1 << v)
                                   for v, r in enumerate(self.rows)))

    def relabel(self, images) -> "Graph":
        """The graph with vertex v renamed to images[v]."""
        rows = [0] * self.n
        for u in range(self.n):
            acc = 0
            r = self.rows[u]
            while r:
                low = r & -r
                acc |= 1 << images[low.bit_length() - 1]
                r ^= low
            rows[images[u]] = acc
        return Graph(self.n, tuple(rows))

    # -- connectivity and distances -----------------------------------------

    def component_mask(self, u: int) -> int:
        seen = 1 << u
        frontier = seen
        rows = self.rows
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        return self.n <= 1 or self.component_mask(0) == (1 << self.n) - 1

    def distances_from(self, u: int) -> list[int]:
        """BFS distances; -1 marks vertices outside u's component."""
        dist = [-1] * self.n
        dist[u] = 0
        seen = 1 << u
        frontier = seen
        d = 0
        rows = self.rows
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
            f = frontier
            while f:
                low = f & -f
                dist[low.bit_length() - 1] = d
                f ^= low
        return dist

    def diameter(self) -> int:
        if not self.is_connected():
            raise ValueError("diameter of a disconnected graph")
        best = 0
        for u in range(self.n):
            best = max(best, max(self.distances_from(u)))
        return best

    def girth(self) -> int | None:
        """Length of a shortest cycle; None for forests."""
        best: int | None = None
        for root in range(self.n):
            dist = {root: 0}
            parent = {root: -1}
            queue = [root]
            qi = 0
            while qi < len(queue):
                u = queue[qi]
                qi += 1
                du = dist[u]
                if best is not None and 2 * du >= best:
                    break
                for v in _bits(self.rows[u]):
                    if v not in dist:
                        dist[v] = du + 1
                        parent[v] = u
                        queue.append(v)
                    elif v != parent[u] and dist[v] >= du:
                        cyc = du + dist[v] + 1
                        if best is None or cyc < best:
                            best = cyc
            if best == 3:
                return 3
        return best

    # -- arcs, 2-arcs, 2-geodesics -------------------------------------------

    def enumerate_arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u])]

    def enumerate_2arcs(self) -> list[tuple[int, int, int]]:
        out = []
        for u in range(self.n):
            for v in _bits(self.rows[u]):
                for w in _bits(self.rows[v]):
                    if w != u:
                        out.append((u, v, w))
        return out

    def enumerate_2geodesics(self) -> list[tuple[int, int, int]]:
        out = []
        for u in range(self.n):
            ru = self.rows[u]
            for v in _bits(ru):
                for w in _bits(self.rows[v] & ~ru & ~(1 << u)):
                    out.append((u, v, w))
        return out

    def count_arcs(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def count_2arcs(self) -> int:
        return sum(d * (d - 1) for d in (r.bit_count() for r in self.rows))

    def count_2geodesics(self) -> int:
        total = 0
        for u in range(self.n):
            ru = self.rows[u]
            r = ru
            while r:
                low = r & -r
                v = low.bit_length() - 1
                r ^= low
                total += (self.rows[v] & ~ru).bit_count() - 1  # drop u itself
        return total

    def common_neighbors(self, u: int, v: int) -> int:
        return (self.rows[u] & self.rows[v]).bit_count()


@dataclass(frozen=True)
class DistancePartition:
    """BFS layers around a root; layers partition the root's component."""
    root: int
    layers: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1


def from_edges(n: int, edges) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(rows) -> Graph:
    rows = tuple(rows)
    n = len(rows)
    for v, r in enumerate(rows):
        if r >> n:
            raise ValueError("adjacency bits out of range")
        if r >> v & 1:
            raise ValueError(f"loop at vertex {v}")
    for u in range(n):
        for v in _bits(rows[u]):
            if not rows[v] >> u & 1:
                raise ValueError(f"asymmetric adjacency at ({u},{v})")
    return Graph(n, rows)


def distance_partition(graph: Graph, u: int) -> DistancePartition:
    if not 0 <= u < graph.n:
        raise ValueError(f"vertex {u} out of range")
    dist = graph.distances_from(u)
    depth = max(dist)
    layers = [[] for _ in range(depth + 1)]
    for v, d in enumerate(dist):
        if d >= 0:
            layers[d].append(v)
    return DistancePartition(u, tuple(tuple(layer) for layer in layers))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
