"""Permutations of {0..n-1} and finitely generated permutation groups.

Composition is left-to-right everywhere in this package:
``(p * q)(x) == q(p(x))``.  With this convention the right-regular action
R(g): x -> x*g satisfies R(g) * R(h) == R(g*h), so abstract group elements
and their permutation images multiply in the same order.

Groups are represented by a stabilizer chain built with a deterministic
incremental Schreier-Sims procedure.  Base points beyond any requested
prefix are chosen greedily as the lowest-index point moved by the
generator being placed, so chains, orders and transversals are
reproducible across runs.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

MAX_DEGREE = 1024


def _compose_t(p: tuple, q: tuple) -> tuple:
    # left-to-right: x -> q[p[x]]
    return tuple(map(q.__getitem__, p))


def _inverse_t(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _is_identity_t(p: tuple) -> bool:
    return all(i == v for i, v in enumerate(p))


class Perm:
    """A permutation of {0..n-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        t = tuple(images)
        n = len(t)
        if n > MAX_DEGREE:
            raise ValueError(f"degree {n} exceeds the supported cap {MAX_DEGREE}")
        seen = bytearray(n)
        for v in t:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise ValueError("images do not form a bijection of 0..n-1")
            seen[v] = 1
        object.__setattr__(self, "images", t)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(range(n))

    @staticmethod
    def from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> "Perm":
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                images[a] = b
            if cyc:
                images[cyc[-1]] = cyc[0]
        return Perm(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def inverse(self) -> "Perm":
        p = Perm.__new__(Perm)
        object.__setattr__(p, "images", _inverse_t(self.images))
        return p

    def is_identity(self) -> bool:
        return _is_identity_t(self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def cycle_string(self) -> str:
        seen = set()
        parts = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts) or "()"

    def __repr__(self) -> str:
        return f"Perm{self.cycle_string()}"


def _wrap(t: tuple) -> Perm:
    p = Perm.__new__(Perm)
    object.__setattr__(p, "images", t)
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """Left-to-right product: the result maps x to q(p(x))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    return _wrap(_compose_t(p.images, q.images))


def inverse(p: Perm) -> Perm:
    """The permutation q with compose(p, q) = identity."""
    return p.inverse()


def orbit(gens: Sequence[Perm], x: int) -> set[int]:
    """The smallest set containing x closed under all generators (BFS)."""
    raw = [g.images for g in gens]
    if raw and not 0 <= x < len(raw[0]):
        raise ValueError(f"point {x} out of range for degree {len(raw[0])}")
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for g in raw:
            z = g[y]
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return seen


def orbit_tuples(gens: Sequence[Perm], t: Sequence[int]) -> set[tuple[int, ...]]:
    """Closure of an ordered tuple under the coordinatewise action."""
    t = tuple(t)
    raw = [g.images for g in gens]
    if raw:
        n = len(raw[0])
        if any(not 0 <= x < n for x in t):
            raise ValueError("tuple entry out of range")
    seen = {t}
    queue = deque([t])
    while queue:
        cur = queue.popleft()
        for g in raw:
            img = tuple(map(g.__getitem__, cur))
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return seen


class _Level:
    __slots__ = ("point", "serials", "orbit_list", "transversal", "inv_transversal",
                 "pending")

    def __init__(self, point: int):
        self.point = point
        self.serials: list[int] = []
        self.orbit_list: list[int] = [point]
        # transversal[x] is a raw tuple mapping self.point to x; None = identity
        self.transversal: dict[int, tuple | None] = {point: None}
        self.inv_transversal: dict[int, tuple | None] = {point: None}
        self.pending: deque[tuple[int, int]] = deque()


class PermGroup:
    """A permutation group with a stabilizer chain.

    The product of the transversal sizes along the chain is the exact
    group order; sifting through the chain decides membership.
    """

    def __init__(self, degree: int, generators: list[Perm], levels: list[_Level]):
        self.degree = degree
        self.generators = generators
        self._levels = levels
        self._gen_by_serial: list[tuple] = []

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self._levels)

    @property
    def transversal_sizes(self) -> tuple[int, ...]:
        return tuple(len(lvl.transversal) for lvl in self._levels)

    @property
    def order(self) -> int:
        n = 1
        for lvl in self._levels:
            n *= len(lvl.transversal)
        return n

    def level_generators(self, i: int) -> list[Perm]:
        """Generators of the pointwise stabilizer of base[:i] (the i-th chain group)."""
        if i >= len(self._levels):
            return []
        return [_wrap(self._gen_by_serial[s]) for s in self._levels[i].serials]

    def point_orbit(self, i: int) -> list[int]:
        """Orbit of base[i] under the i-th chain group, in discovery order."""
        return list(self._levels[i].orbit_list)

    def _strip(self, t: tuple, start: int = 0) -> tuple[tuple, int]:
        for i in range(start, len(self._levels)):
            lvl = self._levels[i]
            x = t[lvl.point]
            if x not in lvl.transversal:
                return t, i
            inv_rep = lvl.inv_transversal[x]
            if inv_rep is not None:
                t = _compose_t(t, inv_rep)
        return t, len(self._levels)

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} != {self.degree}")
        residue, stop = self._strip(p.images)
        return stop == len(self._levels) and _is_identity_t(residue)

    def coset_representative(self, i: int, x: int) -> Perm:
        """A chain element mapping base[i] to orbit point x."""
        rep = self._levels[i].transversal[x]
        return Perm.identity(self.degree) if rep is None else _wrap(rep)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order}, base={self.base})"


def schreier_sims(gens: Sequence[Perm], degree: int | None = None,
                  base_prefix: Sequence[int] = ()) -> PermGroup:
    """Build a stabilizer chain for the group generated by ``gens``.

    ``base_prefix`` pins the first base points (used to read off point
    stabilizers); further base points are chosen as the lowest moved point
    of each generator placed, deterministically.
    """
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree is required when gens is empty")
        degree = gens[0].degree
    if degree > MAX_DEGREE:
        raise ValueError(f"degree {degree} exceeds the supported cap {MAX_DEGREE}")
    for g in gens:
        if g.degree != degree:
            raise ValueError("all generators must share the degree")
    for b in base_prefix:
        if not 0 <= b < degree:
            raise ValueError("base point out of range")

    levels: list[_Level] = [_Level(b) for b in base_prefix]
    gen_by_serial: list[tuple] = []

    def place(t: tuple) -> None:
        """Register a non-identity element at every chain level it stabilizes into."""
        if _is_identity_t(t):
            return
        k = 0
        while k < len(levels) and t[levels[k].point] == levels[k].point:
            k += 1
        if k == len(levels):
            moved = min(i for i, v in enumerate(t) if v != i)
            levels.append(_Level(moved))
        serial = len(gen_by_serial)
        gen_by_serial.append(t)
        for i in range(k + 1):
            lvl = levels[i]
            lvl.serials.append(serial)
            lvl.pending.extend((x, serial) for x in lvl.orbit_list)

    for g in gens:
        place(g.images)

    # Deepest-first discipline: a level's Schreier generators are sifted only
    # while every deeper level is pending-free, so the deeper chain is always
    # complete when consulted and residues are never re-derived.
    top = len(levels) - 1
    while top >= 0:
        lvl = levels[top]
        if not lvl.pending:
            top -= 1
            continue
        x, serial = lvl.pending.popleft()
        g = gen_by_serial[serial]
        y = g[x]
        t_x = lvl.transversal[x]
        if y not in lvl.transversal:
            # tree edge: extend orbit; its Schreier generator is the identity
            rep = g if t_x is None else _compose_t(t_x, g)
            lvl.transversal[y] = rep
            lvl.inv_transversal[y] = _inverse_t(rep)
            lvl.orbit_list.append(y)
            lvl.pending.extend((y, s) for s in lvl.serials)
            continue
        inv_t_y = lvl.inv_transversal[y]
        s_gen = g if t_x is None else _compose_t(t_x, g)
        if inv_t_y is not None:
            s_gen = _compose_t(s_gen, inv_t_y)
        if _is_identity_t(s_gen):
            continue
        # sift below this level; any residue extends the chain deeper down
        residue = s_gen
        for j in range(top + 1, len(levels)):
            deeper = levels[j]
            z = residue[deeper.point]
            if z not in deeper.transversal:
                break
            inv_rep = deeper.inv_transversal[z]
            if inv_rep is not None:
                residue = _compose_t(residue, inv_rep)
        if not _is_identity_t(residue):
            place(residue)
            top = len(levels) - 1

    group = PermGroup(degree, gens, levels)
    group._gen_by_serial = gen_by_serial
    return group


def contains(group: PermGroup, p: Perm) -> bool:
    """True iff p sifts to the identity through the chain."""
    return group.contains(p)


def tuple_orbit_size(gens: Sequence[Perm], t: Sequence[int], degree: int | None = None) -> int:
    """Size of the orbit of an ordered tuple, via orbit-stabilizer.

    Builds a chain whose base starts with the tuple entries; the orbit size
    is the product of the first len(t) transversal sizes.  This avoids
    materializing the orbit, which matters for large symmetric groups.
    """
    t = tuple(t)
    seen = set()
    prefix = [x for x in t if not (x in seen or seen.add(x))]
    group = schreier_sims(gens, degree=degree, base_prefix=prefix)
    size = 1
    for k in range(len(prefix)):
        size *= group.transversal_sizes[k]
    return size


def minimal_blocks(group: PermGroup, x: int, y: int) -> list[list[int]]:
    """The finest block system of a transitive group merging x and y.

    Union-find closure over generator images of merged pairs (Atkinson's
    algorithm).  Raises if the group is not transitive.
    """
    n = group.degree
    gens = [g.images for g in group.generators]
    if len(orbit(group.generators, x)) != n:
        raise ValueError("group is not transitive")
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    queue = deque()
    ra, rb = find(x), find(y)
    if ra != rb:
        parent[rb] = ra
        queue.append((x, y))
    while queue:
        u, v = queue.popleft()
        for g in gens:
            a, b = g[u], g[v]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
                queue.append((a, b))
    blocks: dict[int, list[int]] = {}
    for v in range(n):
        blocks.setdefault(find(v), []).append(v)
    return sorted(blocks.values())


def is_primitive(group: PermGroup) -> bool:
    """True iff a transitive group has only trivial block systems."""
    n = group.degree
    if len(orbit(group.generators, 0)) != n:
        raise ValueError("group is not transitive")
    if n == 1:
        return True
    for y in range(1, n):
        blocks = minimal_blocks(group, 0, y)
        if len(blocks) != 1:
            return False
    return True
