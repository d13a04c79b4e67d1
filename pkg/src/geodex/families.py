"""Constructors for every named graph family in the classification.

Vertex numbering is fixed and documented per family (lexicographic on
coordinates or group-element exponent tuples), so fixtures are
reproducible byte for byte.

The spec-string grammar used by the command line:

    cycle:N  complete:N  kbb:N  kbbm:N  kmb:M,B  hamming:D,N
    hamming2c:N  ep3A:P  ep3B:P  schlafli  schlafli_complement

where kbb:N is the complete bipartite graph on N+N, kbbm:N the same minus
a perfect matching, and kmb:M,B the complete multipartite graph with M
parts of size B.
"""

from __future__ import annotations

import itertools

from . import grp
from .graph import Graph, from_edges
from .grp import FiniteGroup, check_connection_set


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(n: int) -> Graph:
    """K_{n,n}: left part 0..n-1, right part n..2n-1."""
    if n < 1:
        raise ValueError("complete_bipartite needs n >= 1")
    return from_edges(2 * n, [(i, n + j) for i in range(n) for j in range(n)])


def cbm_minus_matching(n: int) -> Graph:
    """K_{n,n} minus the perfect matching i -- n+i."""
    if n < 2:
        raise ValueError("cbm_minus_matching needs n >= 2")
    return from_edges(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


def complete_multipartite(m: int, b: int) -> Graph:
    """K_{m[b]}: vertex (part, slot) = part*b + slot, adjacent iff parts differ."""
    if m < 3 or b < 2:
        raise ValueError("complete_multipartite needs m >= 3 parts of size b >= 2")
    n = m * b
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if u // b != v // b])


def hamming(d: int, n: int) -> Graph:
    """H(d, n): d-tuples over n symbols, adjacent iff Hamming distance 1.

    Vertex index is the base-n value of the tuple, most significant
    coordinate first; equivalently the Cayley graph of Z_n^d on the union
    of the coordinate subgroups minus identity.
    """
    if d < 2 or n < 2:
        raise ValueError("hamming needs d, n >= 2")
    size = n ** d
    edges = []
    for u in range(size):
        digits = []
        x = u
        for _ in range(d):
            digits.append(x % n)
            x //= n
        for pos in range(d):
            step = n ** pos
            base = u - digits[pos] * step
            for sym in range(digits[pos] + 1, n):
                edges.append((u, base + sym * step))
    return from_edges(size, edges)


def hamming2_complement(n: int) -> Graph:
    """The complement of H(2, n); needs n >= 3 to be connected."""
    if n < 3:
        raise ValueError("hamming2_complement needs n >= 3")
    return hamming(2, n).complement()


def cayley(G: FiniteGroup, S) -> Graph:
    """Cay(G, S): i ~ j iff j * i^-1 is in S."""
    S = check_connection_set(G, S)
    rows = [0] * G.size
    mul = G.mul
    for g in range(G.size):
        row = 0
        for s in S:
            row |= 1 << mul[s][g]
        rows[g] = row
    return Graph(G.size, tuple(rows))


def ep3_family_A(p: int) -> Graph:
    """Cay(E(p^3), {a^i, b^i : i nonzero}), valency 2(p-1)."""
    E = grp.extraspecial_p3(p)
    return cayley(E, grp.ep3_family_a_set(E))


def ep3_family_B(p: int) -> Graph:
    """Cay(E(p^3), <b>* union <b^i a b^i>* over i), valency p^2 - 1."""
    E = grp.extraspecial_p3(p)
    return cayley(E, grp.ep3_family_b_set(E))


def schlafli_complement() -> Graph:
    """The intersection graph of a double six: 27 lines, valency 10.

    Vertices 0..5 are a_1..a_6, vertices 6..11 are b_1..b_6, and 12..26
    are c_{ij} for i < j in lexicographic order.  Lines meet per the
    classical rules: a_i meets b_j iff i != j; a_i and b_i meet c_{jk}
    iff i is one of j, k; c_{ij} meets c_{kl} iff {i,j} and {k,l} are
    disjoint.
    """
    pairs = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    c_index = {pair: 12 + k for k, pair in enumerate(pairs)}
    edges = []
    for i in range(6):
        for j in range(6):
            if i != j:
                edges.append((i, 6 + j))
    for i in range(6):
        for (j, k), idx in c_index.items():
            if i in (j, k):
                edges.append((i, idx))
                edges.append((6 + i, idx))
    for (i, j), idx1 in c_index.items():
        for (k, l), idx2 in c_index.items():
            if idx1 < idx2 and not ({i, j} & {k, l}):
                edges.append((idx1, idx2))
    return from_edges(27, [(u, v) if u < v else (v, u) for u, v in edges])


def schlafli() -> Graph:
    """The 27-vertex strongly regular graph of valency 16."""
    return schlafli_complement().complement()


# ---------------------------------------------------------------------------
# spec strings and the catalog

_NO_PARAM = {"schlafli": schlafli, "schlafli_complement": schlafli_complement}
_ONE_PARAM = {"cycle": cycle, "complete": complete, "kbb": complete_bipartite,
              "kbbm": cbm_minus_matching, "hamming2c": hamming2_complement,
              "ep3A": ep3_family_A, "ep3B": ep3_family_B}
_TWO_PARAM = {"kmb": complete_multipartite, "hamming": hamming}


def from_spec(text: str) -> Graph:
    """Build a graph from a spec string such as 'hamming:3,5' or 'ep3B:5'."""
    text = text.strip()
    if text in _NO_PARAM:
        return _NO_PARAM[text]()
    name, sep, raw = text.partition(":")
    if not sep:
        raise ValueError(f"unknown family spec {text!r}")
    try:
        params = [int(tok) for tok in raw.split(",")]
    except ValueError:
        raise ValueError(f"bad parameters in spec {text!r}") from None
    if name in _ONE_PARAM and len(params) == 1:
        return _ONE_PARAM[name](params[0])
    if name in _TWO_PARAM and len(params) == 2:
        return _TWO_PARAM[name](*params)
    raise ValueError(f"unknown family spec {text!r}")


def catalog_for_order(n: int) -> list[tuple[str, Graph]]:
    """Every catalog family instance with n vertices, in matching priority order.

    Duplicate isomorphism classes are possible (H(3,2) equals K_{4,4} minus
    a matching); classification returns the first tag that matches.
    """
    out: list[tuple[str, Graph]] = []
    if n >= 3:
        out.append((f"cycle:{n}", cycle(n)))
    out.append((f"complete:{n}", complete(n)))
    for d in range(2, n.bit_length() + 1):
        k = round(n ** (1 / d))
        for kk in (k - 1, k, k + 1):
            if kk >= 2 and kk ** d == n:
                out.append((f"hamming:{d},{kk}", hamming(d, kk)))
    r = round(n ** 0.5)
    for rr in (r - 1, r, r + 1):
        if rr >= 3 and rr * rr == n:
            out.append((f"hamming2c:{rr}", hamming2_complement(rr)))
    if n % 2 == 0 and n >= 4:
        out.append((f"kbb:{n // 2}", complete_bipartite(n // 2)))
        if n >= 6:
            out.append((f"kbbm:{n // 2}", cbm_minus_matching(n // 2)))
    for m in range(3, n + 1):
        if n % m == 0 and n // m >= 2:
            out.append((f"kmb:{m},{n // m}", complete_multipartite(m, n // m)))
    p = round(n ** (1 / 3))
    for pp in (p - 1, p, p + 1):
        if pp >= 3 and grp.is_prime(pp) and pp ** 3 == n:
            out.append((f"ep3A:{pp}", ep3_family_A(pp)))
            out.append((f"ep3B:{pp}", ep3_family_B(pp)))
    if n == 27:
        out.append(("schlafli", schlafli()))
        out.append(("schlafli_complement", schlafli_complement()))
    return out
