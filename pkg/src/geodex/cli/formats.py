"""Graph file formats: edge-list text and graph6.

Edge list: header line "n m", then m lines "u v" with u < v, ascending.

graph6: the standard printable encoding. The vertex count is one byte
(63 + n) for n <= 62, else 126 followed by three bytes carrying 18 bits;
the upper triangle is read column by column (x(0,1), x(0,2), x(1,2),
x(0,3), ...), packed into 6-bit groups, each offset by 63.
"""

from __future__ import annotations

from ..graph import Graph, from_edges


def write_edge_list(graph: Graph) -> str:
    edges = graph.edges()
    lines = [f"{graph.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"malformed header {lines[0]!r}; expected 'n m'")
    n, m = (int(tok) for tok in header)
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
    return from_edges(n, edges)


def write_graph6(graph: Graph) -> str:
    n = graph.n
    if n > 258047:
        raise ValueError("graph too large for this graph6 writer")
    if n <= 62:
        head = chr(63 + n)
    else:
        head = chr(126) + "".join(chr(63 + (n >> shift & 63)) for shift in (12, 6, 0))
    bits = []
    for j in range(1, n):
        col = graph.rows[j]
        for i in range(j):
            bits.append(col >> i & 1)
    out = [head]
    for k in range(0, len(bits), 6):
        group = bits[k:k + 6] + [0] * (6 - len(bits[k:k + 6]))
        val = 0
        for bit in group:
            val = val << 1 | bit
        out.append(chr(63 + val))
    return "".join(out)


def read_graph6(line: str) -> Graph:
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise ValueError("empty graph6 input")
    data = [ord(ch) - 63 for ch in line]
    if any(not 0 <= v <= 63 for v in data):
        raise ValueError("invalid graph6 character")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise ValueError("unsupported graph6 size prefix")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError(f"graph6 body length {len(body)} does not match n={n}")
    bits = []
    for val in body:
        bits.extend(val >> shift & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 input")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)
