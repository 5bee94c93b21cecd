"""Simple undirected graphs stored as per-vertex neighbour bitmasks.

Vertices are the integers ``0..n-1``; ``rows[v]`` has bit ``u`` set iff
``uv`` is an edge.  Graph values are immutable and hashable, so they can be
shared freely between worker processes and used as dictionary keys.

Also provides the construction algebra (disjoint union, join, complement,
induced subgraphs), graph6 reading/writing and a canonical form used for
isomorphism rejection during enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "Graph6Error",
    "from_edges",
    "complete",
    "empty_graph",
    "cycle_graph",
    "path_graph",
    "disjoint_union",
    "join",
    "complement",
    "induced_subgraph",
    "relabel",
    "vertex_mask",
    "parse_graph6",
    "write_graph6",
    "canonical_form",
    "CANONICAL_MAX_N",
]

CANONICAL_MAX_N = 10


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")

    def validate(self) -> None:
        """Raise ``ValueError`` unless the rows describe a simple graph."""
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.rows[v] & ((1 << v) - 1))]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def vertex_mask(G: Graph, S: Iterable[int] | int) -> int:
    """Bitmask for the vertex set ``S`` (an iterable of labels or a mask)."""
    if isinstance(S, int):
        if S < 0 or S & ~G.full_mask:
            raise ValueError(f"vertex mask {S:#x} outside the vertex range of an order-{G.n} graph")
        return S
    mask = 0
    for v in S:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} outside 0..{G.n - 1}")
        mask |= 1 << v
    return mask


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are collapsed."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle graph needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.rows)
        offset += g.n
    return Graph(offset, tuple(rows))


def join(G: Graph, H: Graph) -> Graph:
    """``G + H``: disjoint copies of ``G`` and ``H`` plus every cross edge."""
    g_mask = G.full_mask
    h_mask = H.full_mask << G.n
    rows = [row | h_mask for row in G.rows]
    rows.extend((row << G.n) | g_mask for row in H.rows)
    return Graph(G.n + H.n, tuple(rows))


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.rows)))


def induced_subgraph(G: Graph, S: Iterable[int] | int) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``S``, relabelled ``0..|S|-1`` in increasing order.

    Returns the subgraph and ``labels`` with ``labels[i]`` the original vertex
    that became ``i``.
    """
    mask = vertex_mask(G, S)
    labels = list(_bits(mask))
    index = {v: i for i, v in enumerate(labels)}
    rows = []
    for v in labels:
        row = 0
        for u in _bits(G.rows[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(labels), tuple(rows)), labels


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise ValueError("perm must be a permutation of the vertex range")
    rows = [0] * G.n
    for v in range(G.n):
        row = 0
        for u in _bits(G.rows[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return Graph(G.n, tuple(rows))


# --------------------------------------------------------------------------
# graph6


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("order too large for graph6")


def write_graph6(G: Graph) -> str:
    """graph6 encoding of ``G`` (no header, no trailing newline)."""
    out = [_encode_size(G.n)]
    acc = 0
    nbits = 0
    rows = G.rows
    for j in range(1, G.n):
        row = rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    line = text.strip("\r\n")
    base = 0
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
        base = len(_HEADER)
    data = [ord(ch) - 63 for ch in line]
    for pos, value in enumerate(data):
        if not 0 <= value <= 63:
            raise Graph6Error(f"invalid graph6 byte {line[pos]!r}", base + pos)
    if not data:
        raise Graph6Error("empty graph6 string", base)

    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header", base + len(data))
        n = 0
        for value in data[2:8]:
            n = (n << 6) | value
        pos = 8
        if n <= 258047:
            raise Graph6Error("non-minimal 8-byte size header", base)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size header", base + len(data))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
        if n <= 62:
            raise Graph6Error("non-minimal 4-byte size header", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated body: expected {need} bytes, found {len(body)}", base + len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 body", base + pos + need)

    rows = [0] * n
    k = 0
    i, j = 0, 1
    for value in body:
        for shift in range(5, -1, -1):
            if k == nbits:
                break
            if value >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


# --------------------------------------------------------------------------
# canonical form


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts into every cell."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = rows[v]
                groups.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                out.extend(groups[key] for key in sorted(groups))
        cells = out
        if not changed:
            return cells


def _leaf_code(rows: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_order(G: Graph) -> list[int]:
    """Vertex order whose adjacency bit string is the canonical one.

    The search individualises vertices of the first non-singleton cell of an
    equitable partition, refines, and keeps the lexicographically smallest
    upper-triangle bit string over all leaves.  Swapping two twin vertices is
    an automorphism, so only one of each twin class is tried per cell.
    """
    if G.n > CANONICAL_MAX_N:
        raise ValueError(f"canonical form is limited to n <= {CANONICAL_MAX_N}, got {G.n}")
    rows = G.rows
    if G.n == 0:
        return []
    start: dict[int, list[int]] = {}
    for v in range(G.n):
        start.setdefault(rows[v].bit_count(), []).append(v)
    cells = [start[d] for d in sorted(start)]

    best_code = None
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(rows, cells)
        target = next((k for k, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = [cell[0] for cell in cells]
            code = _leaf_code(rows, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(rows[u] & ~(1 << v) == rows[v] & ~(1 << u) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(cells)
    return best_order


def canonical_form(G: Graph) -> bytes:
    """Isomorphism-invariant key: graph6 of the canonically relabelled graph.

    Two graphs get equal keys iff they are isomorphic.  Refused for
    ``n > CANONICAL_MAX_N``.
    """
    order = canonical_order(G)
    perm = [0] * G.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return write_graph6(relabel(G, perm)).encode("ascii")
