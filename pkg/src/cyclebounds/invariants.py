"""Exact graph invariants: order, size, minimum degree, components,
vertex connectivity, independence number and toughness."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _kernels
from .graph import Graph, _bits

__all__ = [
    "Toughness",
    "InvariantRecord",
    "order",
    "size",
    "min_degree",
    "components",
    "is_connected",
    "is_complete",
    "local_connectivity",
    "vertex_connectivity",
    "independence_number",
    "toughness",
    "is_t_tough",
    "invariant_record",
]

TOUGHNESS_MAX_N = 30


@dataclass(frozen=True)
class Toughness:
    """Exact toughness; ``value is None`` means infinite (complete graphs)."""

    value: Fraction | None

    @property
    def infinite(self) -> bool:
        return self.value is None

    def at_least(self, t) -> bool:
        return self.value is None or self.value >= Fraction(t)

    def exceeds(self, t) -> bool:
        return self.value is None or self.value > Fraction(t)

    def __str__(self) -> str:
        if self.value is None:
            return "inf"
        return str(self.value)


@dataclass(frozen=True)
class InvariantRecord:
    n: int
    q: int
    delta: int
    kappa: int
    alpha: int
    tau: Toughness
    connected: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "delta": self.delta,
            "kappa": self.kappa,
            "alpha": self.alpha,
            "tau": str(self.tau),
            "connected": self.connected,
        }


def order(G: Graph) -> int:
    return G.n


def size(G: Graph) -> int:
    return G.num_edges()


def min_degree(G: Graph) -> int:
    if G.n == 0:
        raise ValueError("minimum degree of the graph with no vertices is undefined")
    return min(G.degrees())


def _components_in(G: Graph, mask: int) -> int:
    count = 0
    while mask:
        comp = frontier = mask & -mask
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = G.rows[low.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        mask &= ~comp
        count += 1
    return count


def components(G: Graph) -> int:
    return _components_in(G, G.full_mask)


def is_connected(G: Graph) -> bool:
    return components(G) <= 1


def is_complete(G: Graph) -> bool:
    return G.num_edges() == G.n * (G.n - 1) // 2


def local_connectivity(G: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent s, t.

    Unit-capacity augmenting paths on the split-vertex network: vertex v
    becomes an arc v_in -> v_out of capacity 1 (unbounded for s and t).
    Stops early once ``limit`` paths are found.
    """
    if s == t or G.has_edge(s, t):
        raise ValueError("local connectivity needs two distinct non-adjacent vertices")
    n = G.n
    # node 2v = v_in, 2v+1 = v_out; flow[(a, b)] on arcs
    flow: dict[tuple[int, int], int] = {}

    def cap(a: int, b: int) -> int:
        if a // 2 == b // 2:
            if a % 2 == 0 and b == a + 1:
                return n if a // 2 in (s, t) else 1
            return 0
        if a % 2 == 1 and b % 2 == 0 and G.has_edge(a // 2, b // 2):
            return n
        return 0

    def residual(a: int, b: int) -> int:
        return cap(a, b) - flow.get((a, b), 0) + flow.get((b, a), 0)

    def arcs(a: int):
        v = a // 2
        if a % 2 == 0:
            yield a + 1
            for u in _bits(G.rows[v]):
                yield 2 * u + 1
        else:
            yield a - 1
            for u in _bits(G.rows[v]):
                yield 2 * u

    source, sink = 2 * s + 1, 2 * t
    total = 0
    while limit is None or total < limit:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in arcs(a):
                if b not in parent and residual(a, b) > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            back = flow.get((b, a), 0)
            if back:
                flow[(b, a)] = back - 1
            else:
                flow[(a, b)] = flow.get((a, b), 0) + 1
            b = a
        total += 1
    return total


def vertex_connectivity(G: Graph) -> int:
    """kappa: fewest vertices whose removal disconnects G or leaves K_1.

    K_n gives n - 1 (and K_1 gives 0); disconnected graphs give 0.  Otherwise
    the minimum local connectivity over non-adjacent pairs, where only pairs
    whose first vertex is among the first kappa + 1 need checking.
    """
    n = G.n
    if n == 0:
        raise ValueError("connectivity of the graph with no vertices is undefined")
    if is_complete(G):
        return n - 1
    if not is_connected(G):
        return 0
    best = min_degree(G)
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if not G.has_edge(i, j):
                best = min(best, local_connectivity(G, i, j, limit=best))
        i += 1
    return best


def _clique_cover_bound(G: Graph, cand: int) -> int:
    """Size of a greedy clique cover of G[cand]; an upper bound on alpha."""
    cliques = 0
    while cand:
        low = cand & -cand
        clique = low
        common = G.rows[low.bit_length() - 1] & cand
        while common:
            b = common & -common
            clique |= b
            common &= G.rows[b.bit_length() - 1]
        cand &= ~clique
        cliques += 1
    return cliques


def independence_number(G: Graph) -> int:
    """Exact alpha by branch and bound.

    Branches on a maximum-degree vertex of the candidate set (take it or drop
    it); a greedy clique cover bounds what the remaining candidates can add.
    """
    if G.n == 0:
        raise ValueError("independence number of the graph with no vertices is undefined")
    rows = G.rows
    best = 0

    def grow(cand: int, taken: int) -> None:
        nonlocal best
        while True:
            if not cand:
                best = max(best, taken)
                return
            # vertices isolated inside cand are always taken
            top, top_deg, isolated = -1, -1, 0
            for v in _bits(cand):
                d = (rows[v] & cand).bit_count()
                if d == 0:
                    isolated |= 1 << v
                elif d > top_deg:
                    top, top_deg = v, d
            if isolated:
                taken += isolated.bit_count()
                cand &= ~isolated
                continue
            break
        if taken + _clique_cover_bound(G, cand) <= best:
            return
        grow(cand & ~rows[top] & ~(1 << top), taken + 1)
        grow(cand & ~(1 << top), taken)

    grow(G.full_mask, 0)
    return best


@lru_cache(maxsize=256)
def toughness(G: Graph) -> Toughness:
    """Exact toughness by enumerating separators; infinite for K_n."""
    if G.n == 0:
        raise ValueError("toughness of the graph with no vertices is undefined")
    if G.n > TOUGHNESS_MAX_N:
        raise ValueError(f"exhaustive toughness is limited to n <= {TOUGHNESS_MAX_N}")
    if is_complete(G):
        return Toughness(None)
    adj = np.array(G.rows, dtype=np.int64)
    num, den = _kernels.min_toughness_ratio(adj, G.n)
    return Toughness(Fraction(int(num), int(den)))


def is_t_tough(G: Graph, t) -> bool:
    """``|S| >= t * s(G - S)`` for every S with s(G - S) > 1 (``t`` exact)."""
    return toughness(G).at_least(Fraction(t))


def invariant_record(G: Graph) -> InvariantRecord:
    return InvariantRecord(
        n=G.n,
        q=size(G),
        delta=min_degree(G),
        kappa=vertex_connectivity(G),
        alpha=independence_number(G),
        tau=toughness(G),
        connected=is_connected(G),
    )
