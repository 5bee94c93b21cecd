"""Longest cycles and paths, residual parameters and domination predicates.

Cycle lengths count vertices.  A single vertex is a cycle of length 1 and an
edge a cycle of length 2, so every nonempty graph has circumference >= 1 and
K_1, K_2 are hamiltonian.  For a cycle C, ``p_bar`` is the number of EDGES of
a longest path in G - V(C) (-1 when nothing is left) and ``c_bar`` the number
of VERTICES of a longest cycle there (0 when nothing is left).

Up to ``DP_MAX_N`` vertices everything is read off one table of Hamilton-path
endpoints over all vertex subsets; larger graphs fall back to depth-first
search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .graph import Graph, _bits, induced_subgraph, vertex_mask

__all__ = [
    "DP_MAX_N",
    "DEFAULT_CYCLE_CAP",
    "CycleCertificate",
    "CycleList",
    "ResidualParams",
    "Undecided",
    "circumference",
    "cycle_certificate",
    "is_hamiltonian",
    "longest_path_edges",
    "all_longest_cycles",
    "has_dominating_cycle",
    "residual_params",
    "is_dominating",
    "is_cd",
    "is_pd",
]

DP_MAX_N = 24
DEFAULT_CYCLE_CAP = 10**6


class Undecided(RuntimeError):
    """Raised when a search limit stops a computation from being exact."""


@dataclass(frozen=True)
class CycleCertificate:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def validate(self, G: Graph) -> None:
        vs = self.vertices
        if not vs:
            raise ValueError("a cycle has at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in cycle {vs}")
        if any(not 0 <= v < G.n for v in vs):
            raise ValueError(f"cycle {vs} leaves the vertex range")
        k = len(vs)
        steps = [(vs[i], vs[i + 1]) for i in range(k - 1)]
        if k >= 3:
            steps.append((vs[-1], vs[0]))
        for u, v in steps:
            if not G.has_edge(u, v):
                raise ValueError(f"cycle {vs} uses missing edge {u}{v}")

    def is_valid(self, G: Graph) -> bool:
        try:
            self.validate(G)
        except ValueError:
            return False
        return True


@dataclass(frozen=True)
class CycleList:
    cycles: list[CycleCertificate]
    truncated: bool

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


@dataclass(frozen=True)
class ResidualParams:
    p_bar: int
    c_bar: int


class _CycleTable:
    """Subset tables for one graph with n <= DP_MAX_N."""

    def __init__(self, G: Graph):
        self.G = G
        n = G.n
        adj = np.array(G.rows, dtype=np.int64)
        self.rooted, _free, self.cyc = _kernels.subset_tables(adj, n)
        self.cycle_within, self.path_within = _kernels.best_within(self.cyc, _free, n)
        self._adj = adj
        self._ind = None

    @property
    def circumference(self) -> int:
        return int(self.cycle_within[self.G.full_mask])

    def cycle_masks(self, length: int) -> np.ndarray:
        return np.flatnonzero(self.cyc == length)

    def longest_cycle_in(self, mask: int) -> int:
        return int(self.cycle_within[mask])

    def longest_path_in(self, mask: int) -> int:
        """Vertex count of a longest path inside ``mask`` (0 if empty)."""
        return int(self.path_within[mask])

    def independent(self) -> np.ndarray:
        if self._ind is None:
            self._ind = _kernels.independent_table(self._adj, self.G.n)
        return self._ind

    def certificate(self, mask: int) -> CycleCertificate:
        """Explicit cycle on exactly the vertices of ``mask``."""
        if not self.cyc[mask]:
            raise ValueError(f"no spanning cycle on vertex set {mask:#x}")
        rows = self.G.rows
        low = mask & -mask
        start = low.bit_length() - 1
        if mask == low:
            return CycleCertificate((start,))
        need = rows[start] if mask.bit_count() >= 3 else low ^ mask
        cur_mask = mask
        ends = int(self.rooted[cur_mask]) & need
        v = (ends & -ends).bit_length() - 1
        seq = [v]
        while cur_mask != low | (1 << v):
            cur_mask ^= 1 << v
            ends = int(self.rooted[cur_mask]) & rows[v]
            v = (ends & -ends).bit_length() - 1
            seq.append(v)
        seq.append(start)
        return CycleCertificate(tuple(reversed(seq)))


@lru_cache(maxsize=16)
def _table(G: Graph) -> _CycleTable:
    return _CycleTable(G)


# --------------------------------------------------------------------------
# depth-first fallback for n > DP_MAX_N


def _dfs_cycles(G: Graph, cap: int):
    """Longest cycle length and the vertex sets attaining it (up to ``cap``).

    Cycles are rooted at their lowest vertex and extended through higher
    vertices only.  A branch is pruned when the vertices still reachable from
    its end cannot lift it to the best length found so far.
    """
    rows = G.rows
    truncated = False
    if G.num_edges():
        best, found = 2, {1 << u | 1 << v for u, v in G.edges()}
    else:
        best, found = 1, {1 << v for v in range(G.n)}

    def reach(v: int, allowed: int) -> int:
        comp = frontier = 1 << v
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = rows[low.bit_length() - 1] & allowed & ~comp
            comp |= new
            frontier |= new
        return comp

    def extend(root: int, v: int, used: int, length: int, allowed: int) -> None:
        nonlocal best, found, truncated
        if length >= 3 and rows[v] >> root & 1:
            if length > best:
                best, found, truncated = length, {used}, False
            elif length == best and not truncated:
                if len(found) >= cap:
                    truncated = True
                else:
                    found.add(used)
        free = allowed & ~used
        if length + (reach(v, free | (1 << v)).bit_count() - 1) < best:
            return
        for u in _bits(rows[v] & free):
            extend(root, u, used | 1 << u, length + 1, allowed)

    for root in range(G.n):
        allowed = G.full_mask & ~((1 << root) - 1)
        if (allowed.bit_count()) < best:
            break
        extend(root, root, 1 << root, 1, allowed)
    return best, sorted(found), truncated


def _dfs_longest_path(G: Graph) -> int:
    """Vertex count of a longest path (0 for the empty graph)."""
    rows = G.rows
    best = 1 if G.n else 0

    def extend(v: int, used: int, length: int) -> None:
        nonlocal best
        best = max(best, length)
        if best == G.n:
            return
        for u in _bits(rows[v] & ~used):
            extend(u, used | 1 << u, length + 1)

    for v in range(G.n):
        extend(v, 1 << v, 1)
        if best == G.n:
            break
    return best


def _dfs_certificate(G: Graph, mask: int) -> CycleCertificate:
    H, labels = induced_subgraph(G, mask)
    if H.n <= DP_MAX_N:
        cert = _table(H).certificate(H.full_mask)
        return CycleCertificate(tuple(labels[v] for v in cert.vertices))
    rows = H.rows
    k = H.n

    def extend(path: list[int], used: int):
        v = path[-1]
        if len(path) == k:
            return path if k <= 2 or rows[v] & 1 else None
        for u in _bits(rows[v] & ~used):
            path.append(u)
            res = extend(path, used | 1 << u)
            if res:
                return res
            path.pop()
        return None

    seq = extend([0], 1)
    if seq is None:
        raise ValueError(f"no spanning cycle on vertex set {mask:#x}")
    return CycleCertificate(tuple(labels[v] for v in seq))


# --------------------------------------------------------------------------
# public API


def _longest_cycle_len_in(G: Graph, mask: int) -> int:
    if not mask:
        return 0
    if G.n <= DP_MAX_N:
        return _table(G).longest_cycle_in(mask)
    H, _ = induced_subgraph(G, mask)
    if H.n <= DP_MAX_N:
        return _table(H).circumference
    return _dfs_cycles(H, 1)[0]


def _longest_path_vertices_in(G: Graph, mask: int) -> int:
    if not mask:
        return 0
    if G.n <= DP_MAX_N:
        return _table(G).longest_path_in(mask)
    H, _ = induced_subgraph(G, mask)
    if H.n <= DP_MAX_N:
        return _table(H).longest_path_in(H.full_mask)
    return _dfs_longest_path(H)


def circumference(G: Graph) -> tuple[int, CycleCertificate]:
    """Length of a longest cycle together with a cycle attaining it."""
    if G.n == 0:
        raise ValueError("circumference of the graph with no vertices is undefined")
    if G.n <= DP_MAX_N:
        table = _table(G)
        c = table.circumference
        mask = int(table.cycle_masks(c)[0])
        return c, table.certificate(mask)
    c, masks, _ = _dfs_cycles(G, 1)
    return c, _dfs_certificate(G, masks[0])


def cycle_certificate(G: Graph, mask: int) -> CycleCertificate:
    """Explicit cycle through exactly the vertices of ``mask``."""
    mask = vertex_mask(G, mask)
    if G.n <= DP_MAX_N:
        return _table(G).certificate(mask)
    return _dfs_certificate(G, mask)


def is_hamiltonian(G: Graph) -> bool:
    if G.n == 0:
        raise ValueError("hamiltonicity of the graph with no vertices is undefined")
    if G.n <= DP_MAX_N:
        return _table(G).circumference == G.n
    return circumference(G)[0] == G.n


def longest_path_edges(G: Graph) -> int:
    """Edges on a longest path; -1 for the graph with no vertices."""
    return _longest_path_vertices_in(G, G.full_mask) - 1


def all_longest_cycles(G: Graph, cap: int = DEFAULT_CYCLE_CAP) -> CycleList:
    """Every longest cycle, one certificate per distinct vertex set.

    At most ``cap`` vertex sets are returned; ``truncated`` records whether
    more exist.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if G.n == 0:
        raise ValueError("longest cycles of the graph with no vertices are undefined")
    if G.n <= DP_MAX_N:
        table = _table(G)
        masks = table.cycle_masks(table.circumference)
        truncated = len(masks) > cap
        return CycleList([table.certificate(int(m)) for m in masks[:cap]], truncated)
    _, masks, truncated = _dfs_cycles(G, cap)
    return CycleList([_dfs_certificate(G, m) for m in masks], truncated)


def longest_cycle_masks(G: Graph, cap: int = DEFAULT_CYCLE_CAP) -> tuple[list[int], bool]:
    """Vertex-set masks of all longest cycles (cheaper than certificates)."""
    if G.n <= DP_MAX_N:
        table = _table(G)
        masks = table.cycle_masks(table.circumference)
        return [int(m) for m in masks[:cap]], len(masks) > cap
    _, masks, truncated = _dfs_cycles(G, cap)
    return masks, truncated


def has_dominating_cycle(G: Graph) -> bool:
    """Whether some cycle (of any length) leaves an edgeless residual."""
    if G.n == 0:
        return False
    if G.n <= DP_MAX_N:
        table = _table(G)
        ind = table.independent()
        complement_idx = G.full_mask ^ np.arange(1 << G.n)
        return bool(np.any((table.cyc > 0) & ind[complement_idx]))
    masks, _ = longest_cycle_masks(G)
    if any(_residual_mask_edgeless(G, m) for m in masks):
        return True
    found = False

    def visit(root: int, v: int, used: int, length: int) -> None:
        nonlocal found
        if found:
            return
        closes = length <= 2 or G.rows[v] >> root & 1
        if closes and _residual_mask_edgeless(G, used):
            found = True
            return
        for u in _bits(G.rows[v] & ~used & ~((1 << root) - 1)):
            visit(root, u, used | 1 << u, length + 1)

    for root in range(G.n):
        visit(root, root, 1 << root, 1)
        if found:
            break
    return found


def _residual_mask_edgeless(G: Graph, cycle_mask: int) -> bool:
    rest = G.full_mask & ~cycle_mask
    return all(not (G.rows[v] & rest) for v in _bits(rest))


def _cycle_mask(G: Graph, C) -> int:
    if isinstance(C, CycleCertificate):
        C.validate(G)
        return C.mask
    cert = CycleCertificate(tuple(C))
    cert.validate(G)
    return cert.mask


def residual_params_mask(G: Graph, cycle_mask: int) -> ResidualParams:
    """Residual parameters for a cycle given by its (already valid) vertex set."""
    rest = G.full_mask & ~cycle_mask
    return ResidualParams(
        p_bar=_longest_path_vertices_in(G, rest) - 1,
        c_bar=_longest_cycle_len_in(G, rest),
    )


def residual_params(G: Graph, C) -> ResidualParams:
    """``p_bar`` (edges) and ``c_bar`` (vertices) of G - V(C)."""
    return residual_params_mask(G, _cycle_mask(G, C))


def is_dominating(G: Graph, C) -> bool:
    """Every edge of G has an endpoint on C."""
    return _residual_mask_edgeless(G, _cycle_mask(G, C))


def is_cd(G: Graph, C, lam: int) -> bool:
    """C meets every cycle of length >= ``lam`` (the QD/CD cycle notion).

    With 1- and 2-cycles counted, ``is_cd(.., 1)`` means C is a Hamilton cycle
    and ``is_cd(.., 2)`` means C is dominating.
    """
    if lam < 1:
        raise ValueError("lambda must be a positive integer")
    return residual_params(G, C).c_bar <= lam - 1


def is_pd(G: Graph, C, lam: int) -> bool:
    """C meets every path with at least ``lam`` edges."""
    if lam < 1:
        raise ValueError("lambda must be a positive integer")
    return residual_params(G, C).p_bar <= lam - 1
