"""Constructors for the extremal graph families used in sharpness checks.

Notation: ``mK_a + K_b`` is the join of m disjoint copies of K_a with K_b.
Where a construction says "any k vertices" the lowest labels are used; the
isomorphism class does not depend on the choice.
"""

from __future__ import annotations

import inspect
from dataclasses import dataclass, field

from .graph import Graph, complete, disjoint_union, empty_graph, from_edges, join

__all__ = [
    "FamilySpec",
    "FAMILIES",
    "build",
    "mka_plus_kb",
    "hub",
    "k1_plus_2kd",
    "h_graph",
    "l_graph",
    "g_n",
    "g_star",
    "petersen",
    "t15_graph",
]


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def mka_plus_kb(m: int, a: int, b: int) -> Graph:
    """``mK_a + K_b``: m disjoint cliques K_a, each joined to all of K_b."""
    _require(m >= 1 and a >= 1 and b >= 0, f"mK_a+K_b needs m>=1, a>=1, b>=0; got m={m}, a={a}, b={b}")
    return join(disjoint_union(*[complete(a)] * m), complete(b))


def hub(kappa: int, delta: int) -> Graph:
    """``(kappa+1)K_{delta-kappa+1} + K_kappa``.

    Minimum degree delta and connectivity kappa; its longest cycles use all
    kappa hub vertices and kappa of the cliques, so c = kappa(delta-kappa+2).
    """
    _require(1 <= kappa <= delta, f"hub family needs 1 <= kappa <= delta; got kappa={kappa}, delta={delta}")
    return mka_plus_kb(kappa + 1, delta - kappa + 1, kappa)


def k1_plus_2kd(delta: int) -> Graph:
    """Two copies of K_{delta+1} sharing one vertex."""
    _require(delta >= 1, f"K_1+2K_delta needs delta >= 1; got {delta}")
    return mka_plus_kb(2, delta, 1)


def h_graph(a: int, b: int, t: int, k: int) -> Graph:
    """``H(a, b, t, k)``.

    Start from ``tK_a + K̄_t`` (vertices ``0..ta-1`` in the cliques, then the
    t independent vertices), add a new clique K_b and join the first k
    independent vertices to all of it.
    """
    _require(a >= 1 and b >= 1 and t >= 1 and 0 <= k <= t,
             f"H(a,b,t,k) needs a,b,t >= 1 and 0 <= k <= t; got {(a, b, t, k)}")
    base = join(disjoint_union(*[complete(a)] * t), empty_graph(t))
    g = disjoint_union(base, complete(b))
    first_ind = t * a
    first_b = t * a + t
    extra = [(first_ind + i, first_b + j) for i in range(k) for j in range(b)]
    return from_edges(g.n, g.edges() + extra)


def l_graph(delta: int) -> Graph:
    """``L_delta``: ``3K_delta + K_1`` plus a triangle on one vertex per K_delta."""
    _require(delta >= 1, f"L_delta needs delta >= 1; got {delta}")
    g = mka_plus_kb(3, delta, 1)
    tri = [(0, delta), (delta, 2 * delta), (0, 2 * delta)]
    return from_edges(g.n, g.edges() + tri)


def _g_parts(n: int, delta: int, clique: bool) -> Graph:
    _require(n % 2 == 1 and n >= 15, f"G_n needs odd n >= 15; got n={n}")
    _require(3 * delta >= n and 2 * delta <= n - 5,
             f"G_n needs n/3 <= delta <= (n-5)/2; got n={n}, delta={delta}")
    ind = (n - 1) // 2
    tail = (n + 1) // 2 - delta
    # labels: independent part, then the delta hub vertices, then the tail clique
    hub0, tail0 = ind, ind + delta
    edges = []
    for h in range(hub0, hub0 + delta):
        for u in range(n):
            if u == h:
                continue
            if not clique and hub0 <= u < hub0 + delta:
                continue
            edges.append((h, u))
    edges += [(u, v) for u in range(tail0, n) for v in range(u + 1, n)]
    edges += [(tail0 + i, i) for i in range(tail)]
    return from_edges(n, edges)


def g_n(n: int, delta: int) -> Graph:
    """``G_n``: K̄_{(n-1)/2}, K_delta and K_{(n+1)/2-delta} with K_delta joined
    to everything and a matching from the last clique into the independent set.
    1-tough and not hamiltonian."""
    return _g_parts(n, delta, clique=True)


def g_star(n: int) -> Graph:
    """``G*_n``: G_n with delta = (n-5)/2 and the K_delta replaced by K̄_delta."""
    _require(n % 2 == 1 and n >= 15, f"G*_n needs odd n >= 15; got n={n}")
    return _g_parts(n, (n - 5) // 2, clique=False)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


def t15_graph() -> Graph:
    """Hexagon v1..v6 with the path v1 v7 v8 v4 (labels 0..7 for v1..v8)."""
    return from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 3)])


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus integer parameters, e.g. ``hub(kappa=2, delta=4)``."""

    family: str
    params: dict = field(default_factory=dict)

    def build(self) -> Graph:
        return build(self.family, **self.params)

    def label(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({inner})"


FAMILIES = {
    "mka_plus_kb": mka_plus_kb,
    "hub": hub,
    "k1_plus_2kd": k1_plus_2kd,
    "h": h_graph,
    "l": l_graph,
    "g_n": g_n,
    "g_star": g_star,
    "petersen": petersen,
    "t15": t15_graph,
}


def family_params(name: str) -> list[str]:
    return list(inspect.signature(FAMILIES[name]).parameters)


def build(family: str, **params: int) -> Graph:
    try:
        ctor = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    expected = family_params(family)
    if sorted(params) != sorted(expected):
        raise ValueError(f"family {family!r} takes parameters {expected}, got {sorted(params)}")
    return ctor(**params)
