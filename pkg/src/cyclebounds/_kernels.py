"""Numba kernels over the 2**n vertex subsets of a small graph.

Subsets are indexed by their bitmask.  Adjacency comes in as an int64 array
of neighbour masks.
"""

import numba as nb
import numpy as np


@nb.njit(cache=True)
def _lowbit_index(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@nb.njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@nb.njit(cache=True)
def subset_tables(adj, n):
    """Hamilton-path endpoint tables for every induced subgraph.

    ``rooted[S]``: endpoints of Hamilton paths of G[S] that start at the
    lowest vertex of S.  ``free[S]``: endpoints of any Hamilton path of G[S].
    ``cyc[S]``: |S| if G[S] has a spanning cycle (vertices and edges count
    as cycles of length 1 and 2), else 0.
    """
    size = 1 << n
    rooted = np.zeros(size, dtype=np.int32)
    free = np.zeros(size, dtype=np.int32)
    cyc = np.zeros(size, dtype=np.int8)
    for S in range(1, size):
        low = S & -S
        if S == low:
            rooted[S] = S
            free[S] = S
            cyc[S] = 1
            continue
        r = 0
        f = 0
        rest = S
        while rest:
            b = rest & -rest
            rest ^= b
            v = _lowbit_index(b)
            prev = S ^ b
            if free[prev] & adj[v]:
                f |= b
            if b != low and rooted[prev] & adj[v]:
                r |= b
        rooted[S] = r
        free[S] = f
        k = _popcount(S)
        lv = _lowbit_index(low)
        if k == 2:
            if r:
                cyc[S] = 2
        elif r & adj[lv]:
            cyc[S] = k
    return rooted, free, cyc


@nb.njit(cache=True)
def best_within(cyc, free, n):
    """Largest spanning-cycle / Hamilton-path vertex count inside each subset."""
    size = 1 << n
    cw = np.zeros(size, dtype=np.int8)
    pw = np.zeros(size, dtype=np.int8)
    for S in range(1, size):
        c = cyc[S]
        p = 0
        if free[S]:
            p = _popcount(S)
        rest = S
        while rest:
            b = rest & -rest
            rest ^= b
            sub = S ^ b
            if cw[sub] > c:
                c = cw[sub]
            if pw[sub] > p:
                p = pw[sub]
        cw[S] = c
        pw[S] = p
    return cw, pw


@nb.njit(cache=True)
def independent_table(adj, n):
    size = 1 << n
    ind = np.zeros(size, dtype=np.bool_)
    ind[0] = True
    for S in range(1, size):
        low = S & -S
        v = _lowbit_index(low)
        ind[S] = ind[S ^ low] and (adj[v] & S) == 0
    return ind


@nb.njit(cache=True)
def count_components(adj, mask):
    count = 0
    left = mask
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            nbrs = adj[_lowbit_index(b)] & mask & ~comp
            comp |= nbrs
            frontier |= nbrs
        left &= ~comp
        count += 1
    return count


@nb.njit(cache=True)
def min_toughness_ratio(adj, n):
    """Exact min of |S| / s(G - S) over S with s(G - S) >= 2.

    Returns (num, den); (-1, 0) when no such S exists (complete graphs).
    Subsets are skipped when |S| / (n - |S|), a lower bound on their ratio,
    cannot beat the current best.
    """
    full = (1 << n) - 1
    best_num = -1
    best_den = 0
    for S in range(0, full):
        k = _popcount(S)
        rest = n - k
        if rest < 2:
            continue
        if best_num >= 0 and k * best_den >= best_num * rest:
            continue
        s = count_components(adj, full ^ S)
        if s < 2:
            continue
        if best_num < 0 or k * best_den < best_num * s:
            best_num = k
            best_den = s
    return best_num, best_den
