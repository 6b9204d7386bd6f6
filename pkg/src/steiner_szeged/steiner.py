"""Exact Steiner distances.

Two independent routes:

* :func:`steiner_dp`, a subset dynamic program over (terminal mask,
  attachment vertex) states, used for every index computation;
* :func:`steiner_distance_oracle`, which searches for the smallest
  connected induced vertex superset and exists only to cross-check the DP.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .graph_core import CapError, Graph, GraphError, induces_connected, require_connected

TABLE_MAX_ORDER = 16
TABLE_MAX_K = 8
TABLE_MAX_CELLS = 1 << 24


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Shortest-path lengths (edge counts) as an ``n x n`` integer matrix."""
    require_connected(g)
    if g.m == 0:
        return np.zeros((g.n, g.n), dtype=np.int64)
    rows, cols = zip(*g.edges)
    a = csr_matrix((np.ones(g.m), (rows, cols)), shape=(g.n, g.n))
    d = shortest_path(a, directed=False, unweighted=True)
    return d.astype(np.int64)


def _subset_mask(g: Graph, S) -> int:
    m = S if isinstance(S, int) else mask_of(S)
    if m == 0:
        raise GraphError("Steiner distance of the empty set is undefined")
    if m >> g.n:
        raise GraphError(f"subset contains a vertex outside 0..{g.n - 1}")
    return m


def steiner_dp(g: Graph, k_max: int, apsp: np.ndarray | None = None) -> np.ndarray:
    """Steiner distances of every vertex subset of size ``<= k_max``.

    Returns an array indexed by bit mask; entries for uncovered masks (and
    the empty mask) are ``-1``.

    ``best[S, v]`` is the size of a smallest tree spanning ``S + {v}``. A
    tree with ``|S| >= 2`` either branches at ``v`` (split ``S`` in two at
    ``v``) or reaches ``v`` by a shortest path from a branch vertex, hence
    the split step followed by one relaxation through ``apsp``.
    """
    n = g.n
    k_max = min(k_max, n)
    if apsp is None:
        apsp = all_pairs_distances(g)
    size = 1 << n
    if size * n > TABLE_MAX_CELLS:
        raise CapError(f"Steiner table for n={n} needs {size * n} cells (> {TABLE_MAX_CELLS})")
    inf = np.int32(4 * n + 4)
    best = np.full((size, n), inf, dtype=np.int32)
    out = np.full(size, -1, dtype=np.int32)
    for t in range(n):
        best[1 << t] = apsp[t]
        out[1 << t] = 0
    d32 = apsp.astype(np.int32)
    for size_s in range(2, k_max + 1):
        for combo in itertools.combinations(range(n), size_s):
            S = mask_of(combo)
            low = S & -S
            rest = S ^ low
            # splits (A, S - A) with the lowest terminal always in A
            subs = []
            sub = rest
            while True:
                a = sub | low
                if a != S:
                    subs.append(a)
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            subs_arr = np.fromiter(subs, dtype=np.int64, count=len(subs))
            merged = (best[subs_arr] + best[S ^ subs_arr]).min(axis=0)
            best[S] = (merged[:, None] + d32).min(axis=0)
            out[S] = best[S, combo[0]]
    return out


def steiner_distance(g: Graph, S) -> int:
    """Size of a smallest subtree of ``g`` containing the vertex set ``S``.

    ``S`` is an iterable of vertices or a bit mask.
    """
    require_connected(g)
    m = _subset_mask(g, S)
    verts = vertices_of(m)
    if len(verts) == 1:
        return 0
    apsp = all_pairs_distances(g)
    if len(verts) == 2:
        return int(apsp[verts[0], verts[1]])
    # DP over the subsets of S only: relabel S's members as terminals 0..|S|-1
    t = len(verts)
    inf = 4 * g.n + 4
    best = np.full((1 << t, g.n), inf, dtype=np.int64)
    for i, v in enumerate(verts):
        best[1 << i] = apsp[v]
    for T in range(1, 1 << t):
        if T & (T - 1) == 0:
            continue
        low = T & -T
        rest = T ^ low
        acc = np.full(g.n, inf, dtype=np.int64)
        sub = rest
        while True:
            a = sub | low
            if a != T:
                np.minimum(acc, best[a] + best[T ^ a], out=acc)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[T] = (acc[:, None] + apsp).min(axis=0)
    return int(best[(1 << t) - 1, verts[0]])


@lru_cache(maxsize=256)
def _connected_masks(g: Graph) -> frozenset[int]:
    return frozenset(m for m in range(1, 1 << g.n) if induces_connected(g, m))


def steiner_distance_oracle(g: Graph, S) -> int:
    """Brute-force Steiner distance.

    For ``l = |S| - 1, |S|, ...`` look for a vertex superset ``W`` of ``S`` with
    ``|W| = l + 1`` whose induced subgraph is connected; the first
    ``l`` that works is the answer (a spanning tree of ``g[W]`` has ``l`` edges).
    """
    require_connected(g)
    m = _subset_mask(g, S)
    connected = _connected_masks(g)
    outside = vertices_of(g.full_mask & ~m)
    for extra in range(len(outside) + 1):
        for add in itertools.combinations(outside, extra):
            if (m | mask_of(add)) in connected:
                return popcount(m) + extra - 1
    raise AssertionError("a connected graph always connects its full vertex set")


@dataclass(frozen=True, eq=False)
class SteinerTable:
    """Steiner distances for all subsets of size ``2..k_max``, keyed by bit mask."""

    graph: Graph
    k_max: int
    dist: np.ndarray
    apsp: np.ndarray

    def __getitem__(self, mask: int) -> int:
        d = int(self.dist[mask])
        if d < 0:
            raise KeyError(f"subset mask {mask:#x} not covered by this table")
        return d

    def distance(self, S) -> int:
        return self[S if isinstance(S, int) else mask_of(S)]

    def items(self, size: int | None = None):
        """``(mask, distance)`` pairs in increasing mask order."""
        for mask in np.flatnonzero(self.dist >= 0):
            mask = int(mask)
            if size is None or popcount(mask) == size:
                yield mask, int(self.dist[mask])


def build_table(g: Graph, k: int) -> SteinerTable:
    require_connected(g)
    if g.n > TABLE_MAX_ORDER:
        raise CapError(f"Steiner tables are capped at n <= {TABLE_MAX_ORDER}")
    if k > TABLE_MAX_K:
        raise CapError(f"Steiner tables are capped at subset size k <= {TABLE_MAX_K}")
    if not 2 <= k <= g.n - 1:
        raise GraphError(f"subset size k={k} outside 2..{g.n - 1}")
    apsp = all_pairs_distances(g)
    dist = steiner_dp(g, k, apsp)
    return SteinerTable(g, k, dist, apsp)


def steiner_wiener(g: Graph, k: int) -> int:
    """Sum of Steiner distances over all ``k``-subsets of vertices."""
    require_connected(g)
    if not 2 <= k <= g.n:
        raise GraphError(f"subset size k={k} outside 2..{g.n}")
    if g.n > TABLE_MAX_ORDER:
        raise CapError(f"Steiner Wiener index is capped at n <= {TABLE_MAX_ORDER}")
    dist = steiner_dp(g, k)
    return sum(int(dist[mask_of(c)]) for c in itertools.combinations(range(g.n), k))
