"""Labeled-graph isomorphism tools for 2-graphs on few vertices.

Deduplication works in two stages: an isomorphism-invariant refinement key
(degree/triangle seeded 1-WL colors) buckets candidates, and an exact
backtracking matcher separates true classes inside a bucket.  Slow but
trivially correct, which is what the desk-scale scans need.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import InvalidParametersError
from .hypergraph import Hypergraph

AdjMasks = tuple[int, ...]


def adjacency_masks(graph: Hypergraph) -> AdjMasks:
    if graph.r != 2:
        raise InvalidParametersError(f"adjacency masks need a 2-graph, got r={graph.r}")
    adj = [0] * graph.n
    for u, v in graph.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(adj)


def graph_from_masks(n: int, adj: Sequence[int]) -> Hypergraph:
    edges = []
    for u in range(n):
        m = adj[u] >> (u + 1)
        v = u + 1
        while m:
            if m & 1:
                edges.append((u, v))
            m >>= 1
            v += 1
    return Hypergraph(n, 2, edges)


def refinement_colors(n: int, adj: Sequence[int]) -> list[int]:
    """Stable 1-WL vertex colors seeded with (degree, triangle count)."""
    tri = [0] * n
    for u in range(n):
        m = adj[u]
        while m:
            b = m & (-m)
            v = b.bit_length() - 1
            m ^= b
            if v > u:
                t = bin(adj[u] & adj[v]).count("1")
                tri[u] += t
                tri[v] += t
    seed = [(bin(adj[v]).count("1"), tri[v]) for v in range(n)]
    rank = {c: i for i, c in enumerate(sorted(set(seed)))}
    col = [rank[c] for c in seed]
    while True:
        classes: dict[int, int] = {}
        for v in range(n):
            classes[col[v]] = classes.get(col[v], 0) | (1 << v)
        masks = [classes[c] for c in sorted(classes)]
        sig = [
            (col[v], tuple(bin(adj[v] & m).count("1") for m in masks)) for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[s] for s in sig]
        if new == col:
            return col
        col = new


def invariant_key(n: int, adj: Sequence[int]) -> tuple:
    """Isomorphism-invariant bucket key (equal for isomorphic graphs)."""
    col = refinement_colors(n, adj)
    classes: dict[int, int] = {}
    for v in range(n):
        classes[col[v]] = classes.get(col[v], 0) | (1 << v)
    masks = [classes[c] for c in sorted(classes)]
    profile = tuple(
        sorted((col[v], tuple(bin(adj[v] & m).count("1") for m in masks)) for v in range(n))
    )
    return (n, profile)


def masks_isomorphic(n: int, a1: Sequence[int], a2: Sequence[int]) -> bool:
    """Exact isomorphism test between two n-vertex bitmask adjacencies."""
    c1 = refinement_colors(n, a1)
    c2 = refinement_colors(n, a2)
    if sorted(c1) != sorted(c2):
        return False
    order = sorted(range(n), key=lambda v: (c1[v], -bin(a1[v]).count("1"), v))
    cands = [[u for u in range(n) if c2[u] == c1[v]] for v in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def bt(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        av = a1[v]
        for u in cands[v]:
            if used[u]:
                continue
            ok = True
            for j in range(i):
                w = order[j]
                if ((av >> w) & 1) != ((a2[u] >> mapping[w]) & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = u
                used[u] = True
                if bt(i + 1):
                    return True
                mapping[v] = -1
                used[u] = False
        return False

    return bt(0)


def graphs_isomorphic(g1: Hypergraph, g2: Hypergraph) -> bool:
    if g1.r != 2 or g2.r != 2:
        raise InvalidParametersError("isomorphism test implemented for 2-graphs only")
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    return masks_isomorphic(g1.n, adjacency_masks(g1), adjacency_masks(g2))


class IsoClassStore:
    """Accumulates graphs up to isomorphism in first-arrival order."""

    def __init__(self, n: int):
        self.n = n
        self.buckets: dict[tuple, list[tuple[AdjMasks, int]]] = {}
        self.members: list[AdjMasks] = []

    def add(self, adj: AdjMasks) -> int | None:
        """Store a new class representative; returns its index, or None if
        an isomorphic member was already present."""
        key = invariant_key(self.n, adj)
        bucket = self.buckets.setdefault(key, [])
        for other, _ in bucket:
            if masks_isomorphic(self.n, adj, other):
                return None
        idx = len(self.members)
        self.members.append(adj)
        bucket.append((adj, idx))
        return idx


_LEVEL_CACHE: dict[int, list[AdjMasks]] = {1: [(0,)]}


def nonisomorphic_graphs(max_n: int) -> dict[int, list[AdjMasks]]:
    """One adjacency per isomorphism class, for every vertex count 1..max_n.

    Level n is grown from level n-1 by attaching a new last vertex with every
    possible neighborhood, then deduplicating.  Representatives are the first
    arrival in (parent index, neighborhood mask) order, so the output is
    deterministic; computed levels are cached for the process lifetime.
    """
    if max_n < 1:
        raise InvalidParametersError(f"need max_n >= 1, got {max_n}")
    for n in range(2, max_n + 1):
        if n in _LEVEL_CACHE:
            continue
        store = IsoClassStore(n)
        for parent in _LEVEL_CACHE[n - 1]:
            for mask in range(1 << (n - 1)):
                child = tuple(
                    parent[v] | (((mask >> v) & 1) << (n - 1)) for v in range(n - 1)
                ) + (mask,)
                store.add(child)
        _LEVEL_CACHE[n] = store.members
    return {n: _LEVEL_CACHE[n] for n in range(1, max_n + 1)}


def nonisomorphic_children(parents: Iterable[AdjMasks], n: int) -> Iterator[tuple[AdjMasks, int]]:
    """Stream (child adjacency, parent index * 2^(n-1) + mask) without dedupe."""
    for pi, parent in enumerate(parents):
        for mask in range(1 << (n - 1)):
            child = tuple(
                parent[v] | (((mask >> v) & 1) << (n - 1)) for v in range(n - 1)
            ) + (mask,)
            yield child, (pi << (n - 1)) | mask
