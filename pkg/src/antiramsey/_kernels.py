"""Hot search kernels for the criticality scan, compiled with numba.

Everything here works on bitmask adjacency arrays (int64 per vertex) and is
deliberately free of Python objects.  The central quantity is

    minbad_k(G) = minimum number of monochromatic edges over all vertex
                  colorings with k colors,

computed by depth-first branch and bound, capped: values above ``cap`` are
reported as ``cap`` and, once the running minimum falls to ``cap - 2`` or
lower, the exact value no longer matters and the search exits coarsely.

The scan rests on the identity

    F is doubly edge-p-critical  <=>  minbad_{p-1}(F) == 2:

a coloring with two monochromatic edges yields the pair dropping the
chromatic number to p-1, while no coloring with fewer than two exists iff no
single edge removal drops it below p.  Tests cross-check this against the
literal chromatic-number implementation on every small graph.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _popcount(x: int) -> int:
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _degree_order(adj, n, order):
    for i in range(n):
        order[i] = i
    for i in range(1, n):
        key = order[i]
        kd = _popcount(adj[key])
        j = i - 1
        while j >= 0 and _popcount(adj[order[j]]) < kd:
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = key


@njit(cache=True)
def minbad_capped(adj, order, n, k, cap):
    """min(#monochromatic edges over k-colorings, cap), coarse below cap - 1.

    Exact for return values in {cap-1, cap}; any value <= cap - 2 may be
    reported as another value <= cap - 2 (the callers only split results
    into <= cap-2, == cap-1, == cap).
    """
    if n == 0:
        return 0
    best = cap
    part_masks = np.zeros(k, dtype=np.int64)
    choice = np.full(n, -1, dtype=np.int64)
    badd = np.zeros(n + 1, dtype=np.int64)
    used = np.zeros(n + 1, dtype=np.int64)
    v0 = order[0]
    part_masks[0] = 1 << v0
    choice[0] = 0
    used[1] = 1
    depth = 1
    while depth >= 1:
        if depth == n:
            if badd[depth] < best:
                best = badd[depth]
                if best <= cap - 2:
                    return best
            depth -= 1
            if depth == 0:
                break
        v = order[depth]
        c = choice[depth]
        if c >= 0:
            part_masks[c] &= ~(np.int64(1) << v)
        c += 1
        limit = used[depth] if used[depth] < k - 1 else k - 1
        advanced = False
        while c <= limit:
            extra = _popcount(adj[v] & part_masks[c])
            nb = badd[depth] + extra
            if nb < best:
                choice[depth] = c
                part_masks[c] |= np.int64(1) << v
                badd[depth + 1] = nb
                used[depth + 1] = used[depth] + 1 if c == used[depth] else used[depth]
                depth += 1
                advanced = True
                break
            c += 1
        if not advanced:
            choice[depth] = -1
            depth -= 1
    return best


@njit(cache=True)
def minbad_witness(adj, order, n, k, cap, assignment):
    """Like minbad_capped but records a minimizing coloring into assignment.

    Runs without the coarse early exit so the recorded coloring achieves the
    returned (capped) minimum.  Returns the capped minimum.
    """
    if n == 0:
        return 0
    best = cap
    part_masks = np.zeros(k, dtype=np.int64)
    choice = np.full(n, -1, dtype=np.int64)
    badd = np.zeros(n + 1, dtype=np.int64)
    used = np.zeros(n + 1, dtype=np.int64)
    v0 = order[0]
    part_masks[0] = 1 << v0
    choice[0] = 0
    used[1] = 1
    depth = 1
    if n == 1:
        assignment[v0] = 0
        return 0
    while depth >= 1:
        if depth == n:
            if badd[depth] < best:
                best = badd[depth]
                for i in range(n):
                    assignment[order[i]] = choice[i]
                if best == 0:
                    return best
            depth -= 1
        v = order[depth]
        c = choice[depth]
        if c >= 0:
            part_masks[c] &= ~(np.int64(1) << v)
        c += 1
        limit = used[depth] if used[depth] < k - 1 else k - 1
        advanced = False
        while c <= limit:
            extra = _popcount(adj[v] & part_masks[c])
            nb = badd[depth] + extra
            if nb < best:
                choice[depth] = c
                part_masks[c] |= np.int64(1) << v
                badd[depth + 1] = nb
                used[depth + 1] = used[depth] + 1 if c == used[depth] else used[depth]
                depth += 1
                advanced = True
                break
            c += 1
        if not advanced:
            choice[depth] = -1
            depth -= 1
    return best


@njit(cache=True)
def filter_children(parent_adj, n, k, keep):
    """keep[mask] = 1 iff the parent plus a last vertex with that neighborhood
    has minbad_k exactly 2 and no isolated vertex."""
    nm = 1 << (n - 1)
    adj = np.zeros(n, dtype=np.int64)
    order = np.zeros(n, dtype=np.int64)
    for mask in range(nm):
        isolated = mask == 0
        for v in range(n - 1):
            adj[v] = parent_adj[v]
            if mask & (1 << v):
                adj[v] |= np.int64(1) << (n - 1)
            if adj[v] == 0:
                isolated = True
        if isolated:
            keep[mask] = 0
            continue
        adj[n - 1] = mask
        _degree_order(adj, n, order)
        keep[mask] = 1 if minbad_capped(adj, order, n, k, 3) == 2 else 0


@njit(cache=True)
def is_doubly_critical_masks(adj, n, k):
    """minbad_k(adj) == 2 on a standalone adjacency array."""
    order = np.zeros(n, dtype=np.int64)
    _degree_order(adj, n, order)
    return minbad_capped(adj, order, n, k, 3) == 2


@njit(cache=True)
def is_k_colorable_masks(adj, n, k):
    order = np.zeros(n, dtype=np.int64)
    _degree_order(adj, n, order)
    return minbad_capped(adj, order, n, k, 1) == 0


@njit(cache=True)
def class_min_l1(adj, n, k, sentinel):
    """Minimum 1-norm of the index vector over k-block partitions whose blocks
    each contain at most one edge; ``sentinel`` when no such partition exists.

    Restricted-growth symmetry: vertex at order position 0 opens block 0 and
    each vertex may open at most one new block.
    """
    if n == 0:
        return sentinel
    best = sentinel
    part_masks = np.zeros(k, dtype=np.int64)
    inner = np.zeros(k, dtype=np.int64)  # edges inside each block so far
    choice = np.full(n, -1, dtype=np.int64)
    total = np.zeros(n + 1, dtype=np.int64)
    used = np.zeros(n + 1, dtype=np.int64)
    part_masks[0] = 1 << 0
    choice[0] = 0
    used[1] = 1
    depth = 1
    if n == 1:
        return 0 if 0 < best else best
    while depth >= 1:
        if depth == n:
            if total[depth] < best:
                best = total[depth]
                if best == 0:
                    return best
            depth -= 1
        v = depth  # natural vertex order keeps restricted growth valid
        c = choice[depth]
        if c >= 0:
            inner[c] -= _popcount(adj[v] & part_masks[c] & ~(np.int64(1) << v))
            part_masks[c] &= ~(np.int64(1) << v)
        c += 1
        limit = used[depth] if used[depth] < k - 1 else k - 1
        advanced = False
        while c <= limit:
            extra = _popcount(adj[v] & part_masks[c])
            if inner[c] + extra <= 1 and total[depth] + extra < best:
                choice[depth] = c
                part_masks[c] |= np.int64(1) << v
                inner[c] += extra
                total[depth + 1] = total[depth] + extra
                used[depth + 1] = used[depth] + 1 if c == used[depth] else used[depth]
                depth += 1
                advanced = True
                break
            c += 1
        if not advanced:
            choice[depth] = -1
            depth -= 1
    return best
