"""Exact chromatic numbers for small 2-graphs and criticality verdicts.

The solver is iterative deepening on k with a backtracking k-colorability
check: vertices in descending-degree order, the first vertex pinned to
color 0, and at most one brand-new color offered per step.  Exact and fast
for the desk-scale graphs this package targets (tested to 20 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import NotApplicableError, WrongUniformityError
from .hypergraph import Edge, Hypergraph


def _require_2graph(graph: Hypergraph) -> None:
    if graph.r != 2:
        raise WrongUniformityError(f"operation needs a 2-graph, got r={graph.r}")


def _adjacency_masks(graph: Hypergraph) -> list[int]:
    adj = [0] * graph.n
    for u, v in graph.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _is_k_colorable(adj: list[int], order: list[int], k: int) -> bool:
    """Backtracking k-colorability on bitmask adjacency, symmetry-broken."""
    n = len(order)
    if k >= n:
        return True
    if k == 0:
        return n == 0
    color_masks = [0] * k  # vertices currently holding each color
    choice = [-1] * n
    used = 0  # number of colors already in play
    used_stack = [0] * (n + 1)
    depth = 0
    while True:
        v = order[depth]
        vb = 1 << v
        av = adj[v]
        c = choice[depth] + 1
        if choice[depth] >= 0:
            color_masks[choice[depth]] &= ~vb
        # allow at most one color beyond those already used
        limit = min(k - 1, used_stack[depth])
        placed = False
        while c <= limit:
            if not (av & color_masks[c]):
                choice[depth] = c
                color_masks[c] |= vb
                used_stack[depth + 1] = max(used_stack[depth], c + 1)
                placed = True
                break
            c += 1
        if placed:
            depth += 1
            if depth == n:
                return True
            continue
        choice[depth] = -1
        depth -= 1
        if depth < 0:
            return False


def chromatic_number(graph: Hypergraph) -> int:
    """Exact chromatic number; 0 for the empty vertex set, 1 if edgeless."""
    _require_2graph(graph)
    if graph.n == 0:
        return 0
    if not graph.edges:
        return 1
    adj = _adjacency_masks(graph)
    order = sorted(range(graph.n), key=lambda v: (-bin(adj[v]).count("1"), v))
    # greedy upper bound narrows the deepening range
    greedy_colors: dict[int, int] = {}
    for v in order:
        taken = {greedy_colors[u] for u in greedy_colors if adj[v] >> u & 1}
        c = 0
        while c in taken:
            c += 1
        greedy_colors[v] = c
    upper = max(greedy_colors.values()) + 1
    for k in range(2, upper):
        if _is_k_colorable(adj, order, k):
            return k
    return upper


def is_edge_critical(graph: Hypergraph) -> tuple[bool, Optional[Edge]]:
    """Whether removing some edge lowers the chromatic number.

    Returns the verdict and the lexicographically first witness edge.
    """
    _require_2graph(graph)
    if not graph.edges:
        raise NotApplicableError("edge criticality undefined for edgeless graphs")
    chi = chromatic_number(graph)
    for e in graph.edges:
        if chromatic_number(_drop(graph, [e])) < chi:
            return True, e
    return False, None


def _drop(graph: Hypergraph, edges: list[Edge]) -> Hypergraph:
    gone = set(edges)
    return Hypergraph(graph.n, 2, [e for e in graph.edges if e not in gone])


@dataclass(frozen=True)
class CriticalityReport:
    """Verdict of the doubly edge-critical test at a given parameter p.

    ``witness_pair`` is a pair of distinct edges whose joint removal drops
    the chromatic number to exactly p-1; ``failing_edge`` is an edge whose
    removal alone already drops it below p.  Both re-verify independently.
    """

    chi: int
    p: int
    is_doubly_p_critical: bool
    witness_pair: Optional[tuple[Edge, Edge]]
    failing_edge: Optional[Edge]

    def to_json_dict(self) -> dict:
        return {
            "chi": self.chi,
            "p": self.p,
            "doubly_critical": self.is_doubly_p_critical,
            "witness_pair": [list(e) for e in self.witness_pair] if self.witness_pair else None,
            "failing_edge": list(self.failing_edge) if self.failing_edge else None,
        }


def doubly_critical_report(graph: Hypergraph, p: int) -> CriticalityReport:
    """Test the literal definition: every single edge removal keeps the
    chromatic number at p or above, and some pair of distinct edges (sharing
    a vertex or not) drops it to exactly p-1.
    """
    _require_2graph(graph)
    if p < 2:
        raise NotApplicableError(f"parameter p must be at least 2, got {p}")
    chi = chromatic_number(graph)
    for e in graph.edges:
        if chromatic_number(_drop(graph, [e])) < p:
            return CriticalityReport(chi, p, False, None, e)
    for e1, e2 in combinations(graph.edges, 2):
        if chromatic_number(_drop(graph, [e1, e2])) == p - 1:
            return CriticalityReport(chi, p, True, (e1, e2), None)
    return CriticalityReport(chi, p, False, None, None)
