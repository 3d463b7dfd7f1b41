"""Rainbow-copy search and the pair machinery built on top of it.

The finder is an exhaustive backtracking search over pattern vertices in a
static connectivity-aware order (high-degree vertices first), pruning on

* color reuse the moment a pattern edge becomes fully assigned,
* dead partial edges: every edge with two or more assigned vertices must
  still have a completion with fresh vertices and an unused color,
* two partial edges pinned to the same single remaining color.

Witnesses are lexicographically first along the search order, independent of
any internal parallelism, and every search honors an explicit node budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .errors import BudgetExceededError, InvalidParametersError, PreconditionError
from .hypergraph import Edge, EdgeColoring, EmbeddingMap, Hypergraph

DEFAULT_NODE_BUDGET = 20_000_000


@dataclass(frozen=True)
class RainbowCopy:
    """An embedding of a pattern whose matched edges carry distinct colors."""

    embedding: EmbeddingMap
    colors_used: frozenset[int]

    def to_json_dict(self) -> dict:
        return {
            "map": [list(p) for p in self.embedding.pattern_to_host],
            "edges": [list(e) for e in self.embedding.matched_edges],
            "colors": sorted(self.colors_used),
        }

    def verify(self, coloring: EdgeColoring, pattern: Hypergraph) -> None:
        """Re-check every invariant; raises on any violation."""
        self.embedding.check_against(pattern, coloring.host)
        cols = [coloring.color_of(e) for e in self.embedding.matched_edges]
        if len(set(cols)) != len(cols):
            raise InvalidParametersError("matched edges repeat a color")
        if frozenset(cols) != self.colors_used:
            raise InvalidParametersError("recorded color set is stale")


def _pattern_order(pattern: Hypergraph) -> list[int]:
    """Static order: repeatedly take the vertex touching the most edges that
    already meet the ordered set; ties broken by degree, then index."""
    deg = [0] * pattern.n
    for e in pattern.edges:
        for v in e:
            deg[v] += 1
    ordered: list[int] = []
    placed = [False] * pattern.n
    touched = [0] * pattern.n
    for _ in range(pattern.n):
        best = -1
        for v in range(pattern.n):
            if placed[v]:
                continue
            if best < 0 or (touched[v], deg[v], -v) > (touched[best], deg[best], -best):
                best = v
        ordered.append(best)
        placed[best] = True
        for e in pattern.edges:
            if best in e:
                for v in e:
                    if not placed[v]:
                        touched[v] += 1
    return ordered


class _Searcher:
    """Shared state for one exhaustive rainbow-copy search."""

    def __init__(self, coloring: EdgeColoring, pattern: Hypergraph, budget_nodes: int):
        host = coloring.host
        self.host = host
        self.pattern = pattern
        self.budget = budget_nodes
        self.nodes = 0
        self.edge_color = dict(zip(host.edges, coloring.colors))
        # pairs -> host edges containing them
        self.pair_edges: dict[tuple[int, int], list[Edge]] = {}
        for e in host.edges:
            for a, b in combinations(e, 2):
                self.pair_edges.setdefault((a, b), []).append(e)
        self.order = _pattern_order(pattern)
        self.pos = {v: d for d, v in enumerate(self.order)}
        n_p = pattern.n
        self.closing: list[list[int]] = [[] for _ in range(n_p)]
        self.partial: list[list[int]] = [[] for _ in range(n_p)]
        for ei, e in enumerate(pattern.edges):
            last = max(self.pos[v] for v in e)
            self.closing[last].append(ei)
            for d in range(n_p):
                k = sum(1 for v in e if self.pos[v] <= d)
                if 2 <= k < len(e):
                    self.partial[d].append(ei)
        self.image = [-1] * n_p
        self.used_host = [False] * host.n
        self.used_colors = [False] * coloring.color_count
        self.matched: dict[int, Edge] = {}  # pattern edge index -> host edge

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"rainbow search exceeded {self.budget} nodes", spent=self.nodes
            )

    def _closing_ok(self, ei: int, step_colors: set[int]) -> Optional[int]:
        """Color of the host edge a fully-assigned pattern edge maps to, or
        None when the edge is absent / its color is already taken."""
        pe = self.pattern.edges[ei]
        he = tuple(sorted(self.image[v] for v in pe))
        color = self.edge_color.get(he)
        if color is None or self.used_colors[color] or color in step_colors:
            return None
        self.matched[ei] = he
        return color

    def _partial_alive(self, depth: int) -> bool:
        """Every partially-assigned edge still has a fresh completion with an
        unused color, and no two of them are pinned to the same last color."""
        pinned: dict[int, int] = {}
        for ei in self.partial[depth]:
            pe = self.pattern.edges[ei]
            assigned = [self.image[v] for v in pe if self.image[v] >= 0]
            a, b = assigned[0], assigned[1]
            if a > b:
                a, b = b, a
            options = self.pair_edges.get((a, b))
            if not options:
                return False
            assigned_set = set(assigned)
            first_color = -1
            flexible = False
            for he in options:
                if not assigned_set.issubset(he):
                    continue
                ok = True
                for w in he:
                    if w not in assigned_set and self.used_host[w]:
                        ok = False
                        break
                if not ok:
                    continue
                c = self.edge_color[he]
                if self.used_colors[c]:
                    continue
                if first_color < 0:
                    first_color = c
                elif c != first_color:
                    flexible = True
                    break
            if first_color < 0:
                return False
            if not flexible:
                other = pinned.get(first_color)
                if other is not None and other != ei:
                    return False
                pinned[first_color] = ei
        return True

    def search(self, depth: int) -> bool:
        if depth == len(self.order):
            return True
        pv = self.order[depth]
        closing = self.closing[depth]
        for hv in range(self.host.n):
            if self.used_host[hv]:
                continue
            self._tick()
            self.image[pv] = hv
            self.used_host[hv] = True
            step_colors: set[int] = set()
            ok = True
            for ei in closing:
                c = self._closing_ok(ei, step_colors)
                if c is None:
                    ok = False
                    break
                step_colors.add(c)
            if ok:
                for c in step_colors:
                    self.used_colors[c] = True
                if self._partial_alive(depth) and self.search(depth + 1):
                    return True
                for c in step_colors:
                    self.used_colors[c] = False
            self.image[pv] = -1
            self.used_host[hv] = False
        return False

    def copy(self) -> RainbowCopy:
        mapping = {v: self.image[v] for v in range(self.pattern.n)}
        matched = [self.matched[ei] for ei in range(self.pattern.edge_count)]
        colors = frozenset(self.edge_color[he] for he in matched)
        return RainbowCopy(EmbeddingMap(mapping, matched), colors)


def find_rainbow_copy(
    coloring: EdgeColoring,
    pattern: Hypergraph,
    budget_nodes: int = DEFAULT_NODE_BUDGET,
) -> Optional[RainbowCopy]:
    """First rainbow copy of ``pattern`` in the colored host, or None.

    The search is exhaustive: a None answer certifies that no rainbow copy
    exists.  Patterns larger than the host trivially have no copies.
    """
    if pattern.r != coloring.host.r:
        raise InvalidParametersError(
            f"uniformity mismatch: pattern r={pattern.r}, host r={coloring.host.r}"
        )
    if pattern.n > coloring.host.n or pattern.edge_count > coloring.host.edge_count:
        return None
    searcher = _Searcher(coloring, pattern, budget_nodes)
    if searcher.search(0):
        return searcher.copy()
    return None


def count_search_nodes(
    coloring: EdgeColoring,
    pattern: Hypergraph,
    budget_nodes: int = DEFAULT_NODE_BUDGET,
) -> tuple[Optional[RainbowCopy], int]:
    """find_rainbow_copy plus the number of nodes the search visited."""
    if pattern.r != coloring.host.r:
        raise InvalidParametersError(
            f"uniformity mismatch: pattern r={pattern.r}, host r={coloring.host.r}"
        )
    if pattern.n > coloring.host.n or pattern.edge_count > coloring.host.edge_count:
        return None, 0
    searcher = _Searcher(coloring, pattern, budget_nodes)
    found = searcher.search(0)
    return (searcher.copy() if found else None), searcher.nodes


@dataclass(frozen=True)
class PairClassification:
    """Big/small split of all vertex pairs of an r-graph (r >= 3) against the
    codegree threshold tau * C(n, r-3) + |skeleton|."""

    threshold: int
    big_pairs: frozenset[tuple[int, int]]
    small_pairs: frozenset[tuple[int, int]]
    small_degree: dict[int, int]

    def is_big(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.big_pairs

    def to_json_dict(self) -> dict:
        return {
            "threshold": self.threshold,
            "big_pairs": [list(p) for p in sorted(self.big_pairs)],
            "small_pairs": [list(p) for p in sorted(self.small_pairs)],
            "small_degree": {str(v): d for v, d in sorted(self.small_degree.items())},
        }


def pair_threshold(host_n: int, host_r: int, skeleton: Hypergraph) -> int:
    tau = skeleton.n + (host_r - 2) * skeleton.edge_count
    return tau * comb(host_n, host_r - 3) + skeleton.edge_count


def classify_pairs(graph: Hypergraph, skeleton: Hypergraph) -> PairClassification:
    """Split all vertex pairs of ``graph`` into big and small by codegree."""
    if graph.r < 3:
        raise InvalidParametersError(f"pair classification needs r >= 3, got r={graph.r}")
    if skeleton.r != 2:
        raise InvalidParametersError(f"skeleton must be a 2-graph, got r={skeleton.r}")
    threshold = pair_threshold(graph.n, graph.r, skeleton)
    codeg: dict[tuple[int, int], int] = {}
    for e in graph.edges:
        for pair in combinations(e, 2):
            codeg[pair] = codeg.get(pair, 0) + 1
    big = []
    small = []
    small_degree = {v: 0 for v in range(graph.n)}
    for pair in combinations(range(graph.n), 2):
        if codeg.get(pair, 0) >= threshold:
            big.append(pair)
        else:
            small.append(pair)
            small_degree[pair[0]] += 1
            small_degree[pair[1]] += 1
    return PairClassification(threshold, frozenset(big), frozenset(small), small_degree)


@dataclass(frozen=True)
class SkeletonExtension:
    """Outcome of greedily extending an embedded skeleton to a rainbow copy."""

    success: bool
    copy: Optional[RainbowCopy]
    blocked_pair: Optional[tuple[int, int]]

    def to_json_dict(self) -> dict:
        return {
            "success": self.success,
            "copy": self.copy.to_json_dict() if self.copy else None,
            "blocked_pair": list(self.blocked_pair) if self.blocked_pair else None,
        }


def extend_skeleton(
    coloring: EdgeColoring,
    skeleton: Hypergraph,
    vertex_map: dict[int, int],
) -> SkeletonExtension:
    """Greedy completion of an embedded 2-graph skeleton to a rainbow expansion.

    ``coloring`` must be a rainbow subgraph (every edge its own color) and
    every skeleton edge's image pair must be big in it; extension edges are
    drawn from that subgraph only.  For skeleton edges in lexicographic
    order the lexicographically least host edge through the pair whose extra
    vertices are all fresh is taken; the first stuck pair is reported.
    """
    host = coloring.host
    if skeleton.r != 2:
        raise InvalidParametersError(f"skeleton must be a 2-graph, got r={skeleton.r}")
    if host.r < 3:
        raise InvalidParametersError(f"extension needs a host with r >= 3, got {host.r}")
    if coloring.color_count != host.edge_count:
        raise PreconditionError("host subgraph is not rainbow: some color repeats")
    images = set()
    for v in range(skeleton.n):
        if v not in vertex_map:
            raise InvalidParametersError(f"vertex map misses skeleton vertex {v}")
        images.add(vertex_map[v])
    if len(images) != skeleton.n:
        raise InvalidParametersError("vertex map must be injective")
    pairs = classify_pairs(host, skeleton)
    for u, v in skeleton.edges:
        hu, hv = vertex_map[u], vertex_map[v]
        if not pairs.is_big(hu, hv):
            raise PreconditionError(
                f"skeleton pair {[min(hu, hv), max(hu, hv)]} is small "
                f"(codegree below {pairs.threshold})"
            )
    used = set(images)
    matched: list[Edge] = []
    extension_vertices: list[list[int]] = []
    for u, v in skeleton.edges:
        hu, hv = vertex_map[u], vertex_map[v]
        lo, hi = min(hu, hv), max(hu, hv)
        pick: Optional[Edge] = None
        for he in host.edges:
            if lo in he and hi in he:
                extras = [w for w in he if w != lo and w != hi]
                if all(w not in used for w in extras):
                    pick = he
                    break
        if pick is None:
            return SkeletonExtension(False, None, (lo, hi))
        extras = [w for w in pick if w != lo and w != hi]
        used.update(extras)
        matched.append(pick)
        extension_vertices.append(extras)
    expanded = _expanded_pattern(skeleton, host.r)
    mapping = dict(vertex_map)
    nxt = skeleton.n
    for extras in extension_vertices:
        for w in extras:
            mapping[nxt] = w
            nxt += 1
    # matched edges must line up with the expanded pattern's lexicographic edges
    matched_by_pattern = []
    for pe in expanded.edges:
        he = tuple(sorted(mapping[v] for v in pe))
        matched_by_pattern.append(he)
    colors = frozenset(coloring.color_of(he) for he in matched_by_pattern)
    copy = RainbowCopy(EmbeddingMap(mapping, matched_by_pattern), colors)
    return SkeletonExtension(True, copy, None)


def _expanded_pattern(skeleton: Hypergraph, r: int) -> Hypergraph:
    from .constructions import expansion

    return expansion(skeleton, r).hypergraph


def terminal_pairs(once_deleted: Hypergraph, full: Hypergraph) -> list[tuple[int, int]]:
    """All vertex pairs of a once-deleted skeleton whose re-insertion yields
    the full skeleton (up to isomorphism).

    The input must be the full 2-graph minus one edge; otherwise the pair set
    would be empty and an invalid-parameters error is raised instead.
    """
    from .isomorphism import graphs_isomorphic

    if once_deleted.r != 2 or full.r != 2:
        raise InvalidParametersError("terminal pairs are defined for 2-graphs")
    if once_deleted.n != full.n or once_deleted.edge_count != full.edge_count - 1:
        raise InvalidParametersError(
            "first argument must be the second one minus exactly one edge"
        )
    out = []
    for pair in combinations(range(once_deleted.n), 2):
        if pair in once_deleted.edge_set:
            continue
        candidate = once_deleted.with_edges([pair])
        if graphs_isomorphic(candidate, full):
            out.append(pair)
    if not out:
        raise InvalidParametersError("no single edge completes the first graph to the second")
    return out


def maximal_disjoint_rainbow_collection(
    coloring: EdgeColoring,
    pattern: Hypergraph,
    budget_nodes: int = DEFAULT_NODE_BUDGET,
) -> list[RainbowCopy]:
    """Greedy maximal edge-disjoint family of rainbow pattern copies.

    Copies are taken inside the designated rainbow subgraph holding the
    lexicographically least edge of every color class, so edge-disjoint
    copies automatically use disjoint color sets.  Each round takes the
    search-order-first copy among the remaining edges until none is left.
    """
    if pattern.r != coloring.host.r:
        raise InvalidParametersError(
            f"uniformity mismatch: pattern r={pattern.r}, host r={coloring.host.r}"
        )
    designated = [cls[0] for cls in coloring.color_classes()]
    remaining = set(designated)
    out: list[RainbowCopy] = []
    host = coloring.host
    while True:
        sub = Hypergraph(host.n, host.r, sorted(remaining))
        sub_coloring = EdgeColoring(sub, {e: i for i, e in enumerate(sub.edges)})
        found = find_rainbow_copy(sub_coloring, pattern, budget_nodes=budget_nodes)
        if found is None:
            return out
        colors = frozenset(coloring.color_of(he) for he in found.embedding.matched_edges)
        out.append(RainbowCopy(found.embedding, colors))
        remaining.difference_update(found.embedding.matched_edges)
