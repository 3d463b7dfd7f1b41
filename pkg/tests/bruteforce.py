"""Independent brute-force oracles used to pin expected test values.

Everything here recomputes quantities from first principles (full
enumeration, no pruning, no shared code with the library search paths) so
the tests compare two genuinely different routes to the same answer.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from antiramsey.hypergraph import Hypergraph


def chromatic_by_assignment(graph: Hypergraph) -> int:
    """Smallest k such that some map V -> [k] has no monochromatic edge,
    found by trying every assignment for k = 1, 2, ..."""
    if graph.n == 0:
        return 0
    if not graph.edges:
        return 1
    for k in range(1, graph.n + 1):
        for assign in product(range(k), repeat=graph.n):
            if all(assign[u] != assign[v] for u, v in graph.edges):
                return k
    raise AssertionError("unreachable")


def minbad_by_enumeration(graph: Hypergraph, k: int) -> int:
    """Minimum monochromatic-edge count over all maps V -> [k]."""
    best = graph.edge_count
    for assign in product(range(k), repeat=graph.n):
        bad = sum(1 for u, v in graph.edges if assign[u] == assign[v])
        best = min(best, bad)
    return best


def doubly_critical_by_definition(graph: Hypergraph, p: int) -> bool:
    """Literal definition via the assignment-enumeration chromatic number."""
    for e in graph.edges:
        rest = Hypergraph(graph.n, 2, [f for f in graph.edges if f != e])
        if chromatic_by_assignment(rest) < p:
            return False
    for e1, e2 in combinations(graph.edges, 2):
        rest = Hypergraph(graph.n, 2, [f for f in graph.edges if f not in (e1, e2)])
        if chromatic_by_assignment(rest) == p - 1:
            return True
    return False


def rainbow_copy_exists_by_enumeration(coloring, pattern: Hypergraph) -> bool:
    """Try every injective vertex map; True iff some image is a rainbow copy."""
    host = coloring.host
    if pattern.n > host.n:
        return False
    for image in permutations(range(host.n), pattern.n):
        colors = set()
        ok = True
        for pe in pattern.edges:
            he = tuple(sorted(image[v] for v in pe))
            if he not in host.edge_set:
                ok = False
                break
            c = coloring.color_of(he)
            if c in colors:
                ok = False
                break
            colors.add(c)
        if ok:
            return True
    return False


def set_partitions(items: list) -> list[list[list]]:
    """All set partitions of ``items`` (unordered blocks)."""
    if not items:
        return [[]]
    head, rest = items[0], items[1:]
    out = []
    for smaller in set_partitions(rest):
        for i in range(len(smaller)):
            out.append(smaller[:i] + [[head] + smaller[i]] + smaller[i + 1 :])
        out.append([[head]] + smaller)
    return out


def ar_by_full_enumeration(n: int, r: int, pattern: Hypergraph) -> int:
    """Anti-Ramsey value by checking every set partition of the edge set."""
    from antiramsey.hypergraph import EdgeColoring, complete_hypergraph

    host = complete_hypergraph(n, r)
    best = 0
    for blocks in set_partitions(list(host.edges)):
        mapping = {}
        for c, block in enumerate(blocks):
            for e in block:
                mapping[e] = c
        coloring = EdgeColoring(host, mapping)
        if not rainbow_copy_exists_by_enumeration(coloring, pattern):
            best = max(best, len(blocks))
    return best + 1


def ex_by_all_subsets(n: int, r: int, family: list[Hypergraph]) -> int:
    """Turán number by checking every edge subset of the complete host."""
    from antiramsey.hypergraph import complete_hypergraph

    host = complete_hypergraph(n, r)
    m = host.edge_count

    def contains_copy(edge_set: frozenset, pattern: Hypergraph) -> bool:
        sub = Hypergraph(n, r, sorted(edge_set))
        for image in permutations(range(n), pattern.n):
            if all(
                tuple(sorted(image[v] for v in pe)) in sub.edge_set
                for pe in pattern.edges
            ):
                return True
        return False

    best = 0
    for mask in range(1 << m):
        chosen = frozenset(host.edges[i] for i in range(m) if (mask >> i) & 1)
        if len(chosen) <= best:
            continue
        if not any(contains_copy(chosen, pat) for pat in family):
            best = len(chosen)
    return best


def isomorphic_by_bijections(g1: Hypergraph, g2: Hypergraph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    for perm in permutations(range(g1.n)):
        if all(tuple(sorted(perm[v] for v in e)) in g2.edge_set for e in g1.edges):
            return True
    return False
