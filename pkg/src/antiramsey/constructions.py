"""Constructions: expansions, balanced-partition Turán hypergraphs, and the
lower-bound colorings used to certify rainbow-free color counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Optional

from .errors import DegenerateConstructionError, InvalidParametersError
from .hypergraph import Edge, EdgeColoring, Hypergraph, complete_hypergraph
from .partitions import VertexPartition


@dataclass(frozen=True)
class ExpansionResult:
    """An expanded r-graph together with its skeleton bookkeeping.

    Each skeleton edge receives r-2 private new vertices, numbered
    consecutively after the skeleton vertices in lexicographic edge order,
    so distinct expanded edges share skeleton vertices only.
    """

    hypergraph: Hypergraph
    skeleton_vertices: tuple[int, ...]
    edge_provenance: dict[Edge, Edge]  # expanded edge -> skeleton edge

    @property
    def vertex_count(self) -> int:
        return self.hypergraph.n


def expansion(skeleton: Hypergraph, r: int) -> ExpansionResult:
    """Expand a 2-graph to an r-graph by padding each edge with r-2 new vertices."""
    if skeleton.r != 2:
        raise InvalidParametersError(f"expansion needs a 2-graph skeleton, got r={skeleton.r}")
    if r < 2:
        raise InvalidParametersError(f"target uniformity must be >= 2, got {r}")
    base = skeleton.n
    new_edges: list[tuple[int, ...]] = []
    provenance: dict[Edge, Edge] = {}
    nxt = base
    for e in skeleton.edges:
        extras = tuple(range(nxt, nxt + r - 2))
        nxt += r - 2
        big = tuple(sorted(e + extras))
        new_edges.append(big)
        provenance[big] = e
    graph = Hypergraph(nxt, r, new_edges)
    return ExpansionResult(graph, tuple(range(base)), provenance)


@dataclass(frozen=True)
class TuranResult:
    """Complete (p-1)-partite r-graph on a balanced partition, with its count."""

    hypergraph: Hypergraph
    partition: VertexPartition
    count: int


def balanced_partition(n: int, parts: int) -> VertexPartition:
    """Contiguous balanced partition: sizes ascending, larger blocks last."""
    if parts < 1:
        raise InvalidParametersError(f"need at least one block, got {parts}")
    q, s = divmod(n, parts)
    blocks = []
    start = 0
    for i in range(parts):
        size = q + (1 if i >= parts - s else 0)
        blocks.append(range(start, start + size))
        start += size
    return VertexPartition(blocks)


def crossing_edges(n: int, r: int, partition: VertexPartition) -> list[Edge]:
    """All r-subsets of 0..n-1 meeting every block in at most one vertex."""
    block_of = partition.block_of
    out = []
    for combo in combinations(range(n), r):
        seen = set()
        ok = True
        for v in combo:
            b = block_of[v]
            if b in seen:
                ok = False
                break
            seen.add(b)
        if ok:
            out.append(combo)
    return out


def turan_count_formula(partition: VertexPartition, r: int) -> int:
    """Sum over r-subsets of blocks of the product of their sizes."""
    sizes = [len(b) for b in partition.blocks]
    return sum(prod(chunk) for chunk in combinations(sizes, r))


def turan_hypergraph(n: int, p: int, r: int) -> TuranResult:
    """The r-graph of all r-sets crossing a balanced (p-1)-partition of 0..n-1."""
    if p < 2 or r < 1 or n < 0:
        raise InvalidParametersError(f"need p >= 2, r >= 1, n >= 0; got n={n}, p={p}, r={r}")
    part = balanced_partition(n, p - 1)
    edges = crossing_edges(n, r, part)
    graph = Hypergraph(n, r, edges)
    count = graph.edge_count
    expected = turan_count_formula(part, r)
    if count != expected:
        raise AssertionError(
            f"enumerated {count} crossing {r}-sets but block sizes predict {expected}"
        )
    return TuranResult(graph, part, count)


def turan_count(n: int, p: int, r: int) -> int:
    return turan_hypergraph(n, p, r).count


def trivial_lower_bound_coloring(
    n: int,
    r: int,
    skeleton: Optional[Hypergraph],
    extremal: Hypergraph,
) -> EdgeColoring:
    """Rainbow the given extremal graph inside the complete host and give all
    remaining edges one shared color.

    The caller certifies (e.g. through the brute-force oracles) that
    ``extremal`` carries no copy of any once-deleted expanded ``skeleton``;
    the skeleton itself is accepted only for context and error messages.
    """
    if extremal.n != n or extremal.r != r:
        raise InvalidParametersError(
            f"extremal graph must live on the same n={n}, r={r} host, "
            f"got n={extremal.n}, r={extremal.r}"
        )
    host = complete_hypergraph(n, r)
    if not extremal.edge_set <= host.edge_set:
        raise InvalidParametersError("extremal graph is not a subgraph of the complete host")
    mapping: dict[Edge, int] = {}
    for i, e in enumerate(extremal.edges):
        mapping[e] = i
    shared = extremal.edge_count
    for e in host.edges:
        if e not in mapping:
            mapping[e] = shared
    return EdgeColoring(host, mapping)


def lower_bound_coloring_r3(n: int, p: int, ell: int) -> EdgeColoring:
    """Rainbow a balanced Turán 3-graph and collapse the leftovers.

    Colors: one per Turán edge; for each of the first ell-2 (smallest)
    blocks one shared color on all edges meeting that block twice or more
    (ties to the smallest block index); one final color for everything else.
    Exactly t + ell - 1 colors in total, else a degenerate-construction error.
    """
    if p < 4:
        raise InvalidParametersError(f"construction needs p >= 4, got {p}")
    if not 2 <= ell <= p:
        raise InvalidParametersError(f"need 2 <= ell <= p, got ell={ell}, p={p}")
    if n < p - 1:
        raise InvalidParametersError(f"need n >= p - 1 = {p - 1}, got {n}")
    turan = turan_hypergraph(n, p, 3)
    host = complete_hypergraph(n, 3)
    masks = turan.partition.block_masks
    mapping: dict[Edge, int] = {}
    next_color = 0
    for e in turan.hypergraph.edges:
        mapping[e] = next_color
        next_color += 1
    heavy_color = {i: next_color + i for i in range(ell - 2)}
    final_color = next_color + (ell - 2)
    used_heavy = set()
    used_final = False
    for e in host.edges:
        if e in mapping:
            continue
        ebits = 0
        for v in e:
            ebits |= 1 << v
        for i in range(ell - 2):
            if bin(ebits & masks[i]).count("1") >= 2:
                mapping[e] = heavy_color[i]
                used_heavy.add(i)
                break
        else:
            mapping[e] = final_color
            used_final = True
    if len(used_heavy) != ell - 2:
        empty = sorted(set(range(ell - 2)) - used_heavy)
        raise DegenerateConstructionError(
            f"no edge meets block {empty[0]} twice; grow n so the first "
            f"{ell - 2} blocks have at least 2 vertices"
        )
    if not used_final:
        raise DegenerateConstructionError("no leftover edge exists for the final color")
    coloring = EdgeColoring(host, mapping)
    want = turan.count + ell - 1
    if coloring.color_count != want:
        raise AssertionError(f"built {coloring.color_count} colors, expected {want}")
    return coloring


def lower_bound_coloring_general(n: int, p: int, r: int) -> EdgeColoring:
    """Rainbow a balanced Turán r-graph, one extra color for all other edges."""
    if not p > r or r < 4:
        raise InvalidParametersError(f"construction needs p > r >= 4, got p={p}, r={r}")
    if n < p - 1:
        raise InvalidParametersError(f"need n >= p - 1 = {p - 1}, got {n}")
    turan = turan_hypergraph(n, p, r)
    host = complete_hypergraph(n, r)
    mapping: dict[Edge, int] = {}
    for i, e in enumerate(turan.hypergraph.edges):
        mapping[e] = i
    rest = turan.count
    leftover = False
    for e in host.edges:
        if e not in mapping:
            mapping[e] = rest
            leftover = True
    if not leftover:
        raise DegenerateConstructionError("no leftover edge exists for the final color")
    coloring = EdgeColoring(host, mapping)
    if coloring.color_count != turan.count + 1:
        raise AssertionError(
            f"built {coloring.color_count} colors, expected {turan.count + 1}"
        )
    return coloring
