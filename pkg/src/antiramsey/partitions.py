"""Vertex partitions, index vectors, and the partition-class computation.

Partitions of 0..n-1 into at most k unordered blocks are enumerated through
restricted-growth strings and padded with empty blocks to exactly k, so every
consumer sees a fixed block count and a deterministic order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceededError, InvalidParametersError, ParseError, WrongUniformityError
from .hypergraph import Hypergraph, _load_json

DEFAULT_PARTITION_BUDGET = 5_000_000


@dataclass(frozen=True)
class VertexPartition:
    """Ordered disjoint blocks covering 0..n-1; empty blocks are permitted."""

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Sequence[Sequence[int]]):
        normalized = tuple(tuple(sorted(int(v) for v in b)) for b in blocks)
        seen: set[int] = set()
        total = 0
        for b in normalized:
            total += len(b)
            seen.update(b)
        if len(seen) != total:
            raise InvalidParametersError("partition blocks must be disjoint")
        if seen and (min(seen) < 0 or max(seen) != len(seen) - 1):
            raise InvalidParametersError("blocks must cover exactly the range 0..n-1")
        object.__setattr__(self, "blocks", normalized)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @cached_property
    def block_of(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    @cached_property
    def block_masks(self) -> tuple[int, ...]:
        masks = []
        for b in self.blocks:
            m = 0
            for v in b:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    def to_json_dict(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks]}


def partition_from_json_dict(doc: object) -> VertexPartition:
    if not isinstance(doc, dict) or "blocks" not in doc:
        raise ParseError("partition document needs key blocks")
    try:
        return VertexPartition(doc["blocks"])
    except InvalidParametersError as exc:
        raise ParseError(str(exc)) from None


def parse_partition(text: str) -> VertexPartition:
    return partition_from_json_dict(_load_json(text))


def serialize_partition(partition: VertexPartition) -> str:
    return json.dumps(partition.to_json_dict())


@dataclass(frozen=True)
class IndexVector:
    """Per-block counts of edges lying inside each block of a partition."""

    counts: tuple[int, ...]

    @property
    def norm_1(self) -> int:
        return sum(self.counts)

    @property
    def norm_inf(self) -> int:
        return max(self.counts) if self.counts else 0

    def sorted_descending(self) -> tuple[int, ...]:
        return tuple(sorted(self.counts, reverse=True))


def enumerate_partitions(n: int, k: int) -> Iterator[VertexPartition]:
    """Every partition of 0..n-1 into at most k unordered blocks, exactly once.

    Restricted-growth order: vertex 0 goes to block 0, and each next vertex
    may open at most one new block.  Results are padded to k blocks.
    """
    if n < 0 or k < 1:
        raise InvalidParametersError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    if n == 0:
        yield VertexPartition([[] for _ in range(k)])
        return
    growth = [0] * n

    def rec(i: int, high: int) -> Iterator[VertexPartition]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(k)]
            for v, b in enumerate(growth):
                blocks[b].append(v)
            yield VertexPartition(blocks)
            return
        for b in range(min(high + 1, k - 1) + 1):
            growth[i] = b
            yield from rec(i + 1, max(high, b))

    growth[0] = 0
    yield from rec(1, 0)


def index_vector(graph: Hypergraph, partition: VertexPartition) -> IndexVector:
    """counts[i] = number of edges of ``graph`` with both endpoints in block i."""
    _check_cover(graph, partition)
    counts = [0] * len(partition.blocks)
    block_of = partition.block_of
    for u, v in graph.edges:
        bu = block_of[u]
        if bu == block_of[v]:
            counts[bu] += 1
    return IndexVector(tuple(counts))


def _check_cover(graph: Hypergraph, partition: VertexPartition) -> None:
    if partition.n != graph.n:
        raise InvalidParametersError(
            f"partition covers {partition.n} vertices, graph has {graph.n}"
        )


def class_of(
    graph: Hypergraph,
    p: int,
    budget: int = DEFAULT_PARTITION_BUDGET,
) -> tuple[int, Optional[VertexPartition]]:
    """Partition class of a 2-graph at parameter p.

    Scans every (p-1)-block partition.  Returns 0 with a witness when some
    partition has an all-zero index vector (the graph is properly
    (p-1)-colorable, outside the intended domain), otherwise the minimum
    1-norm over partitions whose blocks each hold at most one edge, with the
    first minimizer in enumeration order; (p, None) when no such partition
    exists.
    """
    if graph.r != 2:
        raise WrongUniformityError(f"class is defined for 2-graphs, got r={graph.r}")
    if p < 2:
        raise InvalidParametersError(f"need p >= 2, got {p}")
    best: Optional[int] = None
    witness: Optional[VertexPartition] = None
    spent = 0
    for part in enumerate_partitions(graph.n, p - 1):
        spent += 1
        if spent > budget:
            raise BudgetExceededError(f"partition budget {budget} exhausted", spent=spent)
        vec = index_vector(graph, part)
        if vec.norm_inf == 0:
            return 0, part
        if vec.norm_inf == 1 and (best is None or vec.norm_1 < best):
            best = vec.norm_1
            witness = part
    if best is None:
        return p, None
    return best, witness


def config_witness(
    graph: Hypergraph,
    p: int,
    budget: int = DEFAULT_PARTITION_BUDGET,
) -> Optional[VertexPartition]:
    """A (p-1)-block partition with one block holding exactly two edges and
    every other block edge-free (index vector (2,0,...,0) up to order), or
    None when no such partition exists.

    The search walks restricted-growth assignments directly, cutting any
    branch whose within-block edges either exceed two in total or spread
    over two blocks, so the first witness matches full-enumeration order.
    """
    if graph.r != 2:
        raise WrongUniformityError(f"operation needs a 2-graph, got r={graph.r}")
    if p < 2:
        raise InvalidParametersError(f"need p >= 2, got {p}")
    n = graph.n
    k = p - 1
    if n == 0:
        return None
    adj = [0] * n
    for u, v in graph.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    growth = [0] * n
    spent = 0

    def rec(i: int, high: int, block_masks: list[int], inner: list[int], total: int):
        nonlocal spent
        if i == n:
            spent += 1
            if spent > budget:
                raise BudgetExceededError(f"partition budget {budget} exhausted", spent=spent)
            if total == 2 and max(inner) == 2:
                blocks: list[list[int]] = [[] for _ in range(k)]
                for v, b in enumerate(growth):
                    blocks[b].append(v)
                return VertexPartition(blocks)
            return None
        for b in range(min(high + 1, k - 1) + 1):
            extra = bin(adj[i] & block_masks[b]).count("1")
            if extra:
                if total + extra > 2 or (inner[b] == 0 and total > 0):
                    continue
            growth[i] = b
            block_masks[b] |= 1 << i
            inner[b] += extra
            got = rec(i + 1, max(high, b), block_masks, inner, total + extra)
            block_masks[b] &= ~(1 << i)
            inner[b] -= extra
            if got is not None:
                return got
        return None

    return rec(1, 0, [1] + [0] * (k - 1), [0] * k, 0)
