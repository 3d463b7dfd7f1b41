"""Exact desk-scale oracles: Turán and anti-Ramsey numbers by exhaustive
branch-and-bound, crossing decompositions, the block-touch potential with its
hill-climb, and edit distance to the balanced crossing construction.

Every oracle either certifies its answer by finishing an exhaustive search or
raises a budget error; nothing silently approximates.  Hill-climb variants
are flagged non-certified.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .constructions import expansion, turan_count_formula
from .errors import BudgetExceededError, InvalidParametersError
from .hypergraph import Edge, EdgeColoring, Hypergraph, complete_hypergraph
from .partitions import VertexPartition, enumerate_partitions
from .rainbow import _pattern_order

DEFAULT_ORACLE_BUDGET = 20_000_000


@dataclass(frozen=True)
class OracleReport:
    """Uniform result record for the exhaustive oracles."""

    value: int
    witness: Optional[object]  # Hypergraph | EdgeColoring | VertexPartition
    certified: bool
    nodes_explored: int

    def to_json_dict(self) -> dict:
        witness: object = None
        if self.witness is not None:
            witness = self.witness.to_json_dict()
        return {
            "value": self.value,
            "witness": witness,
            "certified": self.certified,
            "nodes_explored": self.nodes_explored,
        }


def _all_copies(host: Hypergraph, pattern: Hypergraph) -> list[tuple[int, ...]]:
    """Every edge-index subset of ``host`` forming a labeled copy of ``pattern``.

    Enumerates injections of pattern vertices; distinct injections landing on
    the same edge set are merged.
    """
    if pattern.r != host.r:
        raise InvalidParametersError("pattern and host uniformity differ")
    if pattern.n > host.n:
        return []
    index_of = {e: i for i, e in enumerate(host.edges)}
    order = _pattern_order(pattern)
    pos = {v: d for d, v in enumerate(order)}
    closing: list[list[int]] = [[] for _ in range(pattern.n)]
    for ei, e in enumerate(pattern.edges):
        closing[max(pos[v] for v in e)].append(ei)
    image = [-1] * pattern.n
    used = [False] * host.n
    found: set[tuple[int, ...]] = set()

    def rec(depth: int) -> None:
        if depth == pattern.n:
            idxs = []
            for pe in pattern.edges:
                idxs.append(index_of[tuple(sorted(image[v] for v in pe))])
            found.add(tuple(sorted(idxs)))
            return
        pv = order[depth]
        for hv in range(host.n):
            if used[hv]:
                continue
            image[pv] = hv
            ok = True
            for ei in closing[depth]:
                pe = pattern.edges[ei]
                if tuple(sorted(image[v] for v in pe)) not in index_of:
                    ok = False
                    break
            if ok:
                used[hv] = True
                rec(depth + 1)
                used[hv] = False
            image[pv] = -1

    rec(0)
    return sorted(found)


def ex_bruteforce(
    n: int,
    r: int,
    family: Sequence[Hypergraph],
    budget_nodes: int = DEFAULT_ORACLE_BUDGET,
) -> OracleReport:
    """Exact maximum edge count of an n-vertex r-graph avoiding every member
    of ``family`` as a subgraph, with a witness extremal graph.

    Branch and bound over host edges in lexicographic order, seeded with a
    greedy feasible solution.
    """
    host = complete_hypergraph(n, r)
    m = host.edge_count
    copy_masks: list[int] = []
    for pattern in family:
        for idxs in _all_copies(host, pattern):
            mask = 0
            for i in idxs:
                mask |= 1 << i
            copy_masks.append(mask)
    copy_masks = sorted(set(copy_masks))
    if any(mask == 0 for mask in copy_masks):
        # an edgeless pattern embeds in everything; nothing is feasible
        raise InvalidParametersError("family contains an edgeless pattern")
    copies_with: list[list[int]] = [[] for _ in range(m)]
    for mask in copy_masks:
        b = mask
        while b:
            low = b & (-b)
            copies_with[low.bit_length() - 1].append(mask)
            b ^= low

    # greedy initial solution
    greedy = 0
    for i in range(m):
        cand = greedy | (1 << i)
        if all((cm & cand) != cm for cm in copies_with[i]):
            greedy = cand
    best_count = bin(greedy).count("1")
    best_mask = greedy
    nodes = 0

    def rec(i: int, chosen: int, count: int) -> None:
        nonlocal best_count, best_mask, nodes
        nodes += 1
        if nodes > budget_nodes:
            raise BudgetExceededError(f"ex search exceeded {budget_nodes} nodes", spent=nodes)
        if count + (m - i) <= best_count:
            return
        if i == m:
            best_count = count
            best_mask = chosen
            return
        take = chosen | (1 << i)
        if all((cm & take) != cm for cm in copies_with[i]):
            rec(i + 1, take, count + 1)
        rec(i + 1, chosen, count)

    rec(0, 0, 0)
    witness_edges = [host.edges[i] for i in range(m) if (best_mask >> i) & 1]
    witness = Hypergraph(n, r, witness_edges)
    return OracleReport(best_count, witness, True, nodes)


def ar_bruteforce(
    n: int,
    r: int,
    skeleton: Hypergraph,
    budget_nodes: int = DEFAULT_ORACLE_BUDGET,
    collect_optima: bool = False,
) -> OracleReport | tuple[OracleReport, list[EdgeColoring]]:
    """Exact minimum color count forcing a rainbow expanded copy.

    Colorings are enumerated as set partitions of the host edge set in
    restricted-growth order (color labels carry no meaning), maximizing the
    block count subject to rainbow-freeness; a branch dies as soon as some
    pattern copy is completely colored with pairwise distinct colors.  The
    reported value is that maximum plus one; the witness is an optimal
    rainbow-free coloring.
    """
    if skeleton.r != 2:
        raise InvalidParametersError(f"skeleton must be a 2-graph, got r={skeleton.r}")
    pattern = skeleton if r == 2 else expansion(skeleton, r).hypergraph
    host = complete_hypergraph(n, r)
    m = host.edge_count
    if m == 0:
        raise InvalidParametersError("host has no edges to color")
    copies = _all_copies(host, pattern)
    copies_by_last: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
    for idxs in copies:
        copies_by_last[idxs[-1]].append(idxs)
    color_of = [-1] * m
    best = 0
    best_witness: Optional[list[int]] = None
    optima: list[list[int]] = []
    nodes = 0

    def rec(i: int, num_colors: int) -> None:
        nonlocal best, best_witness, nodes
        nodes += 1
        if nodes > budget_nodes:
            raise BudgetExceededError(f"ar search exceeded {budget_nodes} nodes", spent=nodes)
        reachable = num_colors + (m - i)
        if reachable < best or (not collect_optima and reachable == best):
            return
        if i == m:
            if num_colors > best:
                best = num_colors
                best_witness = color_of[:]
                optima.clear()
            if collect_optima and num_colors == best:
                optima.append(color_of[:])
            return
        for c in range(num_colors + 1):
            color_of[i] = c
            rainbow_hit = False
            for idxs in copies_by_last[i]:
                seen = set()
                distinct = True
                for j in idxs:
                    cj = color_of[j]
                    if cj in seen:
                        distinct = False
                        break
                    seen.add(cj)
                if distinct:
                    rainbow_hit = True
                    break
            if not rainbow_hit:
                rec(i + 1, num_colors + (1 if c == num_colors else 0))
            color_of[i] = -1

    rec(0, 0)
    if best_witness is None:
        # every coloring, even monochromatic, has a rainbow copy
        value = 1
        witness = None
    else:
        value = best + 1
        witness = EdgeColoring(host, best_witness)
    report = OracleReport(value, witness, True, nodes)
    if collect_optima:
        return report, [EdgeColoring(host, w) for w in optima]
    return report


@dataclass(frozen=True)
class CrossingSplit:
    """Edges of a hypergraph split by whether they repeat a partition block."""

    partition: VertexPartition
    crossing: tuple[Edge, ...]
    non_crossing: tuple[Edge, ...]
    non_crossing_parts: dict[Edge, tuple[tuple[int, int], ...]]

    def to_json_dict(self) -> dict:
        return {
            "partition": self.partition.to_json_dict(),
            "crossing": [list(e) for e in self.crossing],
            "non_crossing": [list(e) for e in self.non_crossing],
            "non_crossing_parts": [
                {"edge": list(e), "parts": [list(p) for p in parts]}
                for e, parts in self.non_crossing_parts.items()
            ],
        }


def _check_cover(graph: Hypergraph, partition: VertexPartition) -> None:
    if partition.n != graph.n:
        raise InvalidParametersError(
            f"partition covers {partition.n} vertices, graph has {graph.n}"
        )


def crossing_split(graph: Hypergraph, partition: VertexPartition) -> CrossingSplit:
    """Partition the edges into crossing (blocks met at most once) and not."""
    _check_cover(graph, partition)
    block_of = partition.block_of
    crossing = []
    non_crossing = []
    parts: dict[Edge, tuple[tuple[int, int], ...]] = {}
    for e in graph.edges:
        within = [
            (u, v)
            for u, v in combinations(e, 2)
            if block_of[u] == block_of[v]
        ]
        if within:
            non_crossing.append(e)
            parts[e] = tuple(within)
        else:
            crossing.append(e)
    return CrossingSplit(partition, tuple(crossing), tuple(non_crossing), parts)


def non_crossing_part_neighbors(split: CrossingSplit, v: int) -> set[int]:
    """Vertices u such that {u, v} is a within-block pair of some non-crossing edge."""
    out = set()
    for parts in split.non_crossing_parts.values():
        for a, b in parts:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
    return out


def f_potential(graph: Hypergraph, partition: VertexPartition) -> int:
    """Sum over edges of the number of partition blocks the edge meets."""
    _check_cover(graph, partition)
    block_of = partition.block_of
    total = 0
    for e in graph.edges:
        total += len({block_of[v] for v in e})
    return total


@dataclass(frozen=True)
class FMaxResult:
    partition: VertexPartition
    value: int
    certified: bool
    moves: int
    nodes_explored: int

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "witness": self.partition.to_json_dict(),
            "certified": self.certified,
            "moves": self.moves,
            "nodes_explored": self.nodes_explored,
        }


def f_maximize(
    graph: Hypergraph,
    k: int,
    mode: str = "exact",
    seed: int = 0,
    initial: Optional[VertexPartition] = None,
    budget: int = DEFAULT_ORACLE_BUDGET,
) -> FMaxResult:
    """Maximize the block-touch potential over partitions into at most k blocks.

    Exact mode scans every partition (restricted-growth order; the first
    maximizer is the witness).  Hill-climb mode starts from ``initial`` or a
    seeded random assignment and repeatedly applies the best single-vertex
    move while the potential strictly increases; the result is a local
    maximizer and is flagged non-certified.
    """
    if k < 1:
        raise InvalidParametersError(f"need at least one block, got k={k}")
    if mode == "exact":
        best_val = -1
        best_part: Optional[VertexPartition] = None
        spent = 0
        for part in enumerate_partitions(graph.n, k):
            spent += 1
            if spent > budget:
                raise BudgetExceededError(f"partition budget {budget} exhausted", spent=spent)
            val = f_potential(graph, part)
            if val > best_val:
                best_val = val
                best_part = part
        assert best_part is not None
        return FMaxResult(best_part, best_val, True, 0, spent)
    if mode != "hillclimb":
        raise InvalidParametersError(f"mode must be 'exact' or 'hillclimb', got {mode!r}")

    if initial is not None:
        _check_cover(graph, initial)
        if len(initial.blocks) != k:
            raise InvalidParametersError(
                f"initial partition has {len(initial.blocks)} blocks, need {k}"
            )
        assign = [0] * graph.n
        for bi, block in enumerate(initial.blocks):
            for v in block:
                assign[v] = bi
    else:
        rng = random.Random(seed)
        assign = [rng.randrange(k) for _ in range(graph.n)]

    incident: list[list[int]] = [[] for _ in range(graph.n)]
    for ei, e in enumerate(graph.edges):
        for v in e:
            incident[v].append(ei)

    def edge_touch(ei: int) -> int:
        return len({assign[v] for v in graph.edges[ei]})

    value = sum(edge_touch(ei) for ei in range(graph.edge_count))
    moves = 0
    nodes = 0
    while True:
        best_delta = 0
        best_move: Optional[tuple[int, int]] = None
        for v in range(graph.n):
            old = assign[v]
            before = sum(edge_touch(ei) for ei in incident[v])
            for target in range(k):
                if target == old:
                    continue
                nodes += 1
                if nodes > budget:
                    raise BudgetExceededError(f"move budget {budget} exhausted", spent=nodes)
                assign[v] = target
                delta = sum(edge_touch(ei) for ei in incident[v]) - before
                assign[v] = old
                if delta > best_delta:
                    best_delta = delta
                    best_move = (v, target)
        if best_move is None:
            break
        assign[best_move[0]] = best_move[1]
        value += best_delta
        moves += 1
    blocks: list[list[int]] = [[] for _ in range(k)]
    for v, b in enumerate(assign):
        blocks[b].append(v)
    return FMaxResult(VertexPartition(blocks), value, False, moves, nodes)


def _balanced_size_multiset(n: int, parts: int) -> list[int]:
    q, s = divmod(n, parts)
    return [q] * (parts - s) + [q + 1] * s


def _balanced_partitions(n: int, parts: int):
    """All set partitions of 0..n-1 with balanced block sizes, each once.

    Blocks of equal size are deduplicated by forcing the smallest unplaced
    vertex into the next block of each distinct remaining size.
    """
    sizes = _balanced_size_multiset(n, parts)

    def rec(remaining: list[int], size_pool: list[int], acc: list[tuple[int, ...]]):
        if not remaining:
            yield VertexPartition(list(acc) + [() for s in size_pool if s == 0])
            return
        head, rest = remaining[0], remaining[1:]
        tried: set[int] = set()
        for i, s in enumerate(size_pool):
            if s in tried:
                continue
            tried.add(s)
            pool = size_pool[:i] + size_pool[i + 1:]
            if s == 0:
                acc.append(())
                yield from rec(remaining, pool, acc)
                acc.pop()
                continue
            for chunk in combinations(rest, s - 1):
                block = (head,) + chunk
                left = [v for v in rest if v not in set(chunk)]
                acc.append(block)
                yield from rec(left, pool, acc)
                acc.pop()

    yield from rec(list(range(n)), sizes, [])


@dataclass(frozen=True)
class ClosenessResult:
    distance: int
    witness: VertexPartition
    certified: bool
    partitions_checked: int

    def to_json_dict(self) -> dict:
        return {
            "value": self.distance,
            "witness": self.witness.to_json_dict(),
            "certified": self.certified,
            "nodes_explored": self.partitions_checked,
        }


def _partition_distance(graph: Hypergraph, partition: VertexPartition) -> int:
    """|G symmetric-difference T_P| where T_P is the crossing r-graph of P."""
    block_of = partition.block_of
    in_both = 0
    for e in graph.edges:
        blocks = {block_of[v] for v in e}
        if len(blocks) == len(e):
            in_both += 1
    t = turan_count_formula(partition, graph.r)
    return graph.edge_count + t - 2 * in_both


def closeness_to_turan(
    graph: Hypergraph,
    p: int,
    mode: str = "exact",
    seed: int = 0,
    budget: int = DEFAULT_ORACLE_BUDGET,
) -> ClosenessResult:
    """Minimum number of edge edits turning the graph into the crossing
    r-graph of some balanced (p-1)-partition, with a minimizing partition.

    Exact mode enumerates every balanced partition.  Hill-climb mode walks
    balance-preserving vertex swaps from a seeded shuffle and reports a
    non-certified upper bound.
    """
    if p < 2:
        raise InvalidParametersError(f"need p >= 2, got {p}")
    parts = p - 1
    if mode == "exact":
        best: Optional[int] = None
        witness: Optional[VertexPartition] = None
        checked = 0
        for part in _balanced_partitions(graph.n, parts):
            checked += 1
            if checked > budget:
                raise BudgetExceededError(f"partition budget {budget} exhausted", spent=checked)
            d = _partition_distance(graph, part)
            if best is None or d < best:
                best = d
                witness = part
        assert best is not None and witness is not None
        return ClosenessResult(best, witness, True, checked)
    if mode != "hillclimb":
        raise InvalidParametersError(f"mode must be 'exact' or 'hillclimb', got {mode!r}")

    rng = random.Random(seed)
    vertices = list(range(graph.n))
    rng.shuffle(vertices)
    sizes = _balanced_size_multiset(graph.n, parts)
    blocks: list[list[int]] = []
    at = 0
    for s in sizes:
        blocks.append(sorted(vertices[at : at + s]))
        at += s
    current = VertexPartition(blocks)
    dist = _partition_distance(graph, current)
    checked = 1
    improved = True
    while improved:
        improved = False
        base = [list(b) for b in current.blocks]
        for bi in range(parts):
            for bj in range(bi + 1, parts):
                for ii, u in enumerate(base[bi]):
                    for jj, v in enumerate(base[bj]):
                        trial = [list(b) for b in base]
                        trial[bi][ii] = v
                        trial[bj][jj] = u
                        cand = VertexPartition(trial)
                        checked += 1
                        if checked > budget:
                            raise BudgetExceededError(
                                f"swap budget {budget} exhausted", spent=checked
                            )
                        d = _partition_distance(graph, cand)
                        if d < dist:
                            dist = d
                            current = cand
                            improved = True
        # loop until a full sweep finds no improving swap
    return ClosenessResult(dist, current, False, checked)
