"""Core value types: uniform hypergraphs, edge colorings, embeddings, JSON io.

Vertices are the integers 0..n-1.  Edges are sorted tuples of distinct
vertices and the edge list is kept in lexicographic order, so iteration,
serialization and every search built on top are deterministic.  All values
are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import (
    EdgeNotPresentError,
    InvalidParametersError,
    ParseError,
)

Edge = tuple[int, ...]


def _normalize_edge(edge: Sequence[int], r: int, n: int) -> Edge:
    e = tuple(sorted(int(v) for v in edge))
    if len(e) != r or len(set(e)) != r:
        raise InvalidParametersError(f"edge {list(edge)} must have exactly {r} distinct vertices")
    if e and (e[0] < 0 or e[-1] >= n):
        raise InvalidParametersError(f"edge {list(edge)} has a vertex outside [0, {n})")
    return e


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices 0..n-1.

    2-graphs are the r=2 case; the same type carries skeletons and their
    expansions.  ``edges`` is always lexicographically sorted.
    """

    n: int
    r: int
    edges: tuple[Edge, ...]

    def __init__(self, n: int, r: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InvalidParametersError(f"vertex count must be nonnegative, got {n}")
        if r < 0:
            raise InvalidParametersError(f"uniformity must be nonnegative, got {r}")
        normalized = sorted(_normalize_edge(e, r, n) for e in edges)
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise InvalidParametersError(f"duplicate edge {list(a)}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "edges", tuple(normalized))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, edge: Sequence[int]) -> bool:
        return tuple(sorted(edge)) in self.edge_set

    def vertices(self) -> range:
        return range(self.n)

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "Hypergraph":
        """New hypergraph with ``extra`` added (duplicates rejected)."""
        return Hypergraph(self.n, self.r, list(self.edges) + [tuple(e) for e in extra])

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Hypergraph(n={self.n}, r={self.r}, m={self.edge_count})"


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    """The complete r-graph on n vertices: every r-subset of 0..n-1."""
    if r < 0 or r > n:
        raise InvalidParametersError(f"need 0 <= r <= n, got r={r}, n={n}")
    return Hypergraph(n, r, combinations(range(n), r))


def codegree(graph: Hypergraph, subset: Iterable[int]) -> int:
    """Number of edges of ``graph`` containing every vertex of ``subset``."""
    want = set(int(v) for v in subset)
    for v in want:
        if v < 0 or v >= graph.n:
            raise InvalidParametersError(f"vertex {v} outside [0, {graph.n})")
    return sum(1 for e in graph.edges if want.issubset(e))


def remove_edges(graph: Hypergraph, doomed: Iterable[Sequence[int]]) -> Hypergraph:
    """Copy of ``graph`` with the listed edges removed; n and r are kept."""
    gone: list[Edge] = []
    for e in doomed:
        t = tuple(sorted(int(v) for v in e))
        if t not in graph.edge_set:
            raise EdgeNotPresentError(f"edge {list(t)} not present")
        gone.append(t)
    gone_set = set(gone)
    if len(gone_set) != len(gone):
        raise EdgeNotPresentError("edge listed for removal twice")
    return Hypergraph(graph.n, graph.r, [e for e in graph.edges if e not in gone_set])


@dataclass(frozen=True)
class EdgeColoring:
    """A total map from the edges of ``host`` to color ids 0..color_count-1.

    Color ids are normalized on construction: the distinct input ids are
    renumbered, in ascending order, onto a contiguous 0-based range.  Only
    the partition of edges into color classes matters to every consumer.
    """

    host: Hypergraph
    colors: tuple[int, ...]  # aligned with host.edges
    color_count: int

    def __init__(self, host: Hypergraph, colors: Mapping[Edge, int] | Sequence[int]):
        if isinstance(colors, Mapping):
            lookup = {tuple(sorted(e)): int(c) for e, c in colors.items()}
            missing = [e for e in host.edges if e not in lookup]
            if missing:
                raise InvalidParametersError(f"coloring misses edge {list(missing[0])}")
            if len(lookup) != host.edge_count:
                extra = set(lookup) - host.edge_set
                raise InvalidParametersError(f"coloring has non-host edge {sorted(extra)[:1]}")
            raw = [lookup[e] for e in host.edges]
        else:
            raw = [int(c) for c in colors]
            if len(raw) != host.edge_count:
                raise InvalidParametersError(
                    f"expected {host.edge_count} colors, got {len(raw)}"
                )
        if any(c < 0 for c in raw):
            raise InvalidParametersError("color ids must be nonnegative")
        remap = {c: i for i, c in enumerate(sorted(set(raw)))}
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "colors", tuple(remap[c] for c in raw))
        object.__setattr__(self, "color_count", len(remap))

    @cached_property
    def _index(self) -> dict[Edge, int]:
        return {e: c for e, c in zip(self.host.edges, self.colors)}

    def color_of(self, edge: Sequence[int]) -> int:
        key = tuple(sorted(edge))
        try:
            return self._index[key]
        except KeyError:
            raise EdgeNotPresentError(f"edge {list(key)} not in host") from None

    def color_classes(self) -> list[list[Edge]]:
        """Edges grouped by color; class lists keep lexicographic edge order."""
        out: list[list[Edge]] = [[] for _ in range(self.color_count)]
        for e, c in zip(self.host.edges, self.colors):
            out[c].append(e)
        return out

    def to_json_dict(self) -> dict:
        return {
            "host": self.host.to_json_dict(),
            "colors": [
                {"edge": list(e), "color": c} for e, c in zip(self.host.edges, self.colors)
            ],
        }

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"EdgeColoring(m={self.host.edge_count}, colors={self.color_count})"


@dataclass(frozen=True)
class EmbeddingMap:
    """An injective vertex map carrying each pattern edge to a host edge."""

    pattern_to_host: tuple[tuple[int, int], ...]  # sorted by pattern vertex
    matched_edges: tuple[Edge, ...]  # one host edge per pattern edge, pattern order

    def __init__(self, pattern_to_host: Mapping[int, int], matched_edges: Sequence[Sequence[int]]):
        pairs = tuple(sorted((int(p), int(h)) for p, h in pattern_to_host.items()))
        images = [h for _, h in pairs]
        if len(set(images)) != len(images):
            raise InvalidParametersError("vertex map must be injective")
        object.__setattr__(self, "pattern_to_host", pairs)
        object.__setattr__(
            self, "matched_edges", tuple(tuple(sorted(int(v) for v in e)) for e in matched_edges)
        )

    @cached_property
    def as_dict(self) -> dict[int, int]:
        return dict(self.pattern_to_host)

    def check_against(self, pattern: Hypergraph, host: Hypergraph) -> None:
        """Raise unless each pattern edge maps exactly onto its matched host edge."""
        m = self.as_dict
        if len(self.matched_edges) != pattern.edge_count:
            raise InvalidParametersError("one matched host edge per pattern edge required")
        for pe, he in zip(pattern.edges, self.matched_edges):
            if tuple(sorted(m[v] for v in pe)) != he:
                raise InvalidParametersError(f"pattern edge {list(pe)} does not map onto {list(he)}")
            if he not in host.edge_set:
                raise InvalidParametersError(f"matched edge {list(he)} missing from host")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _load_json(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None


def hypergraph_from_json_dict(doc: object) -> Hypergraph:
    if not isinstance(doc, dict) or not {"n", "r", "edges"} <= set(doc):
        raise ParseError("hypergraph document needs keys n, r, edges")
    try:
        return Hypergraph(doc["n"], doc["r"], doc["edges"])
    except InvalidParametersError as exc:
        raise ParseError(str(exc)) from None


def parse_hypergraph(text: str) -> Hypergraph:
    return hypergraph_from_json_dict(_load_json(text))


def serialize_hypergraph(graph: Hypergraph) -> str:
    return json.dumps(graph.to_json_dict())


def coloring_from_json_dict(doc: object) -> EdgeColoring:
    if not isinstance(doc, dict) or not {"host", "colors"} <= set(doc):
        raise ParseError("coloring document needs keys host, colors")
    host = hypergraph_from_json_dict(doc["host"])
    seen: dict[Edge, int] = {}
    entries = doc["colors"]
    if not isinstance(entries, list):
        raise ParseError("colors must be a list of {edge, color} records")
    for i, rec in enumerate(entries):
        if not isinstance(rec, dict) or "edge" not in rec or "color" not in rec:
            raise ParseError(f"colors[{i}] needs keys edge, color")
        e = tuple(sorted(int(v) for v in rec["edge"]))
        if e in seen:
            raise ParseError(f"colors[{i}]: edge {list(e)} colored twice")
        if e not in host.edge_set:
            raise ParseError(f"colors[{i}]: edge {list(e)} not in host")
        c = int(rec["color"])
        if c < 0:
            raise ParseError(f"colors[{i}]: negative color id")
        seen[e] = c
    if len(seen) != host.edge_count:
        missing = next(iter(host.edge_set - set(seen)))
        raise ParseError(f"coloring misses edge {list(missing)}")
    return EdgeColoring(host, seen)


def parse_coloring(text: str) -> EdgeColoring:
    return coloring_from_json_dict(_load_json(text))


def serialize_coloring(coloring: EdgeColoring) -> str:
    return json.dumps(coloring.to_json_dict())
