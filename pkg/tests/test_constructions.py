"""Expansion, Turán construction, and lower-bound coloring contracts."""

import random
from itertools import combinations
from math import prod

import pytest

from antiramsey.constructions import (
    balanced_partition,
    expansion,
    lower_bound_coloring_general,
    lower_bound_coloring_r3,
    trivial_lower_bound_coloring,
    turan_count,
    turan_hypergraph,
)
from antiramsey.errors import DegenerateConstructionError, InvalidParametersError
from antiramsey.hypergraph import Hypergraph
from antiramsey.oracles import ex_bruteforce

from conftest import random_graph


class TestExpansion:
    def test_examples(self, k3, k4):
        assert expansion(k3, 3).hypergraph.n == 6
        assert expansion(k3, 3).hypergraph.edge_count == 3
        assert expansion(k4, 3).hypergraph.n == 10
        assert expansion(k4, 3).hypergraph.edge_count == 6
        p2 = Hypergraph(3, 2, [(0, 1), (1, 2)])
        assert expansion(p2, 4).hypergraph.n == 7
        assert expansion(p2, 4).hypergraph.edge_count == 2

    def test_r2_is_identity(self, k4):
        assert expansion(k4, 2).hypergraph == k4

    def test_r1_rejected(self, k3):
        with pytest.raises(InvalidParametersError):
            expansion(k3, 1)

    def test_vertex_count_formula_random(self):
        rng = random.Random(31)
        for _ in range(100):
            g = random_graph(rng.randint(1, 8), 0.5, rng)
            r = rng.randint(2, 5)
            result = expansion(g, r)
            assert result.hypergraph.n == g.n + (r - 2) * g.edge_count

    def test_expanded_edges_meet_like_skeleton_edges(self):
        rng = random.Random(32)
        for _ in range(100):
            g = random_graph(rng.randint(2, 8), 0.5, rng)
            r = rng.randint(3, 4)
            result = expansion(g, r)
            back = {e: se for e, se in result.edge_provenance.items()}
            for e1, e2 in combinations(result.hypergraph.edges, 2):
                shared = set(e1) & set(e2)
                skeleton_shared = set(back[e1]) & set(back[e2])
                assert shared == skeleton_shared

    def test_provenance_covers_edges(self, k4):
        result = expansion(k4, 3)
        assert set(result.edge_provenance) == set(result.hypergraph.edges)
        assert sorted(result.edge_provenance.values()) == list(k4.edges)


class TestTuran:
    def test_examples(self):
        assert turan_count(6, 4, 3) == 8
        assert turan_count(9, 4, 2) == 27
        assert turan_count(10, 5, 4) == 36

    def test_block_sizes_balanced(self):
        for n in range(0, 13):
            for p in range(2, 7):
                part = turan_hypergraph(n, p, 2).partition
                sizes = [len(b) for b in part.blocks]
                assert sizes == sorted(sizes)
                assert sizes[-1] - sizes[0] <= 1
                assert len(sizes) == p - 1

    def test_count_matches_formula_grid(self):
        """Enumerated crossing sets vs block-size products, full small grid."""
        for p in range(3, 7):
            for r in range(2, p):
                for n in range(0, 13):
                    result = turan_hypergraph(n, p, r)
                    sizes = [len(b) for b in result.partition.blocks]
                    want = sum(prod(c) for c in combinations(sizes, r))
                    assert result.count == want

    def test_edges_cross_every_block_at_most_once(self):
        result = turan_hypergraph(10, 4, 3)
        block_of = result.partition.block_of
        for e in result.hypergraph.edges:
            blocks = [block_of[v] for v in e]
            assert len(set(blocks)) == len(blocks)

    def test_r_exceeding_blocks_gives_empty(self):
        assert turan_count(8, 3, 3) == 0

    def test_bad_params(self):
        with pytest.raises(InvalidParametersError):
            turan_hypergraph(5, 1, 2)


class TestTrivialColoring:
    def test_matching_extremal(self, k3):
        extremal = Hypergraph(5, 2, [(0, 1), (2, 3)])
        coloring = trivial_lower_bound_coloring(5, 2, k3, extremal)
        assert coloring.color_count == 3

    def test_empty_extremal(self, k3):
        coloring = trivial_lower_bound_coloring(4, 2, k3, Hypergraph(4, 2, []))
        assert coloring.color_count == 1

    def test_oracle_certified_extremal(self, k3):
        p2_expanded = expansion(Hypergraph(3, 2, [(0, 1), (1, 2)]), 3).hypergraph
        report = ex_bruteforce(6, 3, [p2_expanded])
        coloring = trivial_lower_bound_coloring(6, 3, k3, report.witness)
        assert coloring.color_count == report.value + 1

    def test_non_subgraph_rejected(self, k3):
        with pytest.raises(InvalidParametersError):
            trivial_lower_bound_coloring(4, 2, k3, Hypergraph(5, 2, [(0, 4)]))


class TestLowerBoundR3:
    def test_color_counts(self):
        assert lower_bound_coloring_r3(6, 4, 2).color_count == 9
        assert lower_bound_coloring_r3(6, 4, 4).color_count == 11
        assert lower_bound_coloring_r3(15, 4, 2).color_count == 126

    def test_turan_edges_rainbow_and_heavy_classes_disjoint(self):
        coloring = lower_bound_coloring_r3(9, 4, 4)
        turan = turan_hypergraph(9, 4, 3)
        seen = set()
        for e in turan.hypergraph.edges:
            c = coloring.color_of(e)
            assert c not in seen
            seen.add(c)
        masks = turan.partition.block_masks
        for e in coloring.host.edges:
            if e in turan.hypergraph.edge_set:
                continue
            c = coloring.color_of(e)
            heavy = [
                i
                for i in range(2)
                if sum(1 for v in e if (masks[i] >> v) & 1) >= 2
            ]
            if heavy:
                assert c == turan.count + heavy[0]
            else:
                assert c == turan.count + 2

    def test_degenerate_when_blocks_too_small(self):
        # p=4 on n=3 has singleton blocks: no block holds an edge twice
        with pytest.raises(DegenerateConstructionError):
            lower_bound_coloring_r3(3, 4, 3)

    def test_param_validation(self):
        with pytest.raises(InvalidParametersError):
            lower_bound_coloring_r3(10, 3, 2)
        with pytest.raises(InvalidParametersError):
            lower_bound_coloring_r3(10, 4, 5)


class TestLowerBoundGeneral:
    def test_color_counts(self):
        assert lower_bound_coloring_general(8, 5, 4).color_count == 17
        assert lower_bound_coloring_general(10, 5, 4).color_count == 37
        assert lower_bound_coloring_general(9, 6, 4).color_count == turan_count(9, 6, 4) + 1

    def test_param_validation(self):
        with pytest.raises(InvalidParametersError):
            lower_bound_coloring_general(10, 4, 4)  # needs p > r
        with pytest.raises(InvalidParametersError):
            lower_bound_coloring_general(10, 5, 3)


class TestBalancedPartition:
    def test_sizes(self):
        part = balanced_partition(10, 4)
        assert [len(b) for b in part.blocks] == [2, 2, 3, 3]
        assert balanced_partition(6, 3).blocks == ((0, 1), (2, 3), (4, 5))
