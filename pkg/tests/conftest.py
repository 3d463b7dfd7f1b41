"""Shared fixtures: canonical small graphs and cached heavy artifacts."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from antiramsey.hypergraph import Hypergraph, complete_hypergraph


@pytest.fixture(scope="session")
def k3():
    return complete_hypergraph(3, 2)


@pytest.fixture(scope="session")
def k4():
    return complete_hypergraph(4, 2)


@pytest.fixture(scope="session")
def k5():
    return complete_hypergraph(5, 2)


@pytest.fixture(scope="session")
def k6():
    return complete_hypergraph(6, 2)


@pytest.fixture(scope="session")
def bowtie():
    # two triangles sharing vertex 2
    return Hypergraph(5, 2, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.fixture(scope="session")
def path2():
    return Hypergraph(3, 2, [(0, 1), (1, 2)])


@pytest.fixture(scope="session")
def c4():
    return Hypergraph(4, 2, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture(scope="session")
def c5():
    return Hypergraph(5, 2, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


def random_graph(n: int, density: float, rng: random.Random) -> Hypergraph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < density]
    return Hypergraph(n, 2, edges)


def random_hypergraph(n: int, r: int, density: float, rng: random.Random) -> Hypergraph:
    edges = [e for e in combinations(range(n), r) if rng.random() < density]
    return Hypergraph(n, r, edges)
