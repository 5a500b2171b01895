"""Shared graph builders and the randomized soundness corpus."""

from __future__ import annotations

import random

import pytest

from alphabound.families import complete_bipartite, xm_graph
from alphabound.geometry import er_graph, incidence_graph_with_polarity
from alphabound.graphcore import Graph

RANDOM_SEED = 20240517
RANDOM_COUNT = 200
RANDOM_MAX_N = 12
EDGE_PROB = 0.3
LOOP_PROB = 0.2


def cycle(n: int) -> Graph:
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.build(10, outer + inner + spokes)


def random_corpus() -> list[Graph]:
    rng = random.Random(RANDOM_SEED)
    graphs = []
    for _ in range(RANDOM_COUNT):
        n = rng.randint(1, RANDOM_MAX_N)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < EDGE_PROB
        ]
        loops = [v for v in range(n) if rng.random() < LOOP_PROB]
        graphs.append(Graph.build(n, edges, loops))
    return graphs


def named_families() -> list[tuple[str, Graph]]:
    out = []
    for q in (2, 3, 4, 5, 7):
        for mode in ("keep", "drop_loops", "drop_absolute_vertices"):
            out.append((f"er({q},{mode})", er_graph(q, mode)))
        out.append((f"incidence({q})", incidence_graph_with_polarity(q)[0]))
    for a in range(1, 8):
        for b in range(a + 1, 9):
            out.append((f"kab({a},{b})", complete_bipartite(a, b)))
    for m in range(2, 7):
        out.append((f"xm({m})", xm_graph(m)))
    return out


@pytest.fixture(scope="session")
def corpus_random() -> list[Graph]:
    return random_corpus()


@pytest.fixture(scope="session")
def corpus_named() -> list[tuple[str, Graph]]:
    return named_families()
