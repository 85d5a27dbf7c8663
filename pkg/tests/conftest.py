"""Shared corpora for the test suite: named small graphs plus seeded
random graphs, all deterministic."""

from __future__ import annotations

import pytest

from tokengraphs.graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    erdos_renyi,
    matching_graph,
    path_graph,
    star_graph,
)


def named_graphs(max_order: int) -> list[tuple[str, Graph]]:
    """The standard families up to a given order, labeled for test ids."""
    out: list[tuple[str, Graph]] = []
    out.extend((f"P{p}", path_graph(p)) for p in range(2, max_order + 1))
    out.extend((f"C{p}", cycle_graph(p)) for p in range(3, max_order + 1))
    out.extend((f"K{p}", complete_graph(p)) for p in range(2, min(6, max_order) + 1))
    out.extend((f"K_1_{n}", star_graph(n)) for n in range(2, max_order))
    for m in range(2, max_order // 2 + 1):
        for n in range(m, max_order - m + 1):
            out.append((f"K_{m}_{n}", complete_bipartite_graph(m, n)))
    for m in range(1, max_order // 2 + 1):
        for s in (0, 1):
            if 2 <= 2 * m + s <= max_order:
                out.append((f"M_{m}_{s}", matching_graph(m, s)))
    return out


def random_graphs(count: int, max_n: int, seed_base: int = 0) -> list[Graph]:
    densities = (0.15, 0.3, 0.5)
    out = []
    for i in range(count):
        n = 3 + (seed_base + i) % (max_n - 2)
        out.append(erdos_renyi(n, densities[i % 3], seed_base + i))
    return out


@pytest.fixture(scope="session")
def small_named():
    return named_graphs(8)
