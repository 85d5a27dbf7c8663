from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tokengraphs.graphs import (
    Graph,
    GraphError,
    bipartition_of,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    erdos_renyi,
    matching_graph,
    path_graph,
    star_graph,
)
from tokengraphs.independence import (
    BoundsPair,
    Budget,
    BudgetExceededError,
    beta_via_saturation,
    brute_force_mis,
    independence_number,
    max_independent_set,
    recursive_bounds,
    token_independence_number,
    vertex_transitive_bound,
)
from tokengraphs.matching import max_matching
from tokengraphs.tokens import token_bipartition, token_graph


# -- solver vs oracle -------------------------------------------------------


def test_brute_force_examples():
    assert brute_force_mis(cycle_graph(5)) == 2
    assert brute_force_mis(Graph(6, [])) == 6
    assert brute_force_mis(token_graph(path_graph(4), 2).graph) == 4


def test_brute_force_rejects_large():
    with pytest.raises(GraphError):
        brute_force_mis(Graph(27, []))


def test_solver_examples():
    assert token_independence_number(cycle_graph(5), 2) == 5
    assert token_independence_number(complete_graph(7), 3) == 7
    assert token_independence_number(complete_bipartite_graph(3, 3), 2) == 9


def test_solver_equals_brute_on_random_corpus():
    for seed in range(90):
        g = erdos_renyi(5 + seed % 14, (0.1, 0.3, 0.5)[seed % 3], seed)
        assert independence_number(g) == brute_force_mis(g), f"seed={seed}"


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_solver_equals_brute_property(seed):
    g = erdos_renyi(4 + seed % 12, 0.35, seed)
    found = max_independent_set(g)
    found.validate(g)
    assert found.size == brute_force_mis(g)


def test_solver_is_deterministic():
    g = erdos_renyi(18, 0.25, 3)
    assert max_independent_set(g) == max_independent_set(g)
    t = token_graph(cycle_graph(9), 2)
    assert max_independent_set(t.graph) == max_independent_set(t.graph)


def test_koenig_gallai_duality_on_bipartite():
    # on a bipartite graph the independence and matching numbers are
    # complementary through the vertex count
    for seed in range(25):
        import random

        rng = random.Random(seed)
        m, n = rng.randint(2, 5), rng.randint(2, 5)
        edges = [(i, m + j) for i in range(m) for j in range(n) if rng.random() < 0.45]
        g = Graph(m + n, edges)
        assert independence_number(g) + max_matching(g).size == g.n


def test_perfect_matching_bipartite_bases_odd_k():
    # supergraphs of a disjoint perfect matching, kept bipartite: every odd
    # token count gives independence exactly half the token count
    import random

    for seed in range(8):
        rng = random.Random(seed)
        m = rng.randint(2, 4)
        g = matching_graph(m, 0)
        extra = [
            (2 * i, 2 * j + 1)
            for i in range(m)
            for j in range(m)
            if i != j and rng.random() < 0.4
        ]
        richer = Graph(g.n, list(g.edges) + extra)
        for k in range(1, richer.n, 2):
            assert 2 * token_independence_number(richer, k) == comb(richer.n, k), (
                seed,
                k,
            )


def test_budget_node_limit_aborts():
    t = token_graph(cycle_graph(11), 2)
    with pytest.raises(BudgetExceededError):
        max_independent_set(t.graph, Budget(node_limit=1))


def test_budget_generous_limit_succeeds():
    t = token_graph(cycle_graph(9), 2)
    found = max_independent_set(t.graph, Budget(seconds=60, node_limit=10_000_000))
    assert found.size == 18


# -- saturation shortcut ----------------------------------------------------


def test_saturation_route_k33():
    t = token_graph(complete_bipartite_graph(3, 3), 2)
    classes = token_bipartition(t, bipartition_of(t.base))
    assert beta_via_saturation(t, classes) == 9


def test_saturation_route_matching_graphs():
    for m in range(1, 4):
        for s in (0, 1):
            g = matching_graph(m, s)
            if g.n < 3:
                continue
            base = bipartition_of(g)
            for k in range(1, g.n):
                t = token_graph(g, k)
                classes = token_bipartition(t, base)
                value = beta_via_saturation(t, classes)
                assert value == max(len(classes.part_b), len(classes.part_r))
                assert value == independence_number(t.graph)


def test_saturation_route_inconclusive_on_counterexample():
    # a parts-2/5 graph whose 2-token independence beats both classes
    from tokengraphs.formulas import counterexample_scan_2x5

    hit = counterexample_scan_2x5(require_no_isolated=True)[0]
    t = token_graph(hit.graph, 2)
    classes = token_bipartition(t, bipartition_of(hit.graph))
    assert beta_via_saturation(t, classes) is None
    assert independence_number(t.graph) == hit.beta > 11


def test_saturation_matches_solver_wherever_conclusive(small_named):
    for _, g in small_named:
        base = bipartition_of(g)
        if base is None or g.n < 3:
            continue
        for k in range(1, g.n):
            t = token_graph(g, k)
            value = beta_via_saturation(t, token_bipartition(t, base))
            if value is not None:
                assert value == independence_number(t.graph)


# -- recursive bounds -------------------------------------------------------


def test_bounds_pair_validates():
    with pytest.raises(ValueError):
        BoundsPair(lower=3, upper=2)
    assert BoundsPair(2, 5).contains(3)


def test_recursive_bounds_c5():
    bounds = recursive_bounds(cycle_graph(5), 2)
    assert bounds.lower == 3 and bounds.upper == 5
    assert bounds.contains(token_independence_number(cycle_graph(5), 2))


def test_recursive_bounds_lower_tight_at_claw():
    bounds = recursive_bounds(star_graph(3), 2)
    assert bounds.lower == 3 == token_independence_number(star_graph(3), 2)


def test_recursive_bounds_upper_tight_at_k4():
    bounds = recursive_bounds(complete_graph(4), 2)
    assert bounds.upper == 2 == token_independence_number(complete_graph(4), 2)


def test_recursive_bounds_sandwich_small_corpus(small_named):
    cache = {}

    def beta(h, j):
        key = (h, j)
        if key not in cache:
            cache[key] = token_independence_number(h, j)
        return cache[key]

    for name, g in small_named:
        if g.n > 6:
            continue
        for k in range(2, g.n):
            bounds = recursive_bounds(g, k, beta_oracle=beta)
            assert bounds.contains(beta(g, k)), (name, k)


def test_recursive_bounds_rejects_bad_k():
    with pytest.raises(GraphError):
        recursive_bounds(path_graph(4), 1)


def test_vertex_transitive_bound_cycles():
    assert vertex_transitive_bound(cycle_graph(7), 2, 0) == 10
    assert vertex_transitive_bound(cycle_graph(5), 2, 0) == 5


def test_vertex_transitive_bound_johnson():
    # both one-smaller Johnson values give 7 here, so the bound is exact
    bound = vertex_transitive_bound(complete_graph(7), 3, 0)
    assert bound == 7 == token_independence_number(complete_graph(7), 3)


def test_vertex_transitive_bound_rejects_irregular():
    with pytest.raises(GraphError):
        vertex_transitive_bound(path_graph(5), 2, 0)
