"""Exact maximum independent sets and the recursive token-graph bounds.

The solver is a bitmask branch-and-bound: connected components are solved
independently, degree-0/degree-1 vertices are taken greedily (exact
reductions), and branching picks the busiest candidate vertex with the
include branch first. Upper bounds come from clique covers, computed exactly
through a maximum matching on 2-colorable components (minimum clique cover
is vertex count minus matching number there) and greedily elsewhere. A
brute-force enumerator backs the solver as an independent oracle.
"""

from __future__ import annotations

import sys
import time
from collections import deque
from dataclasses import dataclass
from typing import Callable

from .graphs import Bipartition, Graph, GraphError, delete_vertices
from .matching import saturates
from .tokens import TokenGraph, token_graph


class BudgetExceededError(RuntimeError):
    """Raised when a solver runs out of its time or node budget.

    The solver never degrades to a suboptimal answer; it aborts instead.
    """


@dataclass(frozen=True)
class Budget:
    """Per-call resource ceiling for the exact solvers."""

    seconds: float | None = None
    node_limit: int | None = None


class _BudgetClock:
    __slots__ = ("deadline", "node_limit", "nodes")

    def __init__(self, budget: Budget | None):
        self.nodes = 0
        self.deadline = None
        self.node_limit = None
        if budget is not None:
            if budget.seconds is not None:
                self.deadline = time.monotonic() + budget.seconds
            self.node_limit = budget.node_limit

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceededError(f"search aborted after {self.nodes} nodes")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceededError("search aborted on time budget")


@dataclass(frozen=True)
class IndependentSet:
    """A set of pairwise nonadjacent vertices of some host graph."""

    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def validate(self, host: Graph) -> None:
        for v in self.vertices:
            if not 0 <= v < host.n:
                raise GraphError(f"vertex {v} outside the host graph")
            if host.neighbors(v) & self.vertices:
                raise GraphError(f"vertex {v} has a neighbor inside the set")

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)


@dataclass(frozen=True)
class BoundsPair:
    """Lower and upper bounds bracketing an independence number."""

    lower: int
    upper: int

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"bounds crossed: {self.lower} > {self.upper}")

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper


def _bit_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & (-mask)
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _component_masks(n: int, masks: tuple[int, ...]) -> list[int]:
    remaining = (1 << n) - 1
    comps = []
    while remaining:
        comp = remaining & (-remaining)
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & (-m)
                m ^= low
                nxt |= masks[low.bit_length() - 1]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def _two_color(comp: int, masks: tuple[int, ...]) -> int | None:
    """Color mask of one class of a connected subgraph, or None if odd cycle."""
    root = comp & (-comp)
    color0, color1 = root, 0
    frontier, colored, side = root, root, 0
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & (-m)
            m ^= low
            nxt |= masks[low.bit_length() - 1]
        nxt &= comp & ~colored
        if side == 0:
            color1 |= nxt
        else:
            color0 |= nxt
        colored |= nxt
        frontier = nxt
        side ^= 1
    for v in _bit_list(comp):
        own = color0 if (color0 >> v) & 1 else color1
        if masks[v] & own & comp:
            return None
    return color0


def _greedy_seed(comp: int, masks: tuple[int, ...]) -> int:
    """Deterministic maximal independent set: repeatedly take the vertex of
    least remaining degree (ties to the lowest id)."""
    cand = comp
    chosen = 0
    while cand:
        pick, pick_deg = -1, 1 << 62
        m = cand
        while m:
            low = m & (-m)
            m ^= low
            v = low.bit_length() - 1
            d = (masks[v] & cand).bit_count()
            if d < pick_deg:
                pick, pick_deg = v, d
        chosen |= 1 << pick
        cand &= ~(masks[pick] | (1 << pick))
    return chosen


def _clique_cover_bound(cand: int, masks: tuple[int, ...]) -> int:
    cliques: list[int] = []
    m = cand
    while m:
        low = m & (-m)
        m ^= low
        nb = masks[low.bit_length() - 1]
        for i, c in enumerate(cliques):
            if c & ~nb == 0:
                cliques[i] = c | low
                break
        else:
            cliques.append(low)
    return len(cliques)


def _bipartite_matching_size(cand: int, masks: tuple[int, ...], left_mask: int) -> int:
    """Maximum matching of the induced subgraph on ``cand`` (Hopcroft-Karp)."""
    left = _bit_list(cand & left_mask)
    if not left:
        return 0
    adj = {u: _bit_list(masks[u] & cand) for u in left}
    pair: dict[int, int] = {}
    for u in left:
        for w in adj[u]:
            if w not in pair:
                pair[u] = w
                pair[w] = u
                break
    size = sum(1 for u in left if u in pair)

    while True:
        dist = {u: 0 for u in left if u not in pair}
        queue = deque(dist)
        free_reachable = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                x = pair.get(w)
                if x is None:
                    free_reachable = True
                elif x not in dist:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if not free_reachable:
            return size

        def augment(u: int) -> bool:
            du = dist[u]
            for w in adj[u]:
                x = pair.get(w)
                if x is None or (dist.get(x) == du + 1 and augment(x)):
                    pair[u] = w
                    pair[w] = u
                    return True
            del dist[u]
            return False

        for u in [u for u in left if u not in pair]:
            if u in dist and augment(u):
                size += 1


def _solve_component(comp: int, masks: tuple[int, ...], clock: _BudgetClock) -> int:
    if comp & (comp - 1) == 0:
        return comp
    left_mask = _two_color(comp, masks)

    best_mask = _greedy_seed(comp, masks)
    if left_mask is not None:
        one, two = comp & left_mask, comp & ~left_mask
        cls = one if one.bit_count() >= two.bit_count() else two
        if cls.bit_count() > best_mask.bit_count():
            best_mask = cls
    best_size = best_mask.bit_count()

    def rec(cand: int, cur_mask: int, cur_size: int) -> None:
        nonlocal best_mask, best_size
        while True:
            clock.tick()
            # exact reductions: isolated vertices join, degree-1 vertices
            # join and evict their single neighbor
            progressed = True
            while progressed:
                progressed = False
                m = cand
                while m:
                    low = m & (-m)
                    m ^= low
                    if not cand & low:
                        continue
                    nb = masks[low.bit_length() - 1] & cand
                    if nb == 0:
                        cand ^= low
                        cur_mask |= low
                        cur_size += 1
                        progressed = True
                    elif nb & (nb - 1) == 0:
                        cand &= ~(low | nb)
                        cur_mask |= low
                        cur_size += 1
                        progressed = True
            if cand == 0:
                if cur_size > best_size:
                    best_size = cur_size
                    best_mask = cur_mask
                return
            if left_mask is not None:
                bound = cand.bit_count() - _bipartite_matching_size(cand, masks, left_mask)
            else:
                bound = _clique_cover_bound(cand, masks)
            if cur_size + bound <= best_size:
                return
            pick, pick_deg = -1, -1
            m = cand
            while m:
                low = m & (-m)
                m ^= low
                v = low.bit_length() - 1
                d = (masks[v] & cand).bit_count()
                if d > pick_deg:
                    pick, pick_deg = v, d
            vbit = 1 << pick
            rec(cand & ~(masks[pick] | vbit), cur_mask | vbit, cur_size + 1)
            cand &= ~vbit

    rec(comp, 0, 0)
    return best_mask


def max_independent_set(g: Graph, budget: Budget | None = None) -> IndependentSet:
    """A maximum independent set, exactly.

    Deterministic: the branching rule, reductions and seeding are all fixed,
    so the reported set (not just its size) is stable across runs. Raises
    :class:`BudgetExceededError` rather than ever returning a suboptimal set.
    """
    if g.n == 0:
        return IndependentSet(frozenset())
    # include-chain depth plus an augmenting-path DFS both scale with n
    need = 2 * g.n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)
    masks = g.adjacency_masks()
    clock = _BudgetClock(budget)
    chosen = 0
    for comp in _component_masks(g.n, masks):
        chosen |= _solve_component(comp, masks, clock)
    result = IndependentSet(frozenset(_bit_list(chosen)))
    result.validate(g)
    return result


def independence_number(g: Graph, budget: Budget | None = None) -> int:
    return max_independent_set(g, budget).size


def brute_force_mis(g: Graph) -> int:
    """Exact independence number by exhaustive enumeration with mask pruning.

    Oracle for cross-checking the branch-and-bound solver; limited to 26
    vertices.
    """
    if g.n > 26:
        raise GraphError("brute-force independent set is limited to 26 vertices")
    masks = g.adjacency_masks()

    def rec(cand: int) -> int:
        if cand == 0:
            return 0
        low = cand & (-cand)
        rest = cand ^ low
        nb = masks[low.bit_length() - 1] & cand
        if nb == 0:
            return 1 + rec(rest)
        return max(rec(rest), 1 + rec(rest & ~nb))

    return rec((1 << g.n) - 1)


def beta_via_saturation(t: TokenGraph, classes: Bipartition) -> int | None:
    """Independence number of a token graph through the saturation shortcut.

    If the smaller parity class saturates into the larger one, the larger
    class size is the exact answer; otherwise no conclusion (None).
    """
    classes.validate(t.graph)
    small = "b" if len(classes.part_b) <= len(classes.part_r) else "r"
    if saturates(t.graph, classes, small):
        return len(classes.side(Bipartition.other_side(small)))
    return None


def token_independence_number(g: Graph, k: int, budget: Budget | None = None) -> int:
    """Exact independence number of the k-token graph of ``g``."""
    return max_independent_set(token_graph(g, k).graph, budget).size


BetaOracle = Callable[[Graph, int], int]


def _beta_with_conventions(oracle: BetaOracle, h: Graph, j: int) -> int:
    # Degenerate token counts: the empty token set is a single vertex (j == 0),
    # oversized token sets give an empty graph, the full set gives one vertex.
    if j == 0:
        return 1
    if h.n == 0 or j > h.n:
        return 0
    if j == h.n:
        return 1
    return oracle(h, j)


def recursive_bounds(
    g: Graph,
    k: int,
    beta_oracle: BetaOracle | None = None,
    budget: Budget | None = None,
) -> BoundsPair:
    """Bracket the independence number of the k-token graph by recursion on
    vertex deletion.

    Lower: the best single-vertex split, beta over tokens containing v plus
    beta over tokens avoiding N[v]. Upper: the floor of the averaged
    one-smaller-token bound, sum over v of beta(F_{k-1}(G - v)) divided by k.
    """
    n = g.n
    if not 2 <= k <= n - 1:
        raise GraphError(f"k={k} out of range for recursion on order {n}")
    oracle = beta_oracle or (lambda h, j: token_independence_number(h, j, budget))
    lower = 0
    total = 0
    for v in range(n):
        g_minus_v, _ = delete_vertices(g, (v,))
        g_minus_nv, _ = delete_vertices(g, g.closed_neighborhood(v))
        with_v = _beta_with_conventions(oracle, g_minus_v, k - 1)
        without_nv = _beta_with_conventions(oracle, g_minus_nv, k)
        lower = max(lower, with_v + without_nv)
        total += with_v
    return BoundsPair(lower=lower, upper=total // k)


def vertex_transitive_bound(
    g: Graph,
    k: int,
    w: int,
    beta_oracle: BetaOracle | None = None,
    budget: Budget | None = None,
) -> int:
    """Upper bound on the k-token independence number of a vertex-transitive
    graph, from a single vertex deletion.

    Only regularity is checked here; full vertex-transitivity is the
    caller's assertion (it holds for the cycles and complete graphs this is
    used on).
    """
    n = g.n
    if not 2 <= k <= n - 2:
        raise GraphError(f"k={k} out of range for order {n}")
    if not 0 <= w < n:
        raise GraphError(f"vertex {w} outside the graph")
    degs = set(g.degree_sequence())
    if len(degs) > 1:
        raise GraphError("graph is not regular, hence not vertex-transitive")
    oracle = beta_oracle or (lambda h, j: token_independence_number(h, j, budget))
    g_minus_w, _ = delete_vertices(g, (w,))
    smaller = _beta_with_conventions(oracle, g_minus_w, k - 1)
    same = _beta_with_conventions(oracle, g_minus_w, k)
    return min((n * smaller) // k, (n * same) // (n - k))
