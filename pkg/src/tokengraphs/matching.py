"""Exact maximum matchings on general graphs.

One engine serves every instance: breadth-first augmenting-path search with
blossom contraction (O(V^3)). Bipartite inputs take the same path; saturation
and deficiency-set queries are layered on top of a maximum matching instead
of enumerating subsets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .graphs import Bipartition, Graph, GraphError


class MatchingError(ValueError):
    """Raised when a matching fails validation against its host graph."""


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of some host graph."""

    edges: frozenset[tuple[int, int]]

    @staticmethod
    def of(pairs: Iterable[tuple[int, int]]) -> "Matching":
        return Matching(frozenset((u, v) if u < v else (v, u) for u, v in pairs))

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)

    def covers(self, v: int) -> bool:
        return any(v in e for e in self.edges)

    def validate(self, host: Graph) -> None:
        seen: set[int] = set()
        for u, v in self.edges:
            if not host.adjacent(u, v):
                raise MatchingError(f"edge ({u}, {v}) is not in the host graph")
            if u in seen or v in seen:
                raise MatchingError(f"edge ({u}, {v}) reuses a matched vertex")
            seen.add(u)
            seen.add(v)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def max_matching(g: Graph) -> Matching:
    """A maximum matching of ``g`` via blossom contraction.

    Deterministic: greedy seeding and augmenting-path scans run in vertex-id
    order, so identical inputs yield identical matchings.
    """
    n = g.n
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    mate = [-1] * n

    for v in range(n):
        if mate[v] == -1:
            for w in adj[v]:
                if mate[w] == -1:
                    mate[v] = w
                    mate[w] = v
                    break

    parent = [-1] * n
    base = list(range(n))

    def lowest_common_base(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[mate[b]]

    def find_augmenting_from(root: int) -> int:
        """Grow an alternating tree from ``root``; return an exposed endpoint
        of an augmenting path, or -1."""
        nonlocal parent, base
        parent = [-1] * n
        base = list(range(n))
        in_tree = [False] * n
        in_tree[root] = True
        queue = deque([root])

        def contract(v: int, w: int) -> None:
            anchor = lowest_common_base(v, w)
            shrink = [False] * n

            def mark_path(x: int, child: int) -> None:
                while base[x] != anchor:
                    shrink[base[x]] = True
                    shrink[base[mate[x]]] = True
                    parent[x] = child
                    child = mate[x]
                    x = parent[mate[x]]

            mark_path(v, w)
            mark_path(w, v)
            for i in range(n):
                if shrink[base[i]]:
                    base[i] = anchor
                    if not in_tree[i]:
                        in_tree[i] = True
                        queue.append(i)

        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if base[v] == base[w] or mate[v] == w:
                    continue
                if w == root or (mate[w] != -1 and parent[mate[w]] != -1):
                    contract(v, w)
                elif parent[w] == -1:
                    parent[w] = v
                    if mate[w] == -1:
                        return w
                    in_tree[mate[w]] = True
                    queue.append(mate[w])
        return -1

    for root in range(n):
        if mate[root] != -1:
            continue
        end = find_augmenting_from(root)
        while end != -1:
            prev = parent[end]
            next_start = mate[prev]
            mate[end] = prev
            mate[prev] = end
            end = next_start

    return Matching.of((v, mate[v]) for v in range(n) if mate[v] > v)


def brute_force_nu(g: Graph) -> int:
    """Exact matching number by exhaustive recursion; oracle for small graphs."""
    if g.n > 16:
        raise GraphError("brute-force matching is limited to 16 vertices")
    masks = g.adjacency_masks()

    @lru_cache(maxsize=None)
    def best(remaining: int) -> int:
        if remaining == 0:
            return 0
        low = remaining & (-remaining)
        v = low.bit_length() - 1
        value = best(remaining & ~low)  # v stays unmatched
        partners = masks[v] & remaining
        while partners:
            wbit = partners & (-partners)
            partners ^= wbit
            value = max(value, 1 + best(remaining & ~low & ~wbit))
        return value

    return best((1 << g.n) - 1)


def is_perfect(m: Matching, g: Graph) -> bool:
    """True iff the matching covers every vertex."""
    m.validate(g)
    return 2 * m.size == g.n


def is_almost_perfect(m: Matching, g: Graph) -> bool:
    """True iff the matching covers all vertices but one."""
    m.validate(g)
    return 2 * m.size == g.n - 1


def saturates(g: Graph, part: Bipartition, side: str) -> bool:
    """Whether some matching covers every vertex of the chosen side.

    Equivalent to Hall's condition for that side, decided through a single
    maximum matching rather than subset enumeration.
    """
    part.validate(g)
    return part.side(side) <= max_matching(g).vertices


def hall_witness(g: Graph, part: Bipartition, side: str) -> frozenset[int] | None:
    """A set S within ``side`` with |N(S)| < |S|, or None when the side saturates.

    The witness is the canonical deficiency set: all side vertices reachable
    by alternating paths from the unmatched ones.
    """
    part.validate(g)
    side_set = part.side(side)
    mate: dict[int, int] = {}
    for u, v in max_matching(g).edges:
        mate[u] = v
        mate[v] = u
    exposed = sorted(v for v in side_set if v not in mate)
    if not exposed:
        return None
    reached_side = set(exposed)
    reached_other: set[int] = set()
    frontier = exposed
    while frontier:
        nxt = []
        for s in frontier:
            for w in sorted(g.neighbors(s)):
                if w in reached_other:
                    continue
                reached_other.add(w)
                back = mate.get(w)
                # w must be matched, else the path augments a maximum matching
                assert back is not None
                if back not in reached_side:
                    reached_side.add(back)
                    nxt.append(back)
        frontier = nxt
    assert len(reached_other) < len(reached_side)
    return frozenset(reached_side)


@dataclass(frozen=True)
class FractionBound:
    """A rational lower bound on (matching size) / (half the vertex count)."""

    value: Fraction
    kind: str  # "exact" | "lower-bound" | "vacuous"


def matching_fraction_bound(n: int, k: int) -> FractionBound:
    """Lower bound on nu(F_k(G)) / C(n,k) for bases with nu(G) = floor(n/2).

    Even n with odd k is the exact case (ratio 1/2); even n with even k uses
    exponent k/2; odd n uses exponent floor(k/2), which is vacuous at k = 1.
    """
    if not 1 <= k <= n - 1:
        raise GraphError(f"k={k} out of range for n={n}")
    if n % 2 == 0 and k % 2 == 1:
        return FractionBound(Fraction(1, 2), "exact")
    value = (1 - Fraction(k, n) ** (k // 2)) / 2
    kind = "vacuous" if value == 0 else "lower-bound"
    return FractionBound(value, kind)
