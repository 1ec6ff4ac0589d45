"""Exact matching size and largest two-matching subgraph on forests.

``beta_tree`` returns the maximum matching size; ``lambda_tree`` the maximum
number of edges in a subgraph whose color classes can form two disjoint
matchings. On a forest the latter reduces to "most edges with every degree
at most 2": such an acyclic subgraph is a disjoint union of paths, and a
path 2-colors properly by alternation. The reduction fails on odd cycles,
which is why both operations hard-require a forest; general graphs are the
oracle module's job.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import NotAForest
from .graph import Edge, Graph, is_forest
from .coloring import Matching, PartialColoring


@dataclass(frozen=True)
class LambdaWitness:
    """A maximum degree-<=2 subgraph together with a proper coloring of it."""

    subgraph: frozenset[Edge]
    coloring: PartialColoring


def _require_forest(g: Graph) -> None:
    if not is_forest(g):
        raise NotAForest("operation requires an acyclic graph")


def beta_tree(g: Graph) -> tuple[int, Matching]:
    """Maximum matching on a forest by repeated leaf matching.

    Always matches the smallest-labeled current leaf to its unique neighbor,
    deletes both, and repeats; isolated vertices are dropped. The fixed leaf
    order makes the witness deterministic.
    """
    _require_forest(g)
    adj: list[set[int]] = [set(ns) for ns in g.adjacency]
    alive = bytearray([1] * g.n)
    heap = [v for v in range(g.n) if len(adj[v]) == 1]
    heapq.heapify(heap)
    matched: list[Edge] = []
    while heap:
        u = heapq.heappop(heap)
        if not alive[u] or len(adj[u]) != 1:
            continue
        v = next(iter(adj[u]))
        matched.append((u, v) if u < v else (v, u))
        alive[u] = alive[v] = 0
        adj[u].clear()
        for x in adj[v]:
            adj[x].discard(v)
            if len(adj[x]) == 1:
                heapq.heappush(heap, x)
        adj[v].clear()
    witness = Matching(frozenset(matched))
    return len(matched), witness


def lambda_tree(g: Graph) -> tuple[int, LambdaWitness]:
    """Maximum two-matching subgraph of a forest, by rooted dynamic programming.

    Per vertex v and cap k in {1, 2}, best(v, k) is the maximum number of
    chosen edges in v's subtree when at most k child edges of v may be
    chosen (cap 1 applies when the edge to v's parent is chosen). Writing
    gain(c) = 1 + best(c, 1) - best(c, 2) for a child c, the optimum takes
    the children with positive gain, at most k of them, smallest labels
    first; gains are always 0 or 1, so the tie-break is just label order.

    The witness coloring alternates 0, 1 along each path of the chosen
    subgraph, starting with 0 at the path's smallest-labeled endpoint.
    """
    _require_forest(g)
    adjacency = g.adjacency
    parent = [-1] * g.n
    seen = bytearray(g.n)
    total = 0
    chosen_edges: list[Edge] = []
    # iterative DFS per component rooted at its smallest vertex
    best1 = [0] * g.n
    best2 = [0] * g.n
    gain_order: list[list[int]] = [[] for _ in range(g.n)]  # children with gain 1, ascending
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = 1
        order = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if not seen[w]:
                    seen[w] = 1
                    parent[w] = v
                    order.append(w)
                    stack.append(w)
        for v in reversed(order):
            base = 0
            positive: list[int] = []
            for c in adjacency[v]:
                if parent[c] != v:
                    continue
                base += best2[c]
                if 1 + best1[c] - best2[c] > 0:
                    positive.append(c)
            gain_order[v] = positive
            best1[v] = base + min(1, len(positive))
            best2[v] = base + min(2, len(positive))
        total += best2[root]
        # reconstruct the chosen edges top-down
        work = [(root, 2)]
        while work:
            v, cap = work.pop()
            take = set(gain_order[v][: min(cap, len(gain_order[v]))])
            for c in adjacency[v]:
                if parent[c] != v:
                    continue
                if c in take:
                    chosen_edges.append((v, c) if v < c else (c, v))
                    work.append((c, 1))
                else:
                    work.append((c, 2))
    coloring = _alternating_coloring(g.n, chosen_edges)
    return total, LambdaWitness(frozenset(chosen_edges), coloring)


def _alternating_coloring(n: int, chosen: list[Edge]) -> PartialColoring:
    """Color a union of disjoint paths by alternation, each path starting 0."""
    neighbor: dict[int, list[int]] = {}
    for a, b in chosen:
        neighbor.setdefault(a, []).append(b)
        neighbor.setdefault(b, []).append(a)
    assignment: dict[Edge, int] = {}
    done: set[int] = set()
    for start in sorted(v for v, ns in neighbor.items() if len(ns) == 1):
        if start in done:
            continue
        done.add(start)
        color = 0
        v = start
        while True:
            nxt = [w for w in neighbor[v] if w not in done]
            if not nxt:
                break
            (w,) = nxt
            assignment[(v, w) if v < w else (w, v)] = color
            color ^= 1
            done.add(w)
            v = w
    assert len(assignment) == len(chosen), "chosen subgraph is not a union of paths"
    return PartialColoring(assignment)
