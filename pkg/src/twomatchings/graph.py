"""Immutable simple undirected graphs with dense integer vertex labels.

The edge-list text format accepted by :func:`parse_edge_list` is one edge
per line ("u v"), blank lines and lines starting with "#" ignored, and an
optional leading header "n <count>" that fixes the vertex count (needed for
trailing isolated vertices, which are never inferred).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    LoopEdge,
    MalformedLine,
    NotATree,
    NotBipartite,
    NotConnected,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalized edge with endpoints in ascending order. Loops are rejected."""
    if u == v:
        raise LoopEdge(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` is a lexicographically sorted tuple of normalized pairs.
    Instances are immutable and hashable; use :meth:`from_edges` to build one
    from unnormalized input.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        prev = None
        for e in self.edges:
            a, b = e
            if not (0 <= a < b < self.n):
                if a == b:
                    raise LoopEdge(f"loop edge at vertex {a}")
                if a > b:
                    raise ValueError(f"edge {e} is not normalized")
                raise VertexOutOfRange(f"edge {e} exceeds vertex count {self.n}")
            if prev is not None and e <= prev:
                raise ValueError("edges must be sorted and free of duplicates")
            prev = e

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
        normalized = sorted({edge(u, v) for u, v in edges})
        if n is None:
            n = 1 + max((b for _, b in normalized), default=-1)
        return cls(n, tuple(normalized))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            neighbors[a].append(b)
            neighbors[b].append(a)
        return tuple(tuple(sorted(ns)) for ns in neighbors)

    def degree(self, v: int) -> int:
        """Number of incident edges."""
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in [0, {self.n})")
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in [0, {self.n})")
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edge_set


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format into a graph.

    Vertex count is 1 + the largest label unless a header "n <count>" appears
    before any edge.
    """
    declared_n: int | None = None
    edges: list[Edge] = []
    max_label = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if edges or declared_n is not None:
                raise MalformedLine("header 'n' must appear once, before any edge", line_no)
            if len(tokens) != 2:
                raise MalformedLine("header must be 'n <count>'", line_no)
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise MalformedLine(f"non-integer vertex count {tokens[1]!r}", line_no) from None
            if declared_n < 0:
                raise MalformedLine("vertex count must be nonnegative", line_no)
            continue
        if len(tokens) != 2:
            raise MalformedLine(f"expected 'u v', got {len(tokens)} tokens", line_no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise MalformedLine(f"non-integer token in {line!r}", line_no) from None
        if u < 0 or v < 0:
            raise MalformedLine(f"negative vertex label in {line!r}", line_no)
        if u == v:
            raise LoopEdge(f"loop edge at vertex {u}", line_no)
        if declared_n is not None and max(u, v) >= declared_n:
            raise MalformedLine(
                f"label {max(u, v)} exceeds declared vertex count {declared_n}", line_no
            )
        edges.append(edge(u, v))
        max_label = max(max_label, u, v)
    n = declared_n if declared_n is not None else max_label + 1
    return Graph.from_edges(edges, n=n)


def serialize_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list`; always emits the "n" header."""
    lines = [f"n {g.n}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def _reached_from(g: Graph, start: int) -> list[int]:
    """BFS order from ``start``; neighbors visited in ascending label order."""
    seen = bytearray(g.n)
    seen[start] = 1
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = 1
                order.append(w)
                queue.append(w)
    return order


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(_reached_from(g, 0)) == g.n


def is_tree(g: Graph) -> bool:
    """Connected and |E| = n - 1."""
    return g.n >= 1 and len(g.edges) == g.n - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    """Acyclic, i.e. |E| = n - number of connected components."""
    seen = bytearray(g.n)
    components = 0
    for start in range(g.n):
        if seen[start]:
            continue
        components += 1
        for _ in _component_vertices(g, start, seen):
            pass
    return len(g.edges) == g.n - components


def _component_vertices(g: Graph, start: int, seen: bytearray):
    seen[start] = 1
    queue = deque([start])
    while queue:
        v = queue.popleft()
        yield v
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = 1
                queue.append(w)


def leaves(g: Graph) -> frozenset[int]:
    """Vertices of degree exactly 1 (isolated vertices do not count)."""
    return frozenset(v for v in range(g.n) if len(g.adjacency[v]) == 1)


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Two-coloring by breadth-first parity from vertex 0.

    The part containing vertex 0 comes first. Requires a connected bipartite
    graph (always satisfied by trees).
    """
    if g.n == 0:
        raise NotConnected("empty graph has no vertices")
    parity = [-1] * g.n
    parity[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if parity[w] == -1:
                parity[w] = parity[v] ^ 1
                queue.append(w)
            elif parity[w] == parity[v]:
                raise NotBipartite(f"odd cycle through edge ({v}, {w})")
    if any(p == -1 for p in parity):
        raise NotConnected("graph is not connected")
    even = frozenset(v for v in range(g.n) if parity[v] == 0)
    odd = frozenset(v for v in range(g.n) if parity[v] == 1)
    return even, odd


def has_even_leaf_distances(g: Graph) -> bool:
    """True iff every pair of leaves is at even distance.

    In a tree, distance parity equals bipartition-class equality, so this is
    just "all leaves share one part". Trees with at most one leaf qualify
    vacuously.
    """
    if not is_tree(g):
        raise NotATree("even-leaf-distance test requires a tree")
    lv = leaves(g)
    if len(lv) <= 1:
        return True
    even, odd = bipartition(g)
    return lv <= even or lv <= odd


def remove_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the complement of ``s``, with dense relabeling.

    Returns the subgraph and the old-to-new label map for surviving vertices
    (ascending order preserved).
    """
    removed = set(s)
    for v in removed:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} not in [0, {g.n})")
    survivors = [v for v in range(g.n) if v not in removed]
    relabel = {old: new for new, old in enumerate(survivors)}
    kept = tuple(
        (relabel[a], relabel[b]) for a, b in g.edges if a not in removed and b not in removed
    )
    return Graph(len(survivors), kept), relabel


def connected_components(g: Graph) -> list[tuple[Graph, dict[int, int]]]:
    """Components ordered by smallest original label, each densely relabeled."""
    seen = bytearray(g.n)
    out: list[tuple[Graph, dict[int, int]]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        vertices = sorted(_component_vertices(g, start, seen))
        relabel = {old: new for new, old in enumerate(vertices)}
        members = set(vertices)
        comp_edges = tuple(
            (relabel[a], relabel[b]) for a, b in g.edges if a in members and b in members
        )
        out.append((Graph(len(vertices), comp_edges), relabel))
    return out
