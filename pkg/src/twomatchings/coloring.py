"""Partial 0-1 edge colorings, properness, and alternating-path recoloring.

A coloring assigns 0 or 1 to a subset of a graph's edges. It is proper when
each color class is a matching; a vertex may meet one 0-edge and one 1-edge
at the same time. Colorings are value objects: every transforming operation
returns a new instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    ForeignEdge,
    LoopEdge,
    MalformedLine,
    PathNotInColoring,
    UncoloredStartEdge,
)
from .graph import Edge, Graph, edge


def _validate_item(e: Edge, c: int) -> None:
    a, b = e
    if a == b:
        raise LoopEdge(f"loop edge at vertex {a}")
    if a > b or a < 0:
        raise ValueError(f"edge {e} is not normalized")
    if c not in (0, 1):
        raise ValueError(f"color must be 0 or 1, got {c!r}")


class PartialColoring:
    """Partial assignment of colors {0, 1} to normalized edges.

    Only colored edges are stored; there is no explicit "uncolored" mark, so
    the domain size always equals |f0| + |f1|.
    """

    __slots__ = ("_assignment",)

    def __init__(self, assignment: Mapping[Edge, int] | Iterable[tuple[Edge, int]] = ()):
        items = dict(assignment.items() if isinstance(assignment, Mapping) else assignment)
        for e, c in items.items():
            _validate_item(e, c)
        self._assignment = items

    def get(self, e: Edge) -> int | None:
        return self._assignment.get(e)

    def __contains__(self, e: Edge) -> bool:
        return e in self._assignment

    def __len__(self) -> int:
        return len(self._assignment)

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self._assignment))

    def items(self) -> list[tuple[Edge, int]]:
        """Assignment as a list sorted by edge."""
        return sorted(self._assignment.items())

    @property
    def domain(self) -> frozenset[Edge]:
        return frozenset(self._assignment)

    @property
    def f0(self) -> frozenset[Edge]:
        return frozenset(e for e, c in self._assignment.items() if c == 0)

    @property
    def f1(self) -> frozenset[Edge]:
        return frozenset(e for e, c in self._assignment.items() if c == 1)

    def class_sizes(self) -> tuple[int, int]:
        """(|f0|, |f1|)."""
        ones = sum(self._assignment.values())
        return len(self._assignment) - ones, ones

    def total(self) -> int:
        return len(self._assignment)

    def swap_colors(self) -> PartialColoring:
        """Complement every color; same domain, properness preserved."""
        return PartialColoring({e: 1 - c for e, c in self._assignment.items()})

    def assign(self, e: Edge, c: int) -> PartialColoring:
        _validate_item(e, c)
        items = dict(self._assignment)
        items[e] = c
        return PartialColoring(items)

    def unassign(self, e: Edge) -> PartialColoring:
        items = dict(self._assignment)
        items.pop(e, None)
        return PartialColoring(items)

    def merge(self, other: PartialColoring) -> PartialColoring:
        """Union of two colorings with disjoint domains."""
        overlap = self.domain & other.domain
        if overlap:
            raise ValueError(f"colorings overlap on {sorted(overlap)}")
        items = dict(self._assignment)
        items.update(other._assignment)
        return PartialColoring(items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return self._assignment == other._assignment

    def __hash__(self) -> int:
        return hash(frozenset(self._assignment.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{a}-{b}:{c}" for (a, b), c in self.items())
        return f"PartialColoring({{{body}}})"


@dataclass(frozen=True)
class Matching:
    """Set of pairwise vertex-disjoint edges."""

    edges: frozenset[Edge]

    def __post_init__(self):
        seen: set[int] = set()
        for a, b in self.edges:
            if a in seen or b in seen:
                raise ValueError(f"edges share vertex at ({a}, {b})")
            seen.add(a)
            seen.add(b)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class AlternatingPath:
    """Simple path whose consecutive edges strictly alternate colors."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 2 or len(self.edges) != len(self.vertices) - 1:
            raise ValueError("path needs k >= 2 vertices and k - 1 edges")
        if len(self.colors) != len(self.edges):
            raise ValueError("one color per edge")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices must be distinct")
        for i, e in enumerate(self.edges):
            if e != edge(self.vertices[i], self.vertices[i + 1]):
                raise ValueError(f"edge {e} does not join vertices {i} and {i + 1}")
        for i, c in enumerate(self.colors):
            if c not in (0, 1):
                raise ValueError(f"color must be 0 or 1, got {c!r}")
            if i and c == self.colors[i - 1]:
                raise ValueError("colors must alternate strictly")


def is_proper(g: Graph, f: PartialColoring) -> bool:
    """True iff f0 and f1 are both matchings of ``g``."""
    count0 = bytearray(g.n)
    count1 = bytearray(g.n)
    edge_set = g.edge_set
    for e, c in f._assignment.items():
        if e not in edge_set:
            raise ForeignEdge(f"edge {e} is not in the graph")
        a, b = e
        counts = count0 if c == 0 else count1
        counts[a] += 1
        counts[b] += 1
        if counts[a] > 1 or counts[b] > 1:
            return False
    return True


def colored_edge_at(g: Graph, f: PartialColoring, v: int, color: int) -> Edge | None:
    """The unique ``color``-edge incident to ``v``, or None.

    Uniqueness is guaranteed by properness of the color class.
    """
    found = None
    for w in g.adjacency[v]:
        e = (v, w) if v < w else (w, v)
        if f.get(e) == color:
            assert found is None, f"two {color}-edges at vertex {v}: improper coloring"
            found = e
    return found


def maximal_alternating_path(
    g: Graph, f: PartialColoring, start: int, first: Edge
) -> AlternatingPath:
    """Walk from ``start`` along ``first``, alternating colors as far as possible.

    Each step continues with the colored edge of the opposite color at the
    frontier vertex; the color classes are matchings, so at most one such
    edge exists. The walk stops when none exists or when the only candidate
    revisits a path vertex (impossible on forests).
    """
    if first not in g.edge_set:
        raise ForeignEdge(f"edge {first} is not in the graph")
    if start not in first:
        raise ValueError(f"vertex {start} is not an endpoint of {first}")
    c = f.get(first)
    if c is None:
        raise UncoloredStartEdge(f"edge {first} is not colored")
    a, b = first
    vertices = [start, b if start == a else a]
    on_path = set(vertices)
    edges = [first]
    colors = [c]
    while True:
        v = vertices[-1]
        nxt = colored_edge_at(g, f, v, 1 - colors[-1])
        if nxt is None:
            break
        na, nb = nxt
        w = nb if v == na else na
        if w in on_path:
            break
        vertices.append(w)
        on_path.add(w)
        edges.append(nxt)
        colors.append(1 - colors[-1])
    return AlternatingPath(tuple(vertices), tuple(edges), tuple(colors))


def flip_path(f: PartialColoring, p: AlternatingPath) -> PartialColoring:
    """Complement the colors on the path's edges; everything else unchanged.

    For a proper coloring and a maximal path the result is proper again.
    """
    items = dict(f._assignment)
    for e, c in zip(p.edges, p.colors):
        if items.get(e) != c:
            raise PathNotInColoring(f"edge {e} is not colored {c} in the coloring")
        items[e] = 1 - c
    return PartialColoring(items)


def parse_coloring(text: str) -> PartialColoring:
    """Parse coloring text: one "u v c" line per colored edge, c in {0, 1}.

    Comment and blank-line rules match the edge-list format.
    """
    items: dict[Edge, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise MalformedLine(f"expected 'u v c', got {len(tokens)} tokens", line_no)
        try:
            u, v, c = (int(t) for t in tokens)
        except ValueError:
            raise MalformedLine(f"non-integer token in {line!r}", line_no) from None
        if u < 0 or v < 0:
            raise MalformedLine(f"negative vertex label in {line!r}", line_no)
        if u == v:
            raise LoopEdge(f"loop edge at vertex {u}", line_no)
        if c not in (0, 1):
            raise MalformedLine(f"color must be 0 or 1, got {c}", line_no)
        e = edge(u, v)
        if e in items:
            raise MalformedLine(f"edge {e} assigned twice", line_no)
        items[e] = c
    return PartialColoring(items)


def serialize_coloring(f: PartialColoring) -> str:
    lines = [f"{a} {b} {c}" for (a, b), c in f.items()]
    return "\n".join(lines) + "\n" if lines else ""
