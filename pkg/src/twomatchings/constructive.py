"""Construction of a maximum coloring whose 0-class is a maximum matching.

For a tree whose leaves are pairwise at even distance, ``construct`` builds
a proper partial coloring with |f0| + |f1| equal to the tree's two-matching
number and |f0| equal to its maximum matching size. The recursion detects
one of six local structures, removes a few vertices, solves the remainder,
and extends the solution by a handful of edges; two recoloring transforms
(``lemma1_enforce``, ``lemma2_enforce``) massage recursive solutions so the
extension edges stay proper.

Every recursive step validates the counting identities it relies on against
the forest algorithms and fails loudly if any breaks; the assembled coloring
is certified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CertificateFailed,
    NoCaseMatches,
    NotATree,
    NotMPP,
    NotPendant,
    NotSiblingPendants,
    PreconditionViolated,
)
from .graph import (
    Edge,
    Graph,
    connected_components,
    edge,
    has_even_leaf_distances,
    is_tree,
    remove_vertices,
    serialize_edge_list,
)
from .coloring import (
    PartialColoring,
    colored_edge_at,
    flip_path,
    is_proper,
    maximal_alternating_path,
)
from .forests import beta_tree, lambda_tree
from .oracle import enumerate_mpp

BASE_CASE = 0
BASE_EDGE_LIMIT = 6


@dataclass(frozen=True)
class CaseMatch:
    """Which structural case fired, with its matched vertex tuple.

    ``case_id`` is 1..6, or ``BASE_CASE`` (0) for graphs small enough to
    solve by enumeration; ``u`` is empty for the base case.
    """

    case_id: int
    u: tuple[int, ...]

    @property
    def is_base(self) -> bool:
        return self.case_id == BASE_CASE


@dataclass(frozen=True)
class TraceStep:
    """One assembly step, recorded in the labels of the original input graph.

    ``adjustments`` are recolorings applied to the recursive solution before
    extension (old color None means the edge was uncolored); ``added`` are
    the extension edges. ``lam``/``beta`` are the forest-algorithm values for
    the graph the step fired on, ``sub_lam``/``sub_beta`` for the remainder
    it recursed on (None for base steps).
    """

    case: CaseMatch
    vertices: tuple[int, ...]
    deleted: tuple[int, ...]
    adjustments: tuple[tuple[Edge, int | None, int | None], ...]
    added: tuple[tuple[Edge, int], ...]
    lam: int
    beta: int
    sub_lam: int | None
    sub_beta: int | None


@dataclass(frozen=True)
class ConstructionTrace:
    steps: tuple[TraceStep, ...]

    def replay(self) -> PartialColoring:
        """Re-apply every step bottom-up; must reproduce the final coloring."""
        items: dict[Edge, int] = {}
        for step in self.steps:
            for e, old, new in step.adjustments:
                if items.get(e) != old:
                    raise ValueError(f"trace adjustment expected {e} to be {old}")
                if new is None:
                    items.pop(e)
                else:
                    items[e] = new
            for e, c in step.added:
                if e in items:
                    raise ValueError(f"trace adds already-colored edge {e}")
                items[e] = c
        return PartialColoring(items)


@dataclass(frozen=True)
class CertificateReport:
    """Measured properties of a coloring against the forest-algorithm values."""

    proper: bool
    total: int
    lambda_expected: int
    f0_size: int
    beta_expected: int
    passed: bool
    reasons: tuple[str, ...]


@dataclass(frozen=True)
class _Shape:
    size: int
    degrees: dict[int, int]
    edges: tuple[tuple[int, int], ...]


# Required degrees and adjacencies per case, by position in the vertex tuple.
# Positions without an entry in ``degrees`` are unconstrained.
_SHAPES: dict[int, _Shape] = {
    1: _Shape(4, {0: 1, 1: 2, 2: 2}, ((0, 1), (1, 2), (2, 3))),
    2: _Shape(
        7,
        {0: 1, 4: 1, 6: 1, 1: 2, 3: 2, 5: 2},
        ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)),
    ),
    3: _Shape(3, {0: 1, 2: 1}, ((0, 1), (1, 2))),
    4: _Shape(
        7,
        {0: 1, 6: 1, 1: 2, 3: 2, 5: 2, 2: 3},
        ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)),
    ),
    5: _Shape(
        8,
        {0: 1, 4: 1, 6: 1, 1: 2, 3: 2, 2: 3, 5: 3},
        ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (5, 7)),
    ),
    6: _Shape(
        11,
        {0: 1, 4: 1, 5: 1, 9: 1, 1: 2, 3: 2, 6: 2, 8: 2, 2: 3, 7: 3},
        ((0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (8, 9), (2, 10), (7, 10)),
    ),
}


def _match_shape(g: Graph, shape: _Shape) -> tuple[int, ...] | None:
    """Lexicographically smallest vertex tuple realizing the shape, if any.

    Backtracking over tuple positions in order, candidates ascending, so the
    first complete assignment is the smallest one.
    """
    k = shape.size
    adjacency = g.adjacency
    edge_set = g.edge_set
    earlier: list[tuple[int, ...]] = [() for _ in range(k)]
    for i, j in shape.edges:
        lo, hi = (i, j) if i < j else (j, i)
        earlier[hi] = earlier[hi] + (lo,)
    assign = [-1] * k
    used = bytearray(g.n)

    def extend(pos: int) -> bool:
        if pos == k:
            return True
        want = shape.degrees.get(pos)
        anchors = earlier[pos]
        candidates = adjacency[assign[anchors[0]]] if anchors else range(g.n)
        for v in candidates:
            if used[v]:
                continue
            if want is not None and len(adjacency[v]) != want:
                continue
            if any(((assign[o], v) if assign[o] < v else (v, assign[o])) not in edge_set
                   for o in anchors[1:]):
                continue
            assign[pos] = v
            used[v] = 1
            if extend(pos + 1):
                return True
            used[v] = 0
        assign[pos] = -1
        return False

    return tuple(assign) if extend(0) else None


def detect_case(g: Graph) -> CaseMatch:
    """First structural case (scanned 1..6) that fires on the tree.

    Graphs with at most six edges are handled by enumeration and report the
    base case. Every tree with pairwise-even leaf distances and at least
    seven edges matches some case; a miss is a hard invariant failure.
    """
    if len(g.edges) <= BASE_EDGE_LIMIT:
        return CaseMatch(BASE_CASE, ())
    for case_id in range(1, 7):
        found = _match_shape(g, _SHAPES[case_id])
        if found is not None:
            return CaseMatch(case_id, found)
    raise NoCaseMatches(
        "no structural case matches this tree:\n" + serialize_edge_list(g)
    )


def lemma1_enforce(g: Graph, f: PartialColoring, pendant: Edge) -> PartialColoring:
    """Recolor a maximum coloring so the pendant edge lands in the 0-class.

    Class sizes are preserved for inputs whose 0-class is maximal. Three
    moves, depending on the pendant's current color: already 0 is a no-op;
    uncolored displaces the 0-edge at the pendant's inner endpoint; colored 1
    flips the maximal alternating path starting at the leaf. Lookups that
    must succeed for maximum inputs raise ``NotMPP`` when they fail.
    """
    a, b = pendant
    if pendant not in g.edge_set:
        raise NotPendant(f"edge {pendant} is not in the graph")
    if g.degree(a) == 1:
        u, w = a, b
    elif g.degree(b) == 1:
        u, w = b, a
    else:
        raise NotPendant(f"neither endpoint of {pendant} has degree 1")
    if not is_proper(g, f):
        raise NotMPP("coloring is not proper")
    c = f.get(pendant)
    if c == 0:
        return f
    if c is None:
        displaced = colored_edge_at(g, f, w, 0)
        if displaced is None:
            raise NotMPP(f"coloring is not maximum: edge {pendant} could take color 0")
        return f.unassign(displaced).assign(pendant, 0)
    # pendant is colored 1
    if colored_edge_at(g, f, w, 0) is None:
        # no 0-edge to alternate with, so recoloring the pendant alone stays
        # proper; this grows the 0-class and is only reachable when the input
        # 0-class was not maximal
        return f.assign(pendant, 0)
    path = maximal_alternating_path(g, f, u, pendant)
    flipped = flip_path(f, path)
    if flipped.class_sizes() != f.class_sizes():
        raise NotMPP("alternating flip changed the class sizes; the 0-class was not maximal")
    return flipped


def lemma2_enforce(g: Graph, f: PartialColoring, u: int, v: int, w: int) -> PartialColoring:
    """Recolor so (u, w) lands in the 0-class and (v, w) in the 1-class.

    ``u`` and ``v`` must be distinct leaves sharing the neighbor ``w``.
    Runs ``lemma1_enforce`` for (u, w) first, then displaces the 1-edge at
    ``w`` if (v, w) does not already carry color 1.
    """
    if u == v or w in (u, v):
        raise NotSiblingPendants("u, v, w must be distinct with u, v leaves at w")
    for x in (u, v):
        if g.degree(x) != 1:
            raise NotSiblingPendants(f"vertex {x} is not a leaf")
        if not g.has_edge(x, w):
            raise NotSiblingPendants(f"missing edge ({x}, {w})")
    f = lemma1_enforce(g, f, edge(u, w))
    sibling = edge(v, w)
    if f.get(sibling) == 1:
        return f
    displaced = colored_edge_at(g, f, w, 1)
    if displaced is None:
        raise NotMPP(f"coloring is not maximum: edge {sibling} could take color 1")
    return f.unassign(displaced).assign(sibling, 1)


def verify_certificate(g: Graph, f: PartialColoring) -> CertificateReport:
    """Check a coloring against the forest algorithms' reference values."""
    lam, _ = lambda_tree(g)
    beta, _ = beta_tree(g)
    proper = is_proper(g, f)
    s0, s1 = f.class_sizes()
    total = s0 + s1
    reasons: list[str] = []
    if not proper:
        reasons.append("not proper")
    if total != lam:
        reasons.append(f"total {total} != lambda {lam}")
    if s0 != beta:
        reasons.append(f"|f0| {s0} != beta {beta}")
    return CertificateReport(proper, total, lam, s0, beta, not reasons, tuple(reasons))


def construct(g: Graph) -> tuple[PartialColoring, ConstructionTrace]:
    """Build and certify a maximum coloring whose 0-class is a maximum matching.

    Requires a tree whose leaves are pairwise at even distance. Raises
    ``CertificateFailed`` if any internal counting identity or the final
    certificate breaks; such a failure is surfaced, never repaired.
    """
    if not is_tree(g):
        raise PreconditionViolated("input graph is not a tree")
    if not has_even_leaf_distances(g):
        raise PreconditionViolated("tree has two leaves at odd distance")
    f, steps = _construct(g, tuple(range(g.n)), None)
    report = verify_certificate(g, f)
    if not report.passed:
        raise CertificateFailed(
            "assembled coloring failed its certificate: " + "; ".join(report.reasons)
        )
    return f, ConstructionTrace(tuple(steps))


# tuple positions removed before recursing, per non-base case
_DOOMED_POSITIONS = {1: (0, 1), 2: (5, 6), 3: (0, 1, 2), 4: (0, 1), 5: (0, 1, 2, 3, 4), 6: (0, 1, 2, 3, 4)}
# (lambda, beta) drop from a graph to its remainder, per non-base case
CASE_DELTAS = {1: (2, 1), 2: (1, 1), 3: (2, 1), 4: (1, 1), 5: (4, 2), 6: (4, 2)}


def _extension(case_id: int, u: tuple[int, ...]) -> tuple[tuple[Edge, int], ...]:
    if case_id in (1, 3):
        return ((edge(u[0], u[1]), 0), (edge(u[1], u[2]), 1))
    if case_id == 2:
        return ((edge(u[5], u[6]), 0),)
    if case_id == 4:
        return ((edge(u[0], u[1]), 0),)
    # cases 5 and 6: color the removed five-vertex path alternately
    return (
        (edge(u[0], u[1]), 0),
        (edge(u[1], u[2]), 1),
        (edge(u[2], u[3]), 0),
        (edge(u[3], u[4]), 1),
    )


def _map_coloring(f: PartialColoring, mapping) -> PartialColoring:
    return PartialColoring({edge(mapping[a], mapping[b]): c for (a, b), c in f.items()})


def _diff(before: PartialColoring, after: PartialColoring):
    for e in sorted(before.domain | after.domain):
        old, new = before.get(e), after.get(e)
        if old != new:
            yield e, old, new


def _require_in_class(sub: Graph, origin: Graph) -> None:
    try:
        ok = has_even_leaf_distances(sub)
    except NotATree:
        ok = False
    if not ok:
        raise CertificateFailed(
            "recursion left the even-leaf-distance class; remainder:\n"
            + serialize_edge_list(sub)
            + "original:\n"
            + serialize_edge_list(origin)
        )


def _construct(
    g: Graph,
    to_top: tuple[int, ...],
    known: tuple[int, int] | None,
) -> tuple[PartialColoring, list[TraceStep]]:
    """Recursive assembly on ``g``; the coloring comes back in g's labels.

    ``to_top`` maps g's labels to the original input's, so trace steps can
    be recorded directly in original labels. ``known`` carries (lambda, beta)
    when the caller already computed them for ``g``.
    """
    if not g.edges:
        return PartialColoring(), []
    case = detect_case(g)
    if known is None:
        lam_g, _ = lambda_tree(g)
        beta_g, _ = beta_tree(g)
    else:
        lam_g, beta_g = known

    if case.is_base:
        enum = enumerate_mpp(g)
        best = max(enum.colorings, key=lambda cand: cand.class_sizes()[0])
        if best.class_sizes()[0] != beta_g:
            raise CertificateFailed(
                f"no maximum coloring of the base graph reaches matching size {beta_g}:\n"
                + serialize_edge_list(g)
            )
        step = TraceStep(
            case,
            to_top,
            (),
            (),
            tuple((edge(to_top[a], to_top[b]), c) for (a, b), c in best.items()),
            lam_g,
            beta_g,
            None,
            None,
        )
        return best, [step]

    cid, u = case.case_id, case.u
    doomed = tuple(u[p] for p in _DOOMED_POSITIONS[cid])
    lam_delta, beta_delta = CASE_DELTAS[cid]
    sub, relabel = remove_vertices(g, doomed)
    inverse = [0] * sub.n
    for old, new in relabel.items():
        inverse[new] = old
    sub_to_top = tuple(to_top[old] for old in inverse)
    lam_sub, _ = lambda_tree(sub)
    beta_sub, _ = beta_tree(sub)
    if lam_g != lam_sub + lam_delta or beta_g != beta_sub + beta_delta:
        raise CertificateFailed(
            f"case {cid} arithmetic failed: lambda {lam_g} vs {lam_sub}+{lam_delta}, "
            f"beta {beta_g} vs {beta_sub}+{beta_delta}; graph:\n" + serialize_edge_list(g)
        )
    adjustments: tuple[tuple[Edge, int | None, int | None], ...] = ()

    if cid == 3:
        partial = PartialColoring()
        steps: list[TraceStep] = []
        for comp, comp_relabel in connected_components(sub):
            _require_in_class(comp, g)
            comp_inverse = [0] * comp.n
            for old, new in comp_relabel.items():
                comp_inverse[new] = old
            comp_to_top = tuple(sub_to_top[old] for old in comp_inverse)
            local = [inverse[old] for old in comp_inverse]
            comp_coloring, comp_steps = _construct(comp, comp_to_top, None)
            partial = partial.merge(_map_coloring(comp_coloring, local))
            steps.extend(comp_steps)
    else:
        _require_in_class(sub, g)
        inner, inner_steps = _construct(sub, sub_to_top, (lam_sub, beta_sub))
        if cid == 1:
            # the third tuple vertex became pendant in the remainder; force
            # its edge into the 0-class before extending past it
            pendant = edge(relabel[u[2]], relabel[u[3]])
            try:
                enforced = lemma1_enforce(sub, inner, pendant)
            except NotMPP as exc:
                raise CertificateFailed(f"pendant enforcement failed during assembly: {exc}") from exc
            adjustments = tuple(
                (edge(sub_to_top[a], sub_to_top[b]), old, new)
                for (a, b), old, new in _diff(inner, enforced)
            )
            inner = enforced
        partial = _map_coloring(inner, inverse)
        steps = inner_steps

    f = partial
    added = _extension(cid, u)
    for e, c in added:
        f = f.assign(e, c)
    steps.append(
        TraceStep(
            CaseMatch(cid, tuple(to_top[x] for x in u)),
            to_top,
            tuple(sorted(to_top[x] for x in doomed)),
            adjustments,
            tuple((edge(to_top[a], to_top[b]), c) for (a, b), c in added),
            lam_g,
            beta_g,
            lam_sub,
            beta_sub,
        )
    )
    return f, steps
