"""Brute-force ground truth for small graphs.

Everything here enumerates per-edge choices exhaustively, with pruning that
never cuts an optimal branch. These routines exist for correctness, not
speed; the edge budget keeps them honest about scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded
from .graph import Graph
from .coloring import PartialColoring


@dataclass(frozen=True)
class OracleBudget:
    max_edges: int = 14
    max_enumerated: int = 10**6

    def __post_init__(self):
        if self.max_edges <= 0 or self.max_enumerated <= 0:
            raise ValueError("budget values must be positive")


DEFAULT_BUDGET = OracleBudget()


@dataclass
class MppEnumeration:
    """All maximum proper partial colorings, possibly truncated at the cap."""

    colorings: list[PartialColoring]
    truncated: bool


def _check_budget(g: Graph, budget: OracleBudget) -> None:
    if len(g.edges) > budget.max_edges:
        raise BudgetExceeded(
            f"{len(g.edges)} edges exceed the oracle budget of {budget.max_edges}"
        )


def oracle_beta(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Maximum matching size by include/exclude branching over the edges."""
    _check_budget(g, budget)
    edges = g.edges
    m = len(edges)
    used = bytearray(g.n)
    best = 0

    def rec(i: int, size: int) -> None:
        nonlocal best
        if size + (m - i) <= best:
            return
        if i == m:
            best = size
            return
        a, b = edges[i]
        if not used[a] and not used[b]:
            used[a] = used[b] = 1
            rec(i + 1, size + 1)
            used[a] = used[b] = 0
        rec(i + 1, size)

    rec(0, 0)
    return best


def oracle_lambda(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Largest |f0| + |f1| over proper partial colorings.

    Three-way branching per edge (0 / 1 / uncolored) with properness pruning
    via per-vertex class counts. Colored branches are tried first so the
    optimistic bound bites early; the branch order cannot change the maximum.
    """
    _check_budget(g, budget)
    edges = g.edges
    m = len(edges)
    in0 = bytearray(g.n)
    in1 = bytearray(g.n)
    best = 0

    def rec(i: int, size: int) -> None:
        nonlocal best
        if size + (m - i) <= best:
            return
        if i == m:
            best = size
            return
        a, b = edges[i]
        if not in0[a] and not in0[b]:
            in0[a] = in0[b] = 1
            rec(i + 1, size + 1)
            in0[a] = in0[b] = 0
        if not in1[a] and not in1[b]:
            in1[a] = in1[b] = 1
            rec(i + 1, size + 1)
            in1[a] = in1[b] = 0
        rec(i + 1, size)

    rec(0, 0)
    return best


def oracle_alpha(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Largest single color class over all maximum proper partial colorings.

    By color-swap symmetry max(|f0|, |f1|) per coloring covers both class
    indices. Any maximum coloring has a class of at least half its total, so
    the search starts from that floor and only looks for improvements.
    """
    _check_budget(g, budget)
    lam = oracle_lambda(g, budget)
    if lam == 0:
        return 0
    edges = g.edges
    m = len(edges)
    in0 = bytearray(g.n)
    in1 = bytearray(g.n)
    best = (lam + 1) // 2

    def rec(i: int, s0: int, s1: int) -> None:
        nonlocal best
        rem = m - i
        if s0 + s1 + rem < lam:
            return
        reach = max(min(s0 + rem, lam - s1), min(s1 + rem, lam - s0))
        if reach <= best:
            return
        if i == m:
            if s0 + s1 == lam:
                best = max(best, s0, s1)
            return
        a, b = edges[i]
        if not in0[a] and not in0[b]:
            in0[a] = in0[b] = 1
            rec(i + 1, s0 + 1, s1)
            in0[a] = in0[b] = 0
        if not in1[a] and not in1[b]:
            in1[a] = in1[b] = 1
            rec(i + 1, s0, s1 + 1)
            in1[a] = in1[b] = 0
        rec(i + 1, s0, s1)

    rec(0, 0, 0)
    return best


class _Truncated(Exception):
    pass


def enumerate_mpp(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> MppEnumeration:
    """Every maximum proper partial coloring, in a fixed deterministic order.

    Edges are scanned lexicographically and branches tried uncolored < 0 < 1,
    so the output order is stable across runs. Enumeration stops at the
    budget's cap, setting the truncation flag.
    """
    _check_budget(g, budget)
    lam = oracle_lambda(g, budget)
    edges = g.edges
    m = len(edges)
    in0 = bytearray(g.n)
    in1 = bytearray(g.n)
    acc: list[tuple[tuple[int, int], int]] = []
    out: list[PartialColoring] = []
    cap = budget.max_enumerated

    def rec(i: int, size: int) -> None:
        if size + (m - i) < lam:
            return
        if i == m:
            if len(out) >= cap:
                raise _Truncated
            out.append(PartialColoring(acc))
            return
        a, b = edges[i]
        rec(i + 1, size)
        if not in0[a] and not in0[b]:
            in0[a] = in0[b] = 1
            acc.append(((a, b), 0))
            rec(i + 1, size + 1)
            acc.pop()
            in0[a] = in0[b] = 0
        if not in1[a] and not in1[b]:
            in1[a] = in1[b] = 1
            acc.append(((a, b), 1))
            rec(i + 1, size + 1)
            acc.pop()
            in1[a] = in1[b] = 0

    truncated = False
    try:
        rec(0, 0)
    except _Truncated:
        truncated = True
    return MppEnumeration(out, truncated)
