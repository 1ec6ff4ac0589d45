"""Exhaustive sweeps over labeled trees, shared by the CLI and the test suite.

A sweep enumerates every labeled tree for the requested vertex counts,
runs the construction on each tree in the even-leaf-distance class, and
optionally cross-checks the forest algorithms against the brute-force
oracle on every tree. Any broken invariant is captured as a failure with
the offending tree serialized for reproduction.

Work can be spread over worker processes; chunks are merged in enumeration
order, so results are identical regardless of scheduling.
"""

from __future__ import annotations

import multiprocessing
from collections import Counter
from dataclasses import dataclass, field

from .errors import TwoMatchingsError
from .graph import Graph, has_even_leaf_distances, serialize_edge_list
from .forests import beta_tree, lambda_tree
from .oracle import OracleBudget, oracle_alpha, oracle_beta, oracle_lambda
from .constructive import BASE_CASE, CASE_DELTAS, construct
from .generators import MAX_ENUMERATION_N, prufer_decode

MAX_RECORDED_FAILURES = 50


@dataclass
class SweepRow:
    """Aggregates for one vertex count."""

    n: int
    trees: int = 0
    even_leaf: int = 0
    constructed: int = 0
    certificates_passed: int = 0
    alpha_beta_confirmed: int = 0
    case_histogram: Counter = field(default_factory=Counter)
    # deep-check tallies (stay zero unless oracle cross-checks are requested)
    dp_oracle_agreed: int = 0
    alpha_le_beta_checked: int = 0


@dataclass(frozen=True)
class SweepFailure:
    n: int
    reason: str
    edgelist: str


@dataclass
class SweepResult:
    rows: list[SweepRow]
    failures: list[SweepFailure]
    failure_count: int = 0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0


def _seq_at(index: int, n: int, length: int) -> tuple[int, ...]:
    digits = [0] * length
    for pos in range(length - 1, -1, -1):
        index, digits[pos] = divmod(index, n)
    return tuple(digits)


def _case_key(case_id: int) -> str:
    return "base" if case_id == BASE_CASE else str(case_id)


def check_tree(
    g: Graph,
    budget: OracleBudget,
    oracle_checks: bool,
    row: SweepRow,
    failures: list[SweepFailure],
) -> int:
    """Run every sweep check on one tree, updating ``row`` in place.

    Returns the number of invariant failures; up to the recording cap they
    are also appended to ``failures`` with the serialized tree.
    """
    count = 0

    def fail(reason: str) -> None:
        nonlocal count
        count += 1
        if len(failures) < MAX_RECORDED_FAILURES:
            failures.append(SweepFailure(row.n, reason, serialize_edge_list(g)))

    row.trees += 1
    lam, _ = lambda_tree(g)
    beta, _ = beta_tree(g)
    within_budget = len(g.edges) <= budget.max_edges
    alpha = None

    if oracle_checks and within_budget:
        if oracle_lambda(g, budget) != lam or oracle_beta(g, budget) != beta:
            fail("forest algorithms disagree with the oracle")
        else:
            row.dp_oracle_agreed += 1
        alpha = oracle_alpha(g, budget)
        if alpha > beta:
            fail(f"alpha {alpha} exceeds beta {beta}")
        else:
            row.alpha_le_beta_checked += 1

    if not has_even_leaf_distances(g):
        return count
    row.even_leaf += 1

    if within_budget:
        if alpha is None:
            alpha = oracle_alpha(g, budget)
        if alpha == oracle_beta(g, budget):
            row.alpha_beta_confirmed += 1
        else:
            fail(f"oracle alpha {alpha} differs from beta on an even-leaf tree")

    row.constructed += 1
    try:
        coloring, trace = construct(g)
    except TwoMatchingsError as exc:
        fail(f"construction failed: {exc}")
        return count

    ok = True
    if trace.replay() != coloring:
        fail("trace replay does not reproduce the coloring")
        ok = False
    for step in trace.steps:
        row.case_histogram[_case_key(step.case.case_id)] += 1
        if step.case.is_base:
            continue
        lam_delta, beta_delta = CASE_DELTAS[step.case.case_id]
        if step.lam - step.sub_lam != lam_delta or step.beta - step.sub_beta != beta_delta:
            fail(f"step arithmetic broken for case {step.case.case_id}")
            ok = False
    s0, s1 = coloring.class_sizes()
    if s0 + s1 != lam or s0 != beta:
        fail(f"certificate mismatch: sizes ({s0}, {s1}) vs lambda {lam}, beta {beta}")
        ok = False
    if ok:
        row.certificates_passed += 1
    return count


def _chunk(args: tuple[int, int, int, int, bool]) -> tuple[SweepRow, list[SweepFailure], int]:
    n, start, stop, max_edges, oracle_checks = args
    budget = OracleBudget(max_edges=max_edges)
    row = SweepRow(n)
    failures: list[SweepFailure] = []
    count = 0
    for index in range(start, stop):
        g = prufer_decode(_seq_at(index, n, n - 2), n)
        count += check_tree(g, budget, oracle_checks, row, failures)
    return row, failures, count


def run_sweep(
    ns: list[int],
    budget_edges: int = 14,
    oracle_checks: bool = False,
    jobs: int = 1,
) -> SweepResult:
    """Sweep all labeled trees for each vertex count in ``ns``.

    ``oracle_checks`` additionally verifies lambda_tree/beta_tree against the
    oracle and the alpha <= beta inequality on every tree within budget.
    """
    rows: list[SweepRow] = []
    failures: list[SweepFailure] = []
    total_failures = 0
    for n in ns:
        if not 2 <= n <= MAX_ENUMERATION_N:
            raise ValueError(f"vertex count {n} outside the sweep range")
        total = n ** (n - 2)
        row = SweepRow(n)
        if jobs <= 1 or total < 4096:
            budget = OracleBudget(max_edges=budget_edges)
            chunk_failures: list[SweepFailure] = []
            for index in range(total):
                total_failures += check_tree(
                    prufer_decode(_seq_at(index, n, n - 2), n),
                    budget,
                    oracle_checks,
                    row,
                    chunk_failures,
                )
            failures.extend(chunk_failures[: max(0, MAX_RECORDED_FAILURES - len(failures))])
        else:
            chunk_size = max(2048, total // (jobs * 16))
            tasks = [
                (n, start, min(start + chunk_size, total), budget_edges, oracle_checks)
                for start in range(0, total, chunk_size)
            ]
            with multiprocessing.Pool(jobs) as pool:
                for part, part_failures, part_count in pool.imap(_chunk, tasks):
                    _merge_rows(row, part)
                    room = MAX_RECORDED_FAILURES - len(failures)
                    failures.extend(part_failures[:room])
                    total_failures += part_count
        rows.append(row)
    return SweepResult(rows, failures, total_failures)


def _merge_rows(into: SweepRow, part: SweepRow) -> None:
    into.trees += part.trees
    into.even_leaf += part.even_leaf
    into.constructed += part.constructed
    into.certificates_passed += part.certificates_passed
    into.alpha_beta_confirmed += part.alpha_beta_confirmed
    into.dp_oracle_agreed += part.dp_oracle_agreed
    into.alpha_le_beta_checked += part.alpha_le_beta_checked
    into.case_histogram.update(part.case_histogram)
