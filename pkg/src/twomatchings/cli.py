"""Command-line interface: analyze | construct | verify | gen | sweep.

Machine-readable JSON goes to stdout (pretty-printed with --pretty);
diagnostics go to stderr. Exit codes:

    0  success (verify: certificate passed; sweep: no failures)
    1  verify reported a failing certificate, or sweep found failures
    2  parse errors or invalid parameters
    3  oracle budget exceeded while --exact was demanded
    4  construction precondition violated (not a tree / odd leaf distance)
    5  certificate or structural invariant failed during construction
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import (
    BudgetExceeded,
    CertificateFailed,
    ForeignEdge,
    LabelOutOfRange,
    NoCaseMatches,
    ParseError,
    PreconditionViolated,
    TooLarge,
)
from .graph import Graph, has_even_leaf_distances, is_forest, is_tree, parse_edge_list, serialize_edge_list
from .coloring import parse_coloring
from .forests import beta_tree, lambda_tree
from .oracle import OracleBudget, oracle_alpha, oracle_beta, oracle_lambda
from .constructive import BASE_CASE, construct, verify_certificate
from .generators import MAX_ENUMERATION_N, RNG_NAME, all_labeled_trees, random_even_leaf_tree
from .sweep import run_sweep

UNAVAILABLE = "unavailable (budget)"


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(doc: dict, pretty: bool) -> None:
    print(json.dumps(doc, indent=2 if pretty else None))


def _case_key(case_id: int) -> str:
    return "base" if case_id == BASE_CASE else str(case_id)


def cmd_analyze(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_text(args.input))
    budget = OracleBudget(max_edges=args.budget_edges)
    forest = is_forest(g)
    tree = is_tree(g)
    even = tree and has_even_leaf_distances(g)
    within = len(g.edges) <= budget.max_edges

    values: dict[str, int | str] = {}
    provenance: dict[str, str] = {}
    if forest:
        values["beta"] = beta_tree(g)[0]
        values["lambda"] = lambda_tree(g)[0]
        provenance["beta"] = provenance["lambda"] = "tree-dp"
    elif within:
        values["beta"] = oracle_beta(g, budget)
        values["lambda"] = oracle_lambda(g, budget)
        provenance["beta"] = provenance["lambda"] = "oracle"
    else:
        if args.exact:
            raise BudgetExceeded(f"{len(g.edges)} edges exceed --budget-edges {budget.max_edges}")
        values["beta"] = values["lambda"] = UNAVAILABLE
        provenance["beta"] = provenance["lambda"] = UNAVAILABLE
    if within:
        values["alpha"] = oracle_alpha(g, budget)
        provenance["alpha"] = "oracle"
    else:
        if args.exact:
            raise BudgetExceeded(f"{len(g.edges)} edges exceed --budget-edges {budget.max_edges}")
        values["alpha"] = UNAVAILABLE
        provenance["alpha"] = UNAVAILABLE

    report: dict = {
        "n": g.n,
        "edges": len(g.edges),
        "is_tree": tree,
        "even_leaf_class": even,
        "beta": values["beta"],
        "lambda": values["lambda"],
        "alpha": values["alpha"],
        "provenance": provenance,
    }
    if even:
        # the certified construction pins alpha to beta even past the budget
        _, _trace = construct(g)
        report["alpha_equals_beta_by_construction"] = True
    _emit(report, args.pretty)
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_text(args.input))
    coloring, trace = construct(g)
    if args.verify:
        check = verify_certificate(g, coloring)
        if not check.passed:
            raise CertificateFailed("; ".join(check.reasons))
    lam, _ = lambda_tree(g)
    beta, _ = beta_tree(g)
    doc = {
        "coloring": {
            "0": [list(e) for e in sorted(coloring.f0)],
            "1": [list(e) for e in sorted(coloring.f1)],
        },
        "lambda": lam,
        "beta": beta,
        "certificate": "pass",
        "trace": [
            {
                "case": _case_key(step.case.case_id),
                "u": list(step.case.u),
                "vertices": list(step.vertices),
                "deleted": list(step.deleted),
                "adjustments": [[list(e), old, new] for e, old, new in step.adjustments],
                "added": [[list(e), c] for e, c in step.added],
                "lambda": step.lam,
                "beta": step.beta,
                "sub_lambda": step.sub_lam,
                "sub_beta": step.sub_beta,
            }
            for step in trace.steps
        ],
    }
    _emit(doc, args.pretty)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_text(args.graph))
    coloring = parse_coloring(_read_text(args.coloring))
    report = verify_certificate(g, coloring)
    _emit(
        {
            "proper": report.proper,
            "total": report.total,
            "lambda_expected": report.lambda_expected,
            "f0_size": report.f0_size,
            "beta_expected": report.beta_expected,
            "verdict": "pass" if report.passed else "fail",
            "reasons": list(report.reasons),
        },
        args.pretty,
    )
    return 0 if report.passed else 1


def cmd_gen(args: argparse.Namespace) -> int:
    blocks: list[str] = []
    if args.kind == "prufer-all":
        if args.n is None:
            raise ValueError("gen prufer-all requires --n")
        trees = all_labeled_trees(args.n)
        print(f"# prufer-all n={args.n}")
        blocks = [serialize_edge_list(g).rstrip("\n") for g in trees]
    else:
        if args.cherries is None:
            raise ValueError("gen random-even-leaf requires --cherries")
        if args.count < 1:
            raise ValueError("--count must be positive")
        for i in range(args.count):
            seed = args.seed + i
            g = random_even_leaf_tree(args.cherries, seed)
            blocks.append(
                f"# random-even-leaf cherries={args.cherries} seed={seed} rng={RNG_NAME}\n"
                + serialize_edge_list(g).rstrip("\n")
            )
    print("\n---\n".join(blocks))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    result = run_sweep(
        list(range(2, args.max_n + 1)),
        budget_edges=args.budget_edges,
        jobs=args.jobs,
    )
    doc = {
        "max_n": args.max_n,
        "rows": [
            {
                "n": row.n,
                "trees": row.trees,
                "even_leaf": row.even_leaf,
                "constructed": row.constructed,
                "certificates_passed": row.certificates_passed,
                "alpha_beta_confirmed": row.alpha_beta_confirmed,
                "case_histogram": dict(sorted(row.case_histogram.items())),
            }
            for row in result.rows
        ],
        "failures": [
            {"n": f.n, "reason": f.reason, "edgelist": f.edgelist} for f in result.failures
        ],
        "failure_count": result.failure_count,
        "ok": result.ok,
    }
    if args.out and result.failures:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        for i, f in enumerate(result.failures):
            (out_dir / f"failure_{i:04d}.edgelist").write_text(
                f"# {f.reason}\n" + f.edgelist
            )
    _emit(doc, args.pretty)
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twomatchings",
        description="Maximum proper partial 0-1 colorings: analysis, construction, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--pretty", action="store_true", help="indent JSON output")

    p = sub.add_parser("analyze", help="report beta, lambda, alpha for an edge list")
    p.add_argument("--input", "-i", default=None, help="edge-list path (default stdin)")
    p.add_argument("--budget-edges", type=int, default=14, help="oracle edge cap")
    p.add_argument("--exact", action="store_true", help="fail instead of degrading past the budget")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build a certified coloring for an even-leaf tree")
    p.add_argument("--input", "-i", default=None)
    p.add_argument("--verify", action="store_true", help="re-check the certificate before emitting")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a coloring file against a graph file")
    p.add_argument("graph", help="edge-list path")
    p.add_argument("coloring", help="coloring path ('u v c' lines)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit edge-list text for generated trees")
    p.add_argument("kind", choices=("prufer-all", "random-even-leaf"))
    p.add_argument("--n", type=int, default=None, help=f"vertex count (2..{MAX_ENUMERATION_N})")
    p.add_argument("--cherries", type=int, default=None, help="length-2 paths to attach")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1, help="number of random trees")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sweep", help="exhaustive construction sweep over labeled trees")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--budget-edges", type=int, default=14)
    p.add_argument("--out", default=None, help="directory for failure dumps")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ForeignEdge, LabelOutOfRange, TooLarge, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except PreconditionViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (CertificateFailed, NoCaseMatches) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
