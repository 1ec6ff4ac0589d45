import io
import json
from importlib.resources import files

import jsonschema
import pytest

from twomatchings.cli import main

P5_TEXT = "0 1\n1 2\n2 3\n3 4\n"
P4_TEXT = "0 1\n1 2\n2 3\n"
SPIDER2_TEXT = "0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n"
TRIANGLE_TEXT = "0 1\n1 2\n0 2\n"


def load_schema(name):
    return json.loads(files("twomatchings").joinpath(f"schemas/{name}.schema.json").read_text())


def run_cli(argv, stdin="", *, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse's own parameter errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_even_leaf_path(self, capsys, monkeypatch):
        code, out, _ = run_cli(["analyze"], P5_TEXT, capsys=capsys, monkeypatch=monkeypatch)
        doc = json.loads(out)
        assert code == 0
        jsonschema.validate(doc, load_schema("analyze"))
        assert doc["beta"] == 2 and doc["lambda"] == 4 and doc["alpha"] == 2
        assert doc["even_leaf_class"] and doc["is_tree"]
        assert doc["alpha_equals_beta_by_construction"] is True
        assert doc["provenance"] == {"beta": "tree-dp", "lambda": "tree-dp", "alpha": "oracle"}

    def test_odd_leaf_path(self, capsys, monkeypatch):
        code, out, _ = run_cli(["analyze"], P4_TEXT, capsys=capsys, monkeypatch=monkeypatch)
        doc = json.loads(out)
        assert code == 0
        jsonschema.validate(doc, load_schema("analyze"))
        assert doc["beta"] == 2 and doc["lambda"] == 3 and doc["alpha"] == 2
        assert not doc["even_leaf_class"]
        assert "alpha_equals_beta_by_construction" not in doc

    def test_non_forest_uses_oracle(self, capsys, monkeypatch):
        code, out, _ = run_cli(["analyze"], TRIANGLE_TEXT, capsys=capsys, monkeypatch=monkeypatch)
        doc = json.loads(out)
        assert code == 0 and doc["provenance"]["beta"] == "oracle"
        assert doc["beta"] == 1 and doc["lambda"] == 2 and doc["alpha"] == 1

    def test_values_consistent(self, capsys, monkeypatch):
        for text in (P5_TEXT, P4_TEXT, SPIDER2_TEXT, TRIANGLE_TEXT):
            _, out, _ = run_cli(["analyze"], text, capsys=capsys, monkeypatch=monkeypatch)
            doc = json.loads(out)
            assert doc["alpha"] <= doc["beta"] <= doc["lambda"] <= 2 * doc["beta"]

    def test_parse_error_exits_2(self, capsys, monkeypatch):
        code, _, err = run_cli(["analyze"], "0 x\n", capsys=capsys, monkeypatch=monkeypatch)
        assert code == 2 and "error" in err

    def test_budget_degrades_gracefully(self, capsys, monkeypatch):
        long_path = "\n".join(f"{i} {i + 1}" for i in range(20))
        code, out, _ = run_cli(["analyze"], long_path, capsys=capsys, monkeypatch=monkeypatch)
        doc = json.loads(out)
        assert code == 0
        jsonschema.validate(doc, load_schema("analyze"))
        assert doc["alpha"] == "unavailable (budget)"
        assert doc["beta"] == 10 and doc["lambda"] == 20
        assert doc["alpha_equals_beta_by_construction"] is True

    def test_exact_over_budget_exits_3(self, capsys, monkeypatch):
        long_path = "\n".join(f"{i} {i + 1}" for i in range(20))
        code, _, _ = run_cli(["analyze", "--exact"], long_path, capsys=capsys, monkeypatch=monkeypatch)
        assert code == 3

    def test_budget_flag_raises_cap(self, capsys, monkeypatch):
        long_path = "\n".join(f"{i} {i + 1}" for i in range(16))
        code, out, _ = run_cli(
            ["analyze", "--budget-edges", "16", "--exact"], long_path, capsys=capsys, monkeypatch=monkeypatch
        )
        assert code == 0 and json.loads(out)["alpha"] == 8


class TestConstruct:
    def test_p5(self, capsys, monkeypatch):
        code, out, _ = run_cli(["construct", "--verify"], P5_TEXT, capsys=capsys, monkeypatch=monkeypatch)
        doc = json.loads(out)
        assert code == 0
        jsonschema.validate(doc, load_schema("construct"))
        assert doc["certificate"] == "pass"
        assert len(doc["coloring"]["0"]) == 2 and doc["lambda"] == 4 and doc["beta"] == 2

    def test_spider(self, capsys, monkeypatch):
        code, out, _ = run_cli(["construct"], SPIDER2_TEXT, capsys=capsys, monkeypatch=monkeypatch)
        doc = json.loads(out)
        assert code == 0 and len(doc["coloring"]["0"]) == 3
        jsonschema.validate(doc, load_schema("construct"))

    def test_k2_exits_4(self, capsys, monkeypatch):
        code, _, err = run_cli(["construct"], "0 1\n", capsys=capsys, monkeypatch=monkeypatch)
        assert code == 4 and "error" in err

    def test_non_tree_exits_4(self, capsys, monkeypatch):
        code, _, _ = run_cli(["construct"], TRIANGLE_TEXT, capsys=capsys, monkeypatch=monkeypatch)
        assert code == 4

    def test_edges_sorted_for_diffing(self, capsys, monkeypatch):
        _, out, _ = run_cli(["construct"], SPIDER2_TEXT, capsys=capsys, monkeypatch=monkeypatch)
        doc = json.loads(out)
        for cls in ("0", "1"):
            pairs = [tuple(e) for e in doc["coloring"][cls]]
            assert pairs == sorted(pairs)
            assert all(a < b for a, b in pairs)


class TestVerify:
    def test_pass(self, tmp_path, capsys, monkeypatch):
        g = tmp_path / "g.edgelist"
        c = tmp_path / "c.coloring"
        g.write_text(P5_TEXT)
        c.write_text("0 1 0\n1 2 1\n2 3 0\n3 4 1\n")
        code, out, _ = run_cli(["verify", str(g), str(c)], capsys=capsys, monkeypatch=monkeypatch)
        doc = json.loads(out)
        assert code == 0 and doc["verdict"] == "pass" and doc["reasons"] == []
        jsonschema.validate(doc, load_schema("verify"))

    def test_fail_improper(self, tmp_path, capsys, monkeypatch):
        g = tmp_path / "g.edgelist"
        c = tmp_path / "c.coloring"
        g.write_text(P5_TEXT)
        c.write_text("0 1 0\n1 2 0\n")
        code, out, _ = run_cli(["verify", str(g), str(c)], capsys=capsys, monkeypatch=monkeypatch)
        doc = json.loads(out)
        assert code == 1 and doc["verdict"] == "fail" and "not proper" in doc["reasons"]
        jsonschema.validate(doc, load_schema("verify"))

    def test_foreign_edge_exits_2(self, tmp_path, capsys, monkeypatch):
        g = tmp_path / "g.edgelist"
        c = tmp_path / "c.coloring"
        g.write_text("0 1\n1 2\n")
        c.write_text("0 2 0\n")
        code, _, _ = run_cli(["verify", str(g), str(c)], capsys=capsys, monkeypatch=monkeypatch)
        assert code == 2

    def test_construct_verify_pipe(self, tmp_path, capsys, monkeypatch):
        _, out, _ = run_cli(["construct"], SPIDER2_TEXT, capsys=capsys, monkeypatch=monkeypatch)
        doc = json.loads(out)
        lines = [f"{a} {b} 0" for a, b in doc["coloring"]["0"]]
        lines += [f"{a} {b} 1" for a, b in doc["coloring"]["1"]]
        g = tmp_path / "g.edgelist"
        c = tmp_path / "c.coloring"
        g.write_text(SPIDER2_TEXT)
        c.write_text("\n".join(lines) + "\n")
        code, out, _ = run_cli(["verify", str(g), str(c)], capsys=capsys, monkeypatch=monkeypatch)
        assert code == 0 and json.loads(out)["verdict"] == "pass"


class TestGen:
    def test_prufer_all_counts(self, capsys, monkeypatch):
        code, out, _ = run_cli(["gen", "prufer-all", "--n", "3"], capsys=capsys, monkeypatch=monkeypatch)
        assert code == 0
        blocks = [b for b in out.split("---") if b.strip()]
        assert len(blocks) == 3

    def test_prufer_all_too_large(self, capsys, monkeypatch):
        code, _, _ = run_cli(["gen", "prufer-all", "--n", "20"], capsys=capsys, monkeypatch=monkeypatch)
        assert code == 2

    def test_missing_parameters(self, capsys, monkeypatch):
        assert run_cli(["gen", "prufer-all"], capsys=capsys, monkeypatch=monkeypatch)[0] == 2
        assert run_cli(["gen", "random-even-leaf"], capsys=capsys, monkeypatch=monkeypatch)[0] == 2
        assert run_cli(["gen", "nonsense"], capsys=capsys, monkeypatch=monkeypatch)[0] == 2

    def test_random_tree_round_trips_and_is_in_class(self, capsys, monkeypatch):
        from twomatchings import has_even_leaf_distances, parse_edge_list

        code, out, _ = run_cli(
            ["gen", "random-even-leaf", "--cherries", "3", "--seed", "7"],
            capsys=capsys,
            monkeypatch=monkeypatch,
        )
        assert code == 0 and "seed=7" in out
        g = parse_edge_list(out)
        assert g.n == 7 and has_even_leaf_distances(g)

    def test_deterministic_and_counted(self, capsys, monkeypatch):
        args = ["gen", "random-even-leaf", "--cherries", "4", "--seed", "3", "--count", "3"]
        _, first, _ = run_cli(args, capsys=capsys, monkeypatch=monkeypatch)
        _, second, _ = run_cli(args, capsys=capsys, monkeypatch=monkeypatch)
        assert first == second
        assert first.count("---") == 2 and "seed=5" in first


class TestSweep:
    def test_small_sweep(self, capsys, monkeypatch):
        code, out, _ = run_cli(["sweep", "--max-n", "5"], capsys=capsys, monkeypatch=monkeypatch)
        doc = json.loads(out)
        assert code == 0 and doc["ok"]
        jsonschema.validate(doc, load_schema("sweep"))
        by_n = {row["n"]: row for row in doc["rows"]}
        assert by_n[2] == {
            "n": 2, "trees": 1, "even_leaf": 0, "constructed": 0,
            "certificates_passed": 0, "alpha_beta_confirmed": 0, "case_histogram": {},
        }
        assert by_n[3]["even_leaf"] == 3 and by_n[4]["even_leaf"] == 4
        assert by_n[5]["trees"] == 125 and by_n[5]["even_leaf"] == 65
        assert by_n[5]["certificates_passed"] == 65 == by_n[5]["alpha_beta_confirmed"]

    def test_out_dir_untouched_when_clean(self, tmp_path, capsys, monkeypatch):
        out_dir = tmp_path / "failures"
        code, _, _ = run_cli(
            ["sweep", "--max-n", "3", "--out", str(out_dir)], capsys=capsys, monkeypatch=monkeypatch
        )
        assert code == 0 and not out_dir.exists()


def test_unknown_command_exits_2(capsys, monkeypatch):
    assert run_cli(["frobnicate"], capsys=capsys, monkeypatch=monkeypatch)[0] == 2
