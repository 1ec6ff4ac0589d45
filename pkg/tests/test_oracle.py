import pytest

from twomatchings import (
    BudgetExceeded,
    Graph,
    OracleBudget,
    PartialColoring,
    enumerate_mpp,
    is_proper,
    oracle_alpha,
    oracle_beta,
    oracle_lambda,
)
from twomatchings.generators import all_labeled_trees

from fixture_graphs import K2, P3, P4, P5, SPIDER4, STAR3, TRIANGLE


class TestValues:
    def test_beta(self):
        assert oracle_beta(K2) == 1
        assert oracle_beta(P4) == 2
        assert oracle_beta(SPIDER4) == 4

    def test_lambda(self):
        assert oracle_lambda(P4) == 3
        assert oracle_lambda(STAR3) == 2
        assert oracle_lambda(Graph(3)) == 0

    def test_alpha(self):
        assert oracle_alpha(P5) == 2
        assert oracle_alpha(P4) == 2
        assert oracle_alpha(STAR3) == 1

    def test_non_tree_inputs(self):
        # odd cycle: all three edges cannot be colored
        assert oracle_lambda(TRIANGLE) == 2
        assert oracle_beta(TRIANGLE) == 1
        assert oracle_alpha(TRIANGLE) == 1
        square = Graph.from_edges([(0, 1), (1, 2), (2, 3), (0, 3)])
        assert oracle_lambda(square) == 4
        assert oracle_beta(square) == 2
        assert oracle_alpha(square) == 2


class TestEnumeration:
    def test_k2_order(self):
        result = enumerate_mpp(K2)
        assert [c.items() for c in result.colorings] == [
            [((0, 1), 0)],
            [((0, 1), 1)],
        ]
        assert not result.truncated

    def test_p3(self):
        result = enumerate_mpp(P3)
        assert len(result.colorings) == 2
        assert {c.items()[0][1] for c in result.colorings} == {0, 1}

    def test_empty_graph(self):
        result = enumerate_mpp(Graph(3))
        assert result.colorings == [PartialColoring()] and not result.truncated

    def test_truncation(self):
        result = enumerate_mpp(P5, OracleBudget(max_enumerated=2))
        assert len(result.colorings) == 2 and result.truncated

    def test_every_coloring_is_maximum_and_proper(self):
        for g in (P3, P4, P5, STAR3, SPIDER4, TRIANGLE):
            lam = oracle_lambda(g)
            result = enumerate_mpp(g)
            assert not result.truncated
            for f in result.colorings:
                assert is_proper(g, f)
                assert f.total() == lam

    def test_closed_under_swap(self):
        for g in (P3, P5, STAR3, SPIDER4, TRIANGLE):
            colorings = set(enumerate_mpp(g).colorings)
            assert {f.swap_colors() for f in colorings} == colorings

    def test_alpha_matches_enumeration_maximum(self):
        for g in (P3, P4, P5, STAR3, SPIDER4, TRIANGLE):
            best = max(max(f.class_sizes()) for f in enumerate_mpp(g).colorings)
            assert oracle_alpha(g) == best


class TestBudget:
    def test_budget_exceeded(self):
        big = Graph.from_edges([(i, i + 1) for i in range(20)])
        for op in (oracle_beta, oracle_lambda, oracle_alpha, enumerate_mpp):
            with pytest.raises(BudgetExceeded):
                op(big)

    def test_budget_must_be_positive(self):
        with pytest.raises(ValueError):
            OracleBudget(max_edges=0)


def test_alpha_le_beta_and_base_case_small():
    # the full n <= 8 run plus random graphs is the acceptance suite's job
    from twomatchings import has_even_leaf_distances

    for n in range(2, 7):
        for g in all_labeled_trees(n):
            alpha, beta = oracle_alpha(g), oracle_beta(g)
            assert alpha <= beta
            if has_even_leaf_distances(g):
                assert alpha == beta
