import pytest

from knodeldom import (
    CERT_BOUND_MATCHED,
    CERT_EXHAUSTED,
    DomainError,
    KnodelGraph,
    ResourceLimitError,
    SolveOptions,
    gamma_t_formula,
    is_total_dominating,
    solve_min_dominating,
    solve_min_total_dominating,
    u,
    v,
)
from knodeldom.solver import STRATEGY_PRUNED, STRATEGY_PURE

from .bruteforce import (
    definitional_adjacency,
    is_dominating_brute,
    is_total_dominating_brute,
    min_lex_witness,
)

PURE = SolveOptions(strategy=STRATEGY_PURE)
PRUNED = SolveOptions(strategy=STRATEGY_PRUNED)

ORACLE_INSTANCES = [(3, 8), (3, 10), (3, 12), (3, 14), (2, 8), (2, 12), (1, 4), (1, 8), (4, 16)]


class TestTotalAgainstOracle:
    @pytest.mark.parametrize("delta,n", ORACLE_INSTANCES)
    def test_optimum_and_witness(self, delta, n):
        g = KnodelGraph(delta, n)
        adj = definitional_adjacency(delta, n)
        size, witness = min_lex_witness(adj, is_total_dominating_brute)
        for options in (PURE, PRUNED):
            res = solve_min_total_dominating(g, options)
            assert res.optimum == size, (delta, n, options.strategy)
            assert res.witness == witness, (delta, n, options.strategy)

    def test_w38_pinned_witness(self):
        res = solve_min_total_dominating(KnodelGraph(3, 8), PURE)
        assert res.optimum == 4
        assert res.witness == (u(1), u(2), v(1), v(2))

    @pytest.mark.parametrize("n,expected", [(10, 4), (14, 6), (8, 4)])
    def test_formula_examples(self, n, expected):
        assert solve_min_total_dominating(KnodelGraph(3, n), PURE).optimum == expected

    def test_matches_formula_through_20(self):
        for n in range(8, 22, 2):
            res = solve_min_total_dominating(KnodelGraph(3, n), PRUNED)
            assert res.optimum == gamma_t_formula(n)


class TestDominatingAgainstOracle:
    @pytest.mark.parametrize("delta,n", ORACLE_INSTANCES)
    def test_optimum_and_witness(self, delta, n):
        g = KnodelGraph(delta, n)
        adj = definitional_adjacency(delta, n)
        size, witness = min_lex_witness(adj, is_dominating_brute)
        for options in (PURE, PRUNED):
            res = solve_min_dominating(g, options)
            assert res.optimum == size, (delta, n, options.strategy)
            assert res.witness == witness, (delta, n, options.strategy)

    def test_single_edge(self):
        res = solve_min_dominating(KnodelGraph(1, 2), PURE)
        assert res.optimum == 1
        assert res.witness == (u(1),)

    def test_w38_value(self):
        assert solve_min_dominating(KnodelGraph(3, 8), PRUNED).optimum == 2

    def test_w310_at_most_gamma_t(self):
        res = solve_min_dominating(KnodelGraph(3, 10), PRUNED)
        assert res.optimum <= 4
        assert res.optimum == 3


class TestResultContracts:
    def test_witness_is_actually_optimal_and_minimal(self):
        for n in range(8, 16, 2):
            g = KnodelGraph(3, n)
            res = solve_min_total_dominating(g, PRUNED)
            assert is_total_dominating(g, res.witness).holds
            assert len(res.witness) == res.optimum
            for w in res.witness:
                remainder = set(res.witness) - {w}
                assert not is_total_dominating(g, remainder).holds

    def test_monotone_sanity(self):
        for n in range(8, 16, 2):
            g = KnodelGraph(3, n)
            gamma = solve_min_dominating(g, PRUNED).optimum
            gamma_t = solve_min_total_dominating(g, PRUNED).optimum
            assert gamma <= gamma_t <= 2 * gamma

    def test_certificates(self):
        # pruned with delta=3 always lands on the counting bound
        res = solve_min_total_dominating(KnodelGraph(3, 14), PRUNED)
        assert res.certificate == CERT_BOUND_MATCHED
        assert res.optimum == 2 * ((14 + 4) // 5)
        # pure-exhaustive starts at ceil(n/3) and had to refute sizes for n=12
        res = solve_min_total_dominating(KnodelGraph(3, 12), PURE)
        assert res.certificate == CERT_EXHAUSTED
        # ... but not for n=10 where ceil(10/3) = 4 is already the optimum
        res = solve_min_total_dominating(KnodelGraph(3, 10), PURE)
        assert res.certificate == CERT_BOUND_MATCHED

    def test_bound_matched_implies_counting_bound_value(self):
        for n in range(8, 20, 2):
            for options in (PURE, PRUNED):
                res = solve_min_total_dominating(KnodelGraph(3, n), options)
                if res.certificate == CERT_BOUND_MATCHED:
                    assert res.optimum == 2 * ((n + 4) // 5)

    def test_nodes_and_elapsed_populate(self):
        res = solve_min_total_dominating(KnodelGraph(3, 10), PRUNED)
        assert res.nodes_explored > 0
        assert res.elapsed >= 0.0


class TestDeterminismAcrossTasks:
    @pytest.mark.parametrize("strategy", [STRATEGY_PRUNED, STRATEGY_PURE])
    def test_task_count_does_not_change_result(self, strategy):
        g = KnodelGraph(3, 14)
        results = [
            solve_min_total_dominating(g, SolveOptions(strategy=strategy, tasks=tasks))
            for tasks in (1, 2, 4)
        ]
        fields = {(r.optimum, r.witness, r.certificate) for r in results}
        assert len(fields) == 1

    def test_dominating_too(self):
        g = KnodelGraph(3, 12)
        a = solve_min_dominating(g, SolveOptions(tasks=1))
        b = solve_min_dominating(g, SolveOptions(tasks=3))
        assert (a.optimum, a.witness, a.certificate) == (b.optimum, b.witness, b.certificate)


class TestGuardsAndLimits:
    def test_pure_guard(self):
        with pytest.raises(ResourceLimitError):
            solve_min_total_dominating(KnodelGraph(3, 26), PURE)

    def test_pruned_guard(self):
        with pytest.raises(ResourceLimitError):
            solve_min_total_dominating(KnodelGraph(3, 42), PRUNED)

    def test_override_flag(self):
        options = SolveOptions(strategy=STRATEGY_PRUNED, override_guard=True)
        res = solve_min_total_dominating(KnodelGraph(3, 42), options)
        assert res.optimum == gamma_t_formula(42)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("KNODELDOM_GUARD_OVERRIDE", "1")
        res = solve_min_total_dominating(KnodelGraph(3, 42), PRUNED)
        assert res.optimum == gamma_t_formula(42)

    def test_node_budget(self):
        options = SolveOptions(strategy=STRATEGY_PRUNED, max_nodes=3)
        with pytest.raises(ResourceLimitError) as excinfo:
            solve_min_total_dominating(KnodelGraph(3, 20), options)
        assert excinfo.value.upper_bound == gamma_t_formula(20)

    def test_bad_options(self):
        with pytest.raises(DomainError):
            solve_min_total_dominating(KnodelGraph(3, 10), SolveOptions(strategy="greedy"))
        with pytest.raises(DomainError):
            solve_min_total_dominating(KnodelGraph(3, 10), SolveOptions(tasks=0))
