from __future__ import annotations

import pytest

from conftest import P
from symherm import PreconditionError, VariableSet, hermite_normal_form, parse_nodes
from symherm.verify import (
    SUITES,
    Case,
    SuiteResult,
    linear_solve_interpolant,
    minimize,
    monomial_symmetric,
    random_corpus,
    run_suites,
    suite_methods,
    symmetric_monomial_basis,
)


def test_corpus_is_seeded_and_well_formed():
    a = random_corpus(seed=7, count=30)
    b = random_corpus(seed=7, count=30)
    assert [(c.h, c.A) for c in a] == [(c.h, c.A) for c in b]
    assert [(c.h, c.A) for c in random_corpus(seed=8, count=30)] != [(c.h, c.A) for c in a]
    for k, case in enumerate(a):
        assert 1 <= case.n <= case.A.d <= 6
        assert case.A.is_numeric
        assert all(e <= case.A.d + 2 for e in case.h.main_degrees())
        if k % 3 == 0:
            assert case.A.is_distinct


def test_monomial_symmetric_basis():
    vars = VariableSet.standard(2)
    assert monomial_symmetric(vars, (2, 0)) == P("x1^2 + x2^2", vars)
    assert monomial_symmetric(vars, (1, 1)) == P("x1*x2", vars)
    assert len(symmetric_monomial_basis(vars, 2)) == 6


def test_linear_solve_oracle_three_points():
    vars = VariableSet.standard(2)
    r = linear_solve_interpolant(P("x1^2 + x2^2", vars), parse_nodes("0, 1, 2"))
    assert r == P("-2 + 3*x1 + 3*x2 - x1*x2", vars)
    with pytest.raises(PreconditionError):
        linear_solve_interpolant(P("x1 + x2", vars), parse_nodes("a, b, c"))


def test_minimize_drops_irrelevant_orbits():
    vars = VariableSet.standard(2)
    h = P("x1^3 + x2^3 + 5*x1*x2 + 7", vars)
    small = minimize(h, lambda g: g.coefficient((1, 1)) != 0)
    assert small == P("5*x1*x2", vars)


def test_failures_are_reported_with_a_counterexample(monkeypatch):
    import symherm.verify as verify

    real = verify.hermite_interpolant

    def broken(h, A, method="normal_form"):
        out = real(h, A, method)
        return out + 1 if method == "bridge" and h.total_degree() > 3 else out

    monkeypatch.setattr(verify, "hermite_interpolant", broken)
    vars = VariableSet.standard(2)
    res = suite_methods([Case(P("x1^4*x2^4 + x1 + x2", vars), parse_nodes("0, 1, 2"))])
    assert not res.passed
    assert "bridge != normal_form" in res.failures[0]
    assert "x1^4*x2^4" in res.failures[0] and "x1 + x2" not in res.failures[0]
    assert res.line().startswith("[FAIL] methods")


def test_run_suites_default_corpus_passes():
    results = run_suites(SUITES, count=30)
    assert [r.name for r in results] == list(SUITES)
    assert all(r.passed and r.checked > 0 for r in results), [r.line() for r in results]


def test_run_suites_on_given_nodes():
    (vdm,) = run_suites(["vdm"], nodes=parse_nodes("a^3, b^2"))
    assert vdm.passed and vdm.notes == ["det V_5({a^3, b^2}) = (b - a)^6"]
    res = run_suites(["contract", "methods"], nodes=parse_nodes("a^2, b"), n=2, count=4)
    assert all(r.passed for r in res)


def test_unknown_suite():
    with pytest.raises(PreconditionError):
        run_suites(["nope"])


def test_suite_result_line():
    assert SuiteResult("x", checked=3).line() == "[PASS] x: 3 checks, 0 failures"
    assert hermite_normal_form(VariableSet.standard(1).one(), parse_nodes("1")) == 1
