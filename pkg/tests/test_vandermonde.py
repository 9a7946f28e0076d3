from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

from conftest import P, to_sympy
from symherm import ColumnSubset, NodeMultiset, PolyMatrix, PreconditionError, VariableSet, assemble_vdm, determinant, parse_nodes
from symherm.poly import scaled_partial, substitute
from symherm.vandermonde import attach_variable_columns, delete_columns, vdm_block, vdm_det_formula, vdm_determinant
from symherm.verify import fixture_multisets

A5 = parse_nodes("a^3, b^2")


def _rows(vars, text_rows):
    return [[P(t, vars) for t in row] for row in text_rows]


def test_v5_matrix_entries():
    M = assemble_vdm(A5)
    expected = _rows(
        M.vars,
        [
            ["1", "0", "0", "1", "0"],
            ["a", "1", "0", "b", "1"],
            ["a^2", "2*a", "1", "b^2", "2*b"],
            ["a^3", "3*a^2", "3*a", "b^3", "3*b^2"],
            ["a^4", "4*a^3", "6*a^2", "b^4", "4*b^3"],
        ],
    )
    assert M.to_lists() == expected
    block = vdm_block("a", 5, 3, M.vars)
    assert block.columns() == M.columns()[:3]


def test_block_special_cases():
    vars = VariableSet((), ("a",))
    col = vdm_block("a", 4, 1, vars).column(0)
    assert col == tuple(P(t, vars) for t in ("1", "a", "a^2", "a^3"))
    z = vdm_block(0, 4, 3)
    for r in range(4):
        for c in range(3):
            assert z[r, c] == (1 if r == c else 0)
    with pytest.raises(PreconditionError):
        vdm_block("a", 3, 4, vars)


def test_assemble_special_cases():
    M = assemble_vdm(parse_nodes("0^4"))
    assert M.to_lists() == PolyMatrix.identity(M.vars, 4).to_lists()
    D = assemble_vdm(parse_nodes("1, 2, 3"))
    assert [[e.constant_value() for e in D.row(i)] for i in range(3)] == [[1, 1, 1], [1, 2, 3], [1, 4, 9]]


def test_delete_and_attach_reproduce_the_worked_matrix():
    vars = VariableSet(("x", "y"), ("a", "b"))
    reduced = delete_columns(assemble_vdm(A5), ColumnSubset((1, 3)))
    assert reduced.to_lists() == _rows(
        reduced.vars,
        [["1", "0", "0"], ["a", "0", "1"], ["a^2", "1", "2*b"], ["a^3", "3*a", "3*b^2"], ["a^4", "6*a^2", "4*b^3"]],
    )
    full = attach_variable_columns(reduced, vars)
    assert full.to_lists() == _rows(
        vars,
        [
            ["1", "1", "1", "0", "0"],
            ["x", "y", "a", "0", "1"],
            ["x^2", "y^2", "a^2", "1", "2*b"],
            ["x^3", "y^3", "a^3", "3*a", "3*b^2"],
            ["x^4", "y^4", "a^4", "6*a^2", "4*b^3"],
        ],
    )


def test_delete_and_attach_edge_cases():
    A = parse_nodes("1, 2")
    M = assemble_vdm(A)
    empty = delete_columns(M, ColumnSubset((0, 1)))
    assert (empty.rows, empty.cols) == (2, 0)
    vars = VariableSet.standard(2)
    full = attach_variable_columns(empty, vars)
    assert determinant(full) == P("x2 - x1", vars)
    one = attach_variable_columns(delete_columns(assemble_vdm(parse_nodes("5")), ColumnSubset((0,))), VariableSet.standard(1))
    assert one.to_lists() == [[1]]
    with pytest.raises(PreconditionError):
        delete_columns(M, ColumnSubset(()))
    with pytest.raises(IndexError):
        delete_columns(M, ColumnSubset((2,)))
    with pytest.raises(PreconditionError):
        attach_variable_columns(M, VariableSet.standard(1))


def test_determinant_formula_examples():
    a, b = sympy.symbols("a b")
    assert to_sympy(vdm_determinant(A5)) == sympy.expand((b - a) ** 6)
    assert to_sympy(vdm_det_formula(A5)) == sympy.expand((b - a) ** 6)
    assert to_sympy(vdm_det_formula(parse_nodes("a^2, b^2"))) == sympy.expand((b - a) ** 4)
    assert vdm_det_formula(parse_nodes("a^5")) == 1


@pytest.mark.parametrize("method", ["bareiss", "cofactor"])
def test_determinant_equals_formula_on_fixtures(method):
    for A in fixture_multisets():
        if A.d > 6 or (method == "cofactor" and A.d > 5):
            continue
        assert vdm_determinant(A, method=method) == vdm_det_formula(A)


def test_classical_vandermonde_for_distinct_rationals():
    vals = [Fraction(-2), Fraction(1, 3), Fraction(1), Fraction(7, 2)]
    A = NodeMultiset.of(*vals)
    expected = 1
    for j in range(4):
        for i in range(j):
            expected *= vals[j] - vals[i]
    assert vdm_determinant(A) == expected


def test_confluent_columns_are_scaled_derivatives_of_the_power_column():
    d = 6
    vars = VariableSet(("t",), ("a",))
    t = vars.var("t")
    block = vdm_block("a", d, 4, vars)
    for c in range(4):
        for r in range(d):
            value = substitute(scaled_partial(t ** r, "t", c), {"t": vars.var("a")})
            assert block[r, c] == value
