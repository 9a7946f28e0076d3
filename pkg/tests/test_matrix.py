from __future__ import annotations

import random

import pytest
import sympy

from conftest import P, to_sympy
from symherm import PolyMatrix, VariableSet, determinant
from symherm.matrix import bareiss_determinant, block_laplace_determinant, cofactor_determinant, leibniz_determinant
from symherm.verify import random_rational

METHODS = ("bareiss", "cofactor", "leibniz")


def _random_matrix(rng, vars, size):
    pool = [vars.var(v) for v in vars.names] + [vars.one()]
    rows = []
    for _ in range(size):
        row = []
        for _ in range(size):
            e = vars.zero()
            for _ in range(rng.randint(0, 2)):
                e = e + rng.choice(pool) * random_rational(rng)
            row.append(e)
        rows.append(row)
    return PolyMatrix.from_rows(vars, rows)


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_methods_agree_and_match_sympy(size):
    rng = random.Random(size)
    vars = VariableSet((), ("a", "b"))
    for _ in range(4):
        M = _random_matrix(rng, vars, size)
        dets = {m: determinant(M, m) for m in METHODS}
        assert len(set(dets.values())) == 1
        ref = sympy.Matrix([[to_sympy(e) for e in M.row(i)] for i in range(size)]).det()
        assert to_sympy(dets["bareiss"]) == sympy.expand(ref)


def test_identity_and_empty():
    vars = VariableSet((), ("a",))
    for k in range(5):
        assert determinant(PolyMatrix.identity(vars, k)) == 1
    assert bareiss_determinant(PolyMatrix.identity(vars, 0)) == 1


def test_alternating():
    rng = random.Random(7)
    vars = VariableSet((), ("a",))
    for size in (2, 3, 5):
        M = _random_matrix(rng, vars, size)
        assert determinant(M.swap_columns(0, size - 1)) == -determinant(M)
        cols = M.columns()
        cols[1] = cols[0]
        assert determinant(PolyMatrix.from_columns(vars, cols, size), "bareiss").is_zero()
        assert cofactor_determinant(PolyMatrix.from_columns(vars, cols, size)).is_zero()


def test_bareiss_pivots_past_zero_entries():
    vars = VariableSet((), ("a",))
    M = PolyMatrix.from_rows(vars, [[0, 1, 0], [1, 0, 0], [0, 0, P("a", vars)]])
    assert bareiss_determinant(M) == -P("a", vars)
    assert leibniz_determinant(M) == -P("a", vars)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_block_laplace_matches_plain_expansion(k):
    rng = random.Random(11 + k)
    vars = VariableSet(("x1", "x2"), ("a",))
    for _ in range(3):
        M = _random_matrix(rng, vars, 4)
        assert block_laplace_determinant(M, k) == determinant(M, "bareiss")


def test_shape_errors():
    vars = VariableSet(())
    M = PolyMatrix.from_rows(vars, [[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        determinant(M)
    with pytest.raises(ValueError):
        PolyMatrix.from_rows(vars, [[1, 2], [3]])
    with pytest.raises(ValueError):
        determinant(PolyMatrix.identity(vars, 2), "gauss")
    with pytest.raises(ValueError):
        block_laplace_determinant(PolyMatrix.identity(vars, 2), 3)
