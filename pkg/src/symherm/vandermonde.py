"""Confluent (generalized) Vandermonde matrices.

A node ``a`` of multiplicity ``d_i`` contributes ``d_i`` columns; column ``c``
of its block is the power column ``(1, a, ..., a^{d-1})`` differentiated
``c`` times and divided by ``c!``, i.e. entry ``(r, c) = C(r, c) a^{r-c}``.
"""

from __future__ import annotations

from math import comb

from .errors import PreconditionError
from .matrix import PolyMatrix, determinant
from .nodes import ColumnSubset, NodeMultiset
from .poly import Polynomial, VariableSet


def _as_poly(a, vars: VariableSet) -> Polynomial:
    if isinstance(a, Polynomial):
        if a.vars != vars:
            return a.embed(vars)
        return a
    if isinstance(a, str):
        return vars.var(a)
    return Polynomial.constant(vars, a)


def vdm_block(a, d: int, d_i: int, vars: VariableSet | None = None) -> PolyMatrix:
    """``d x d_i`` block with entry ``(r, c) = C(r, c) a^{r-c}``."""
    if not 1 <= d_i <= d:
        raise PreconditionError(f"block width {d_i} must lie in 1..{d}")
    if vars is None:
        vars = a.vars if isinstance(a, Polynomial) else VariableSet((), (a,) if isinstance(a, str) else ())
    a = _as_poly(a, vars)
    powers = [vars.one()]
    for _ in range(d - 1):
        powers.append(powers[-1] * a)
    rows = [[powers[r - c] * comb(r, c) if r >= c else vars.zero() for c in range(d_i)] for r in range(d)]
    return PolyMatrix.from_rows(vars, rows)


def assemble_vdm(A: NodeMultiset, vars: VariableSet | None = None) -> PolyMatrix:
    """``V_d(A)``: the blocks of all nodes side by side, in node order."""
    if vars is None:
        vars = VariableSet((), A.params)
    A.check_vars(vars)
    d = A.d
    columns = []
    for i, mult in enumerate(A.multiplicities):
        columns.extend(vdm_block(A.value_poly(i, vars), d, mult, vars).columns())
    return PolyMatrix.from_columns(vars, columns, d)


def delete_columns(M: PolyMatrix, subset: ColumnSubset) -> PolyMatrix:
    picks = tuple(subset)
    if not picks:
        raise PreconditionError("column subset must not be empty")
    if picks[-1] >= M.cols:
        raise IndexError(f"column {picks[-1]} out of range for {M.cols} columns")
    drop = set(picks)
    return M.select_columns([j for j in range(M.cols) if j not in drop])


def attach_variable_columns(M: PolyMatrix, vars: VariableSet) -> PolyMatrix:
    """Prefix the power columns ``(1, x_k, ..., x_k^{d-1})`` of the main variables."""
    n = vars.n
    d = M.rows
    if M.cols != d - n:
        raise PreconditionError(f"expected a {d} x {d - n} matrix, got {M.rows} x {M.cols}")
    if M.vars != vars:
        M = M.map(lambda e: e.embed(vars), vars)
    prefix = []
    for x in vars.gens():
        col = [vars.one()]
        for _ in range(d - 1):
            col.append(col[-1] * x)
        prefix.append(col)
    return PolyMatrix.from_columns(vars, prefix + M.columns(), d)


def vdm_det_formula(A: NodeMultiset, vars: VariableSet | None = None) -> Polynomial:
    """``prod_{i<j} (a_j - a_i)^{d_i d_j}``."""
    if vars is None:
        vars = VariableSet((), A.params)
    A.check_vars(vars)
    mult = A.multiplicities
    out = vars.one()
    for j in range(A.m):
        for i in range(j):
            out = out * (A.value_poly(j, vars) - A.value_poly(i, vars)) ** (mult[i] * mult[j])
    return out


def vdm_determinant(A: NodeMultiset, vars: VariableSet | None = None, method: str = "auto") -> Polynomial:
    return determinant(assemble_vdm(A, vars), method)
