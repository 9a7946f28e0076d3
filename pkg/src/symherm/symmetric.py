"""Named families of symmetric polynomials."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .errors import InexactDivisionError, PreconditionError
from .matrix import PolyMatrix, determinant
from .poly import Polynomial, VariableSet, exact_divide


def complete_homogeneous(i: int, j: int, vars: VariableSet) -> Polynomial:
    """Sum of all monomials of total degree ``j`` in the first ``i`` main variables."""
    if not 1 <= i <= vars.n:
        raise PreconditionError(f"variable count {i} out of range 1..{vars.n}")
    if j < 0:
        raise PreconditionError("degree must be non-negative")
    terms = {}
    width = len(vars)
    for combo in combinations_with_replacement(range(i), j):
        mono = [0] * width
        for k in combo:
            mono[k] += 1
        terms[tuple(mono)] = Fraction(1)
    return Polynomial._raw(vars, terms)


def elementary_symmetric(k: int, values: Sequence, vars: VariableSet | None = None) -> Polynomial:
    """``s_k`` of a list of scalars and/or polynomials.

    The variable set is taken from the polynomial values, or from ``vars``;
    with neither, the result is a constant over the empty variable set.
    """
    if not 0 <= k <= len(values):
        raise PreconditionError(f"k={k} out of range 0..{len(values)}")
    for v in values:
        if isinstance(v, Polynomial):
            vars = v.vars
            break
    if vars is None:
        vars = VariableSet(())
    vals = [v if isinstance(v, Polynomial) else Polynomial.constant(vars, v) for v in values]
    e = [vars.one()] + [vars.zero()] * k
    for v in vals:
        for t in range(k, 0, -1):
            e[t] = e[t] + e[t - 1] * v
    return e[k]


def vandermonde_poly(vars: VariableSet) -> Polynomial:
    """``prod_{i<j} (x_j - x_i)`` over the main variables."""
    xs = vars.gens()
    v = vars.one()
    for j in range(len(xs)):
        for i in range(j):
            v = v * (xs[j] - xs[i])
    return v


def check_schur_index(idx: Sequence[int], n: int, d: int | None = None) -> tuple[int, ...]:
    idx = tuple(idx)
    if len(idx) != n:
        raise PreconditionError(f"Schur index needs {n} entries, got {len(idx)}")
    if any(a >= b for a, b in zip(idx, idx[1:])) or (idx and idx[0] < 0):
        raise PreconditionError(f"Schur index {idx} is not strictly increasing from 0")
    if d is not None and idx and idx[-1] >= d:
        raise PreconditionError(f"Schur index {idx} exceeds d-1={d - 1}")
    return idx


def alternant(idx: Sequence[int], vars: VariableSet) -> PolyMatrix:
    xs = vars.gens()
    return PolyMatrix.from_rows(vars, [[x ** e for e in idx] for x in xs])


def schur_polynomial(idx: Sequence[int], vars: VariableSet, d: int | None = None) -> Polynomial:
    """Bialternant ``det(x_k^{i_l}) / v_n`` for a strictly increasing column index."""
    idx = check_schur_index(idx, vars.n, d)
    num = determinant(alternant(idx, vars))
    try:
        return exact_divide(num, vandermonde_poly(vars))
    except InexactDivisionError as exc:  # pragma: no cover - alternants are always divisible
        raise AssertionError("alternant not divisible by the Vandermonde polynomial") from exc
