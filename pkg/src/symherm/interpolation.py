"""Symmetric Hermite interpolation by several independent routes.

``normal_form``
    remainder modulo the triangular Groebner family ``G``.
``basis``
    expansion in the determinantal Hermite basis ``omega_{A'}`` with
    coordinates read off from scaled derivatives of ``v_n h`` at the nodes.
``bridge``
    remainder of ``v_n h`` modulo ``F = {f(x_i)}``, divided by ``v_n``.
``lagrange``
    closed-form sum over ``n``-subsets, distinct nodes only.
``taylor``
    Schur-basis expansion, single node only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Mapping

from .errors import InexactDivisionError, PreconditionError
from .matrix import block_laplace_determinant
from .nodes import ColumnSubset, NodeMultiset, enumerate_subsets
from .normal_form import f_normal_form, hermite_normal_form
from .poly import Polynomial, VariableSet, exact_divide, is_symmetric, scaled_partial, substitute
from .symmetric import schur_polynomial, vandermonde_poly
from .vandermonde import assemble_vdm, attach_variable_columns, delete_columns, vdm_det_formula

METHODS = ("normal_form", "basis", "bridge", "lagrange", "taylor")


@dataclass(frozen=True)
class BasisElement:
    subset: ColumnSubset
    omega: Polynomial
    det_form: Polynomial


def _require_symmetric(h: Polynomial) -> None:
    if not is_symmetric(h):
        raise PreconditionError("input must be symmetric")


def _require_size(A: NodeMultiset, vars: VariableSet) -> None:
    if vars.n < 1:
        raise PreconditionError("need at least one main variable")
    if A.d < vars.n:
        raise PreconditionError(f"need |A| >= n (|A| = {A.d}, n = {vars.n})")
    A.check_vars(vars)


def basis_element(A: NodeMultiset, subset: ColumnSubset, vars: VariableSet | None = None) -> BasisElement:
    """``det V(X u (A minus A')) / v_n(X)`` for one column subset."""
    if vars is None:
        vars = A.session_vars(len(subset))
    _require_size(A, vars)
    if len(subset) != vars.n:
        raise PreconditionError(f"subset has {len(subset)} columns, expected {vars.n}")
    M = attach_variable_columns(delete_columns(assemble_vdm(A, vars), subset), vars)
    # only the first n columns involve X; expand along them
    det_form = block_laplace_determinant(M, vars.n)
    try:
        omega = exact_divide(det_form, vandermonde_poly(vars))
    except InexactDivisionError as exc:  # pragma: no cover - the determinant is alternating
        raise AssertionError(f"det form for {subset.picks} is not divisible by v_n") from exc
    return BasisElement(subset, omega, det_form)


@lru_cache(maxsize=128)
def hermite_basis(A: NodeMultiset, vars: VariableSet) -> tuple[BasisElement, ...]:
    """All ``C(d, n)`` basis elements in subset enumeration order."""
    return tuple(basis_element(A, s, vars) for s in enumerate_subsets(A, vars.n))


def derivative_evaluate(g: Polynomial, A: NodeMultiset, subset: ColumnSubset) -> Polynomial:
    """Apply the scaled derivative of order ``j`` in ``x_k`` when the ``k``-th pick
    carries label ``a_{i,j}``, then evaluate ``x_k`` at ``a_i``.

    The result is free of main variables.
    """
    vars = g.vars
    A.check_vars(vars)
    if len(subset) != vars.n:
        raise PreconditionError(f"subset has {len(subset)} columns, expected {vars.n}")
    bindings = {}
    for x, (block, order) in zip(vars.main, subset.labels(A)):
        g = scaled_partial(g, x, order)
        bindings[x] = A.value_poly(block, vars)
    return substitute(g, bindings)


def epsilon_sign(A: NodeMultiset, subset: ColumnSubset, vars: VariableSet | None = None) -> int:
    if vars is None:
        vars = A.session_vars(len(subset))
    elem = _basis_lookup(A, vars, subset)
    value = derivative_evaluate(elem.det_form, A, subset)
    vd = vdm_det_formula(A, vars)
    if value == vd:
        return 1
    if value == -vd:
        return -1
    raise AssertionError(f"scaled derivative of det form at {subset.picks} is not +-v_d(A)")


def _basis_lookup(A: NodeMultiset, vars: VariableSet, subset: ColumnSubset) -> BasisElement:
    for elem in hermite_basis(A, vars):
        if elem.subset == subset:
            return elem
    raise PreconditionError(f"{subset.picks} is not a valid {vars.n}-subset of {A.d} columns")


@lru_cache(maxsize=128)
def hermite_signs(A: NodeMultiset, vars: VariableSet) -> tuple[int, ...]:
    return tuple(epsilon_sign(A, e.subset, vars) for e in hermite_basis(A, vars))


def _linear_factors(A: NodeMultiset, vars: VariableSet) -> tuple[tuple[Polynomial, int], ...]:
    mult = A.multiplicities
    return tuple(
        (A.value_poly(j, vars) - A.value_poly(i, vars), mult[i] * mult[j])
        for j in range(A.m)
        for i in range(j)
    )


@dataclass(frozen=True)
class CoordinateVector:
    """Coordinates of an interpolant in the Hermite basis.

    Entry ``c_{A'}`` is ``numerators[A'] / denominator`` with the common
    denominator ``v_d(A)``.  For rational nodes every entry is a polynomial
    in the remaining parameters; for symbolic nodes entries can be genuine
    fractions, see :meth:`reduced`.
    """

    subsets: tuple[ColumnSubset, ...]
    signs: Mapping[ColumnSubset, int]
    numerators: Mapping[ColumnSubset, Polynomial]
    denominator: Polynomial
    factors: tuple[tuple[Polynomial, int], ...] = ()

    def entry(self, subset: ColumnSubset) -> Polynomial:
        """``c_{A'}`` as a polynomial; raises InexactDivisionError if it is not one."""
        num = self.numerators[subset]
        if self.denominator.is_constant():
            return num / self.denominator.constant_value()
        return exact_divide(num, self.denominator)

    @property
    def entries(self) -> dict[ColumnSubset, Polynomial]:
        return {s: self.entry(s) for s in self.subsets}

    def reduced(self, subset: ColumnSubset) -> tuple[Polynomial, Polynomial]:
        """``(num, den)`` with every removable linear factor of ``v_d(A)`` cancelled."""
        num = self.numerators[subset]
        vars = num.vars
        den = vars.one()
        if self.denominator.is_constant() or not self.factors:
            return self.entry(subset), vars.one()
        for factor, exp in self.factors:
            if factor.is_constant():
                num = num / factor.constant_value() ** exp
                continue
            while exp and num:
                try:
                    num = exact_divide(num, factor)
                except InexactDivisionError:
                    break
                exp -= 1
            if num.is_zero():
                return num, vars.one()
            den = den * factor ** exp
        return num, den

    def combine(self, basis: tuple[BasisElement, ...]) -> Polynomial:
        """``sum c_{A'} omega_{A'}``, dividing by the common denominator once."""
        by_subset = {e.subset: e.omega for e in basis}
        total = None
        for s in self.subsets:
            term = self.numerators[s] * by_subset[s]
            total = term if total is None else total + term
        if self.denominator.is_constant():
            return total / self.denominator.constant_value()
        return exact_divide(total, self.denominator)


def coordinates(h: Polynomial, A: NodeMultiset) -> CoordinateVector:
    """``c_{A'} = eps_{A'} * d^{A'}(v_n h)(A') / v_d(A)`` for every column subset."""
    vars = h.vars
    _require_size(A, vars)
    _require_symmetric(h)
    basis = hermite_basis(A, vars)
    signs = hermite_signs(A, vars)
    g = vandermonde_poly(vars) * h
    nums = {}
    for elem, eps in zip(basis, signs):
        val = derivative_evaluate(g, A, elem.subset)
        nums[elem.subset] = val if eps > 0 else -val
    subsets = tuple(e.subset for e in basis)
    return CoordinateVector(
        subsets,
        dict(zip(subsets, signs)),
        nums,
        vdm_det_formula(A, vars),
        _linear_factors(A, vars),
    )


def basis_interpolant(h: Polynomial, A: NodeMultiset) -> Polynomial:
    return coordinates(h, A).combine(hermite_basis(A, h.vars))


def bridge_interpolant(h: Polynomial, A: NodeMultiset) -> Polynomial:
    """``r_F(v_n h) / v_n``."""
    _require_symmetric(h)
    vn = vandermonde_poly(h.vars)
    return exact_divide(f_normal_form(vn * h, A), vn)


def lagrange_interpolant(h: Polynomial, A: NodeMultiset) -> Polynomial:
    """``sum_{A'} h(A') R(X, A minus A') / R(A', A minus A')`` over value subsets.

    With symbolic nodes every ``R(A', A minus A')`` divides
    ``P = prod_{i<j} (a_j - a_i)`` up to sign, so the sum is formed over the
    common denominator ``P`` and divided once at the end.
    """
    vars = h.vars
    _require_size(A, vars)
    if not A.is_distinct:
        raise PreconditionError("Lagrange path requires distinct nodes")
    _require_symmetric(h)
    vals = [A.value_poly(i, vars) for i in range(A.m)]
    xs = vars.gens()
    common = vars.one()
    for j in range(A.m):
        for i in range(j):
            common = common * (vals[j] - vals[i])
    total = vars.zero()
    for picked in combinations(range(A.m), vars.n):
        rest = [vals[i] for i in range(A.m) if i not in picked]
        h_at = substitute(h, {x: vals[i] for x, i in zip(vars.main, picked)})
        if not h_at:
            continue
        r_x = vars.one()
        r_a = vars.one()
        for a_rest in rest:
            for x in xs:
                r_x = r_x * (x - a_rest)
            for i in picked:
                r_a = r_a * (vals[i] - a_rest)
        total = total + h_at * r_x * exact_divide(common, r_a)
    if common.is_constant():
        return total / common.constant_value()
    return exact_divide(total, common)


def taylor_interpolant(h: Polynomial, d: int, n: int | None = None) -> Polynomial:
    """Interpolant at the all-zero multiset of size ``d`` via the Schur basis."""
    vars = h.vars
    if n is not None and n != vars.n:
        raise PreconditionError(f"n={n} does not match {vars.n} main variables")
    n = vars.n
    if not 1 <= n <= d:
        raise PreconditionError(f"need 1 <= n <= d (n = {n}, d = {d})")
    _require_symmetric(h)
    zeros = NodeMultiset(((0, d),))
    g = vandermonde_poly(vars) * h
    total = vars.zero()
    for s in enumerate_subsets(zeros, n):
        coeff = derivative_evaluate(g, zeros, s)
        if coeff:
            total = total + coeff * schur_polynomial(s.picks, vars, d)
    return total


def _shift(p: Polynomial, a: Polynomial) -> Polynomial:
    return substitute(p, {x: p.vars.var(x) + a for x in p.vars.main})


def hermite_interpolant(h: Polynomial, A: NodeMultiset, method: str = "normal_form") -> Polynomial:
    """The symmetric Hermite interpolant of ``h`` at ``A`` by the chosen route."""
    vars = h.vars
    _require_size(A, vars)
    _require_symmetric(h)
    if method == "normal_form":
        return hermite_normal_form(h, A)
    if method == "basis":
        return basis_interpolant(h, A)
    if method == "bridge":
        return bridge_interpolant(h, A)
    if method == "lagrange":
        return lagrange_interpolant(h, A)
    if method == "taylor":
        if A.m != 1:
            raise PreconditionError("Taylor path requires a single node block")
        a = A.value_poly(0, vars)
        if not a:
            return taylor_interpolant(h, A.d)
        # translate the node to 0 and back
        return _shift(taylor_interpolant(_shift(h, a), A.d), -a)
    raise PreconditionError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def applicable_methods(A: NodeMultiset) -> tuple[str, ...]:
    methods = ["normal_form", "basis", "bridge"]
    if A.is_distinct:
        methods.append("lagrange")
    if A.m == 1:
        methods.append("taylor")
    return tuple(methods)
