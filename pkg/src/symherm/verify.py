"""Randomized and fixture-driven verification suites.

Every check here is an exact polynomial identity.  A failing check records
the offending input, shrunk by dropping symmetric orbits while the failure
persists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import comb
from typing import Callable, Iterable

from .errors import PreconditionError
from .interpolation import (
    applicable_methods,
    coordinates,
    derivative_evaluate,
    hermite_basis,
    hermite_interpolant,
)
from .nodes import NodeMultiset, build_F, build_G, build_f, enumerate_subsets, f_coefficients
from .normal_form import f_normal_form, hermite_normal_form
from .poly import Polynomial, VariableSet, is_symmetric, substitute
from .symmetric import vandermonde_poly
from .vandermonde import vdm_det_formula, vdm_determinant

SUITES = ("identities", "vdm", "contract", "bridge", "methods", "basis")
DEFAULT_SEED = 20240611


# -- random inputs -----------------------------------------------------------


def monomial_symmetric(vars: VariableSet, exponents: Iterable[int]) -> Polynomial:
    """Sum over the distinct permutations of an exponent vector of the main variables."""
    exps = tuple(exponents)
    tail = (0,) * len(vars.params)
    return Polynomial(vars, {p + tail: 1 for p in set(permutations(exps))})


def symmetric_monomial_basis(vars: VariableSet, max_deg: int) -> list[Polynomial]:
    """Monomial symmetric functions with every exponent at most ``max_deg``."""
    n = vars.n
    return [
        monomial_symmetric(vars, tuple(reversed(lam)))
        for lam in combinations_with_replacement(range(max_deg + 1), n)
    ]


def random_rational(rng: random.Random, span: int = 5, den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_symmetric(rng: random.Random, vars: VariableSet, max_deg: int, orbits: int = 4) -> Polynomial:
    h = vars.zero()
    for _ in range(orbits):
        exps = [rng.randint(0, max_deg) for _ in range(vars.n)]
        h = h + monomial_symmetric(vars, exps) * random_rational(rng)
    return h


def random_multiset(rng: random.Random, d: int, distinct: bool = False) -> NodeMultiset:
    pool = sorted({random_rational(rng, 6, 2) for _ in range(4 * d)})
    if distinct:
        return NodeMultiset.of(*rng.sample(pool, d))
    m = rng.randint(1, d)
    cuts = sorted(rng.sample(range(1, d), m - 1)) if m > 1 else []
    mults = [b - a for a, b in zip([0] + cuts, cuts + [d])]
    values = rng.sample(pool, m)
    return NodeMultiset(tuple(zip(values, mults)))


@dataclass(frozen=True)
class Case:
    h: Polynomial
    A: NodeMultiset

    @property
    def n(self) -> int:
        return self.h.vars.n

    def describe(self) -> str:
        return f"h = {self.h}; A = {{{self.A}}}; n = {self.n}"


def random_corpus(seed: int = DEFAULT_SEED, count: int = 200, d_max: int = 6, n_max: int = 3) -> list[Case]:
    """Seeded random symmetric ``h`` (degree up to ``d+2`` per variable) and rational multisets.

    Every third case uses distinct nodes so the Lagrange conditions apply.
    """
    rng = random.Random(seed)
    cases = []
    for k in range(count):
        d = rng.randint(1, d_max)
        n = rng.randint(1, min(n_max, d))
        A = random_multiset(rng, d, distinct=(k % 3 == 0))
        vars = VariableSet.standard(n)
        h = random_symmetric(rng, vars, d + 2, orbits=rng.randint(1, 4))
        cases.append(Case(h, A))
    return cases


FIXTURE_NODES = (
    "a^3, b^2",
    "a^2, b^2",
    "a, b",
    "a, b, c",
    "a^2, b, c",
    "a^4",
    "a^3, b^3",
    "a^2, b^2, c^2",
    "a, b, c, d",
    "0^4",
    "0^6",
    "1, -1",
    "0, 1, 2",
    "1/2^2, 3",
    "1^2, 2^2",
    "-1^3, 2^2, 5",
    "1/3, 2/3, 1, 4/3, 5/3",
    "2^5, -3",
    "a^2, 1^3",
    "0^2, a^2, 1",
    "1/2, a^3",
    "-2^2, -1, 0^2, 7",
    "a, 0, 1, 2",
    "b^5, a",
)


def fixture_multisets() -> list[NodeMultiset]:
    from .nodes import parse_nodes

    return [parse_nodes(t) for t in FIXTURE_NODES]


# -- dense linear-algebra oracle ---------------------------------------------


def _solve(matrix: list[list[Fraction]], rhs: list[Polynomial]) -> list[Polynomial]:
    """Gauss-Jordan over the rationals; right-hand sides may be polynomials."""
    size = len(matrix)
    a = [list(row) for row in matrix]
    b = list(rhs)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col]), None)
        if pivot is None:
            raise ArithmeticError("singular coordinate system")
        a[col], a[pivot] = a[pivot], a[col]
        b[col], b[pivot] = b[pivot], b[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        b[col] = b[col] * inv
        for r in range(size):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = b[r] - b[col] * f
    return b


def linear_solve_interpolant(h: Polynomial, A: NodeMultiset) -> Polynomial:
    """Interpolant from the ``C(d,n)`` Hermite conditions on the monomial basis of ``S_{d-n}``.

    Uses only scaled derivatives and evaluation, never a normal form or a
    Vandermonde determinant.  Rational nodes only.
    """
    if not A.is_numeric:
        raise PreconditionError("linear-solve oracle needs rational nodes")
    vars = h.vars
    n = vars.n
    basis = symmetric_monomial_basis(vars, A.d - n)
    subsets = enumerate_subsets(A, n)
    assert len(basis) == len(subsets) == comb(A.d, n)
    vn = vandermonde_poly(vars)
    matrix = [[derivative_evaluate(vn * m, A, s).constant_value() for m in basis] for s in subsets]
    rhs = [derivative_evaluate(vn * h, A, s) for s in subsets]
    coeffs = _solve(matrix, rhs)
    total = vars.zero()
    for c, m in zip(coeffs, basis):
        total = total + c * m
    return total


# -- suites ------------------------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.checked} checks, {len(self.failures)} failures"


def _orbits(h: Polynomial) -> list[Polynomial]:
    n = h.vars.n
    seen = set()
    out = []
    for m in h.terms:
        if m in seen:
            continue
        orbit = {p + m[n:] for p in permutations(m[:n])}
        seen.update(orbit)
        out.append(Polynomial(h.vars, {o: h.coefficient(o) for o in orbit}))
    return out


def minimize(h: Polynomial, fails: Callable[[Polynomial], bool]) -> Polynomial:
    """Greedily drop symmetric orbits from ``h`` while ``fails`` keeps returning True."""
    parts = _orbits(h)
    i = 0
    while i < len(parts) and len(parts) > 1:
        trial = parts[:i] + parts[i + 1:]
        candidate = sum(trial[1:], trial[0])
        try:
            still = fails(candidate)
        except Exception:
            still = True
        if still:
            parts = trial
        else:
            i += 1
    return sum(parts[1:], parts[0]) if parts else h


def _record(result: SuiteResult, label: str, case: Case, fails: Callable[[Polynomial], bool]) -> None:
    small = minimize(case.h, fails)
    result.failures.append(f"{label}: h = {small}; A = {{{case.A}}}; n = {case.n}")


def suite_identities(multisets: list[NodeMultiset], n_max: int = 4) -> SuiteResult:
    """Recurrence between consecutive ``g_i`` and the telescoping expression of ``f(x_k)``."""
    res = SuiteResult("identities")
    for A in multisets:
        n = min(n_max, A.d)
        vars = A.session_vars(n)
        G = build_G(A, n, vars).members
        F = build_F(A, n, vars).members
        xs = vars.gens()
        for i in range(2, n + 1):
            shifted = substitute(G[i - 2], {vars.main[k]: xs[k + 1] for k in range(i - 1)})
            res.checked += 1
            if G[i - 1] * (xs[0] - xs[i - 1]) != G[i - 2] - shifted:
                res.failures.append(f"g_{i} recurrence: A = {{{A}}}")
        for k in range(1, n + 1):
            total = vars.zero()
            for j in range(1, k + 1):
                prod = vars.one()
                for i in range(1, j):
                    prod = prod * (xs[k - 1] - xs[i - 1])
                total = total + prod * G[j - 1]
            res.checked += 1
            if total != F[k - 1]:
                res.failures.append(f"f(x_{k}) telescoping: A = {{{A}}}")
        # coefficients of f against signed elementary symmetric polynomials
        f = build_f(A)
        coeffs = f_coefficients(A, f.vars)
        x = f.vars.var(f.vars.main[0])
        res.checked += 1
        if sum((c * x ** k for k, c in enumerate(coeffs)), f.vars.zero()) != f:
            res.failures.append(f"f coefficients: A = {{{A}}}")
    return res


def suite_vdm(multisets: list[NodeMultiset]) -> SuiteResult:
    res = SuiteResult("vdm")
    for A in multisets:
        if A.d > 6:
            continue
        det = vdm_determinant(A)
        formula = vdm_det_formula(A)
        res.checked += 1
        if det != formula:
            res.failures.append(f"det V_d(A) != product formula: A = {{{A}}}")
        else:
            res.notes.append(f"det V_{A.d}({{{A}}}) = {_factored(A)}")
    return res


def _factored(A: NodeMultiset) -> str:
    from .nodes import format_value

    parts = []
    mult = A.multiplicities
    vals = A.values
    for j in range(A.m):
        for i in range(j):
            e = mult[i] * mult[j]
            base = f"({format_value(vals[j])} - {format_value(vals[i])})"
            parts.append(base if e == 1 else f"{base}^{e}")
    if not parts:
        return "1"
    if A.is_numeric:
        return f"{' * '.join(parts)} = {vdm_det_formula(A)}"
    return " * ".join(parts)


def suite_contract(cases: list[Case]) -> SuiteResult:
    """Symmetry, degree bound, and the interpolation conditions at distinct nodes."""
    res = SuiteResult("contract")
    for case in cases:
        h, A, n = case.h, case.A, case.n
        r = hermite_normal_form(h, A)
        res.checked += 1
        if not is_symmetric(r) or any(e > A.d - n for e in r.main_degrees()):
            _record(res, "symmetry/degree", case,
                    lambda g: not is_symmetric(hermite_normal_form(g, A))
                    or any(e > A.d - n for e in hermite_normal_form(g, A).main_degrees()))
            continue
        if A.is_distinct:
            for s in enumerate_subsets(A, n):
                res.checked += 1
                if derivative_evaluate(r, A, s) != derivative_evaluate(h, A, s):
                    _record(res, f"condition at {s.describe(A)}", case,
                            lambda g: derivative_evaluate(hermite_normal_form(g, A), A, s)
                            != derivative_evaluate(g, A, s))
                    break
    return res


def suite_bridge(cases: list[Case]) -> SuiteResult:
    res = SuiteResult("bridge")

    def fails(g: Polynomial, A: NodeMultiset) -> bool:
        vn = vandermonde_poly(g.vars)
        return vn * hermite_normal_form(g, A) != f_normal_form(vn * g, A)

    for case in cases:
        res.checked += 1
        if fails(case.h, case.A):
            _record(res, "v_n r_G(h) != r_F(v_n h)", case, lambda g: fails(g, case.A))
    return res


def suite_methods(cases: list[Case], oracle_d_max: int = 5) -> SuiteResult:
    """All applicable methods agree; the normal form matches the dense linear solve."""
    res = SuiteResult("methods")
    for case in cases:
        h, A = case.h, case.A
        ref = hermite_normal_form(h, A)
        for method in applicable_methods(A):
            if method == "normal_form":
                continue
            res.checked += 1
            if hermite_interpolant(h, A, method) != ref:
                _record(res, f"{method} != normal_form", case,
                        lambda g: hermite_interpolant(g, A, method) != hermite_normal_form(g, A))
        if A.is_numeric and A.d <= oracle_d_max:
            res.checked += 1
            if linear_solve_interpolant(h, A) != ref:
                _record(res, "normal_form != linear-solve oracle", case,
                        lambda g: linear_solve_interpolant(g, A) != hermite_normal_form(g, A))
    return res


def suite_basis(cases: list[Case], seed: int = DEFAULT_SEED) -> SuiteResult:
    """Coordinates of a random ``r`` in ``S_{d-n}`` reconstruct ``r``."""
    res = SuiteResult("basis")
    rng = random.Random(seed + 1)
    for case in cases:
        A, vars = case.A, case.h.vars
        r = random_symmetric(rng, vars, A.d - vars.n, orbits=3)
        res.checked += 1
        if coordinates(r, A).combine(hermite_basis(A, vars)) != r:
            res.failures.append(f"basis reconstruction: r = {r}; A = {{{A}}}; n = {vars.n}")
    return res


def run_suites(
    suites: Iterable[str] = SUITES,
    seed: int = DEFAULT_SEED,
    count: int = 60,
    nodes: NodeMultiset | None = None,
    n: int | None = None,
    d_max: int = 5,
    n_max: int = 3,
) -> list[SuiteResult]:
    """Run the named suites on a seeded corpus, or on the given nodes only."""
    suites = list(suites)
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise PreconditionError(f"unknown suite(s) {unknown}; choose from {', '.join(SUITES)}")
    if nodes is not None:
        multisets = [nodes]
        ns = [n] if n else list(range(1, min(n_max, nodes.d) + 1))
        rng = random.Random(seed)
        cases = []
        for k in ns:
            vars = nodes.session_vars(k)
            for _ in range(max(1, count // len(ns))):
                cases.append(Case(random_symmetric(rng, vars, nodes.d + 2, rng.randint(1, 4)), nodes))
    else:
        multisets = fixture_multisets()
        cases = random_corpus(seed, count, d_max, n_max)
    results = []
    for name in suites:
        if name == "identities":
            results.append(suite_identities(multisets))
        elif name == "vdm":
            results.append(suite_vdm(multisets))
        elif name == "contract":
            results.append(suite_contract(cases))
        elif name == "bridge":
            results.append(suite_bridge(cases))
        elif name == "methods":
            results.append(suite_methods(cases))
        elif name == "basis":
            results.append(suite_basis(cases, seed))
    return results

