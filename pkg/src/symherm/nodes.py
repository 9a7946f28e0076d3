"""Node multisets and the polynomial families they determine."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import ParseError, PreconditionError, VariableSetMismatch
from .poly import Polynomial, VariableSet
from .symmetric import complete_homogeneous, elementary_symmetric

NodeValue = Union[Fraction, str]

_SYMBOL = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def _node_value(v) -> NodeValue:
    if isinstance(v, str):
        if _SYMBOL.match(v):
            return v
        if _RATIONAL.match(v):
            return Fraction(v)
        raise ValueError(f"bad node value {v!r}")
    if isinstance(v, bool):
        raise TypeError("bool is not a node value")
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    raise TypeError(f"bad node value {v!r}")


@dataclass(frozen=True)
class NodeMultiset:
    """Ordered blocks ``(value, multiplicity)``; values are rationals or parameter names.

    Repeated values are merged into the first block carrying them and
    ``merged`` is set.  Distinct symbols are assumed to be distinct values.
    """

    nodes: tuple[tuple[NodeValue, int], ...]
    merged: bool = field(default=False, compare=False)

    def __post_init__(self):
        blocks: dict = {}
        merged = self.merged
        for value, mult in self.nodes:
            value = _node_value(value)
            if not isinstance(mult, int) or mult < 1:
                raise PreconditionError(f"multiplicity of {value} must be a positive integer, got {mult}")
            if value in blocks:
                merged = True
                blocks[value] += mult
            else:
                blocks[value] = mult
        if not blocks:
            raise PreconditionError("node multiset is empty")
        object.__setattr__(self, "nodes", tuple(blocks.items()))
        object.__setattr__(self, "merged", merged)

    @classmethod
    def of(cls, *values) -> NodeMultiset:
        """Flat list of values, repetitions meaning multiplicity."""
        return cls(tuple((v, 1) for v in values))

    @property
    def values(self) -> tuple[NodeValue, ...]:
        return tuple(v for v, _ in self.nodes)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.nodes)

    @property
    def m(self) -> int:
        return len(self.nodes)

    @property
    def d(self) -> int:
        return sum(self.multiplicities)

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(v for v in self.values if isinstance(v, str))

    @property
    def is_numeric(self) -> bool:
        return not self.params

    @property
    def is_distinct(self) -> bool:
        return all(m == 1 for m in self.multiplicities)

    @property
    def labels(self) -> tuple[tuple[int, int], ...]:
        """Column labels ``(block, order)`` in column order."""
        return tuple((i, j) for i, (_, m) in enumerate(self.nodes) for j in range(m))

    def label_name(self, column: int) -> str:
        i, j = self.labels[column]
        return f"{format_value(self.values[i])}_{j}"

    def flat_values(self) -> tuple[NodeValue, ...]:
        return tuple(v for v, mult in self.nodes for _ in range(mult))

    def value_poly(self, block: int, vars: VariableSet) -> Polynomial:
        v = self.values[block]
        if isinstance(v, str):
            return vars.var(v)
        return Polynomial.constant(vars, v)

    def check_vars(self, vars: VariableSet) -> None:
        missing = [p for p in self.params if p not in vars.params]
        if missing:
            raise VariableSetMismatch(f"node symbols {missing} are not parameters of {vars.names}")

    def session_vars(self, n: int, extra_params: Iterable[str] = ()) -> VariableSet:
        return VariableSet.standard(n, self.params).with_params(extra_params)

    def __str__(self):
        return ", ".join(format_value(v) if m == 1 else f"{format_value(v)}^{m}" for v, m in self.nodes)


def format_value(v: NodeValue) -> str:
    if isinstance(v, str):
        return v
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_nodes(text: str) -> NodeMultiset:
    """Parse ``"a^3, b^2"`` or ``"1/2^3, 4^2"`` (``^1`` may be omitted)."""
    pairs = []
    pos = 0
    for item in text.split(","):
        start = pos + len(item) - len(item.lstrip())
        pos += len(item) + 1
        item = item.strip()
        if not item:
            raise ParseError("empty node entry", start, text)
        value, sep, mult = item.rpartition("^")
        if not sep:
            value, mult = item, "1"
        value = value.strip()
        mult = mult.strip()
        if not mult.isdigit():
            raise ParseError(f"bad multiplicity {mult!r}", start, text)
        if not (_SYMBOL.match(value) or _RATIONAL.match(value)):
            raise ParseError(f"bad node value {value!r}", start, text)
        if int(mult) < 1:
            raise ParseError("multiplicity must be at least 1", start, text)
        pairs.append((value, int(mult)))
    return NodeMultiset(tuple(pairs))


@dataclass(frozen=True)
class ColumnSubset:
    """Strictly increasing column indices into the labels of a node multiset."""

    picks: tuple[int, ...]

    def __post_init__(self):
        picks = tuple(self.picks)
        if any(p < 0 for p in picks) or any(a >= b for a, b in zip(picks, picks[1:])):
            raise ValueError(f"column subset {picks} must be strictly increasing and non-negative")
        object.__setattr__(self, "picks", picks)

    def __len__(self):
        return len(self.picks)

    def __iter__(self):
        return iter(self.picks)

    def labels(self, A: NodeMultiset) -> tuple[tuple[int, int], ...]:
        lab = A.labels
        return tuple(lab[c] for c in self.picks)

    def describe(self, A: NodeMultiset) -> str:
        return "(" + ", ".join(A.label_name(c) for c in self.picks) + ")"


def enumerate_subsets(A: NodeMultiset, n: int) -> list[ColumnSubset]:
    if not 1 <= n <= A.d:
        raise PreconditionError(f"need 1 <= n <= |A| = {A.d}, got n={n}")
    return [ColumnSubset(c) for c in combinations(range(A.d), n)]


# -- the univariate f and the families G, F ---------------------------------


def build_f(A: NodeMultiset, var: str = "x") -> Polynomial:
    """``prod (var - a_i)^{d_i}`` over ``VariableSet((var,), A.params)``."""
    vars = VariableSet((var,), A.params)
    x = vars.var(var)
    f = vars.one()
    for i, mult in enumerate(A.multiplicities):
        f = f * (x - A.value_poly(i, vars)) ** mult
    return f


def f_coefficients(A: NodeMultiset, vars: VariableSet) -> list[Polynomial]:
    """``[f_0, ..., f_d]`` with ``f_{d-k} = (-1)^k s_k(A)``, as main-free polynomials."""
    A.check_vars(vars)
    flat = []
    for i, mult in enumerate(A.multiplicities):
        flat.extend([A.value_poly(i, vars)] * mult)
    d = A.d
    coeffs = [vars.zero()] * (d + 1)
    for k in range(d + 1):
        s = elementary_symmetric(k, flat, vars)
        coeffs[d - k] = -s if k % 2 else s
    return coeffs


@dataclass(frozen=True)
class IdealFamily:
    """Triangular family ``G`` or ``F``; member ``i`` is monic in ``x_i``."""

    kind: str
    members: tuple[Polynomial, ...]
    source: NodeMultiset
    vars: VariableSet

    @property
    def n(self) -> int:
        return len(self.members)

    def leading_power(self, i: int) -> int:
        """Exponent of the leading power of ``x_{i+1}`` in member ``i`` (0-based)."""
        d = self.source.d
        return d - i if self.kind == "G" else d


def _family_vars(A: NodeMultiset, n: int, vars: VariableSet | None) -> VariableSet:
    if not 1 <= n <= A.d:
        raise PreconditionError(f"need |A| >= n (|A| = {A.d}, n = {n})")
    if vars is None:
        vars = A.session_vars(n)
    if vars.n != n:
        raise VariableSetMismatch(f"variable set has {vars.n} main variables, expected {n}")
    A.check_vars(vars)
    return vars


def build_G(A: NodeMultiset, n: int, vars: VariableSet | None = None) -> IdealFamily:
    """``g_i = h_{d-i+1}^{(i)} + f_{d-1} h_{d-i}^{(i)} + ... + f_{i-1}`` for ``i = 1..n``."""
    if n > A.d:
        raise PreconditionError("need |A| >= n")
    vars = _family_vars(A, n, vars)
    d = A.d
    f = f_coefficients(A, vars)
    members = []
    for i in range(1, n + 1):
        top = d - i + 1
        g = vars.zero()
        for k in range(top + 1):
            g = g + f[d - k] * complete_homogeneous(i, top - k, vars)
        members.append(g)
    return IdealFamily("G", tuple(members), A, vars)


def build_F(A: NodeMultiset, n: int, vars: VariableSet | None = None) -> IdealFamily:
    """``F = {f(x_1), ..., f(x_n)}``."""
    if n > A.d:
        raise PreconditionError("need |A| >= n")
    vars = _family_vars(A, n, vars)
    fresh = "_t"
    while fresh in vars:
        fresh += "_"
    f = build_f(A, fresh)
    members = tuple(f.embed(vars, {fresh: x}) for x in vars.main)
    return IdealFamily("F", members, A, vars)


def substitute_nodes(values: Sequence[NodeValue], vars: VariableSet) -> list[Polynomial]:
    return [vars.var(v) if isinstance(v, str) else Polynomial.constant(vars, v) for v in values]
