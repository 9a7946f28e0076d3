"""Exact sparse multivariate polynomials over the rationals.

A :class:`Polynomial` is an immutable map from exponent vectors to
:class:`fractions.Fraction` coefficients.  Variables are split into *main*
variables ``x_1 .. x_n`` (the ones that get permuted, reduced and
differentiated) and *parameter* variables, which carry symbolic node values
or generic coefficients.

Monomials are compared in pure lex order with ``x_n`` most significant, then
``x_{n-1}``, ... , ``x_1``, then the parameters in declaration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import InexactDivisionError, VariableSetMismatch

Scalar = Fraction
Monomial = tuple  # tuple[int, ...], main exponents first, then params

ScalarLike = Union[int, Fraction]


def as_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    raise TypeError(f"not an exact scalar: {c!r}")


@dataclass(frozen=True)
class VariableSet:
    """Ordered main variables followed by ordered parameter variables."""

    main: tuple[str, ...]
    params: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "main", tuple(self.main))
        object.__setattr__(self, "params", tuple(self.params))
        names = self.main + self.params
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    @classmethod
    def standard(cls, n: int, params: Iterable[str] = ()) -> VariableSet:
        """``x1 .. xn`` plus the given parameters."""
        return cls(tuple(f"x{k}" for k in range(1, n + 1)), tuple(params))

    @property
    def n(self) -> int:
        return len(self.main)

    @property
    def names(self) -> tuple[str, ...]:
        return self.main + self.params

    def __len__(self):
        return len(self.main) + len(self.params)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def lex_key(self, mono: Monomial) -> tuple:
        n = len(self.main)
        return mono[n - 1::-1] + mono[n:] if n else mono

    def with_params(self, extra: Iterable[str]) -> VariableSet:
        params = list(self.params)
        for p in extra:
            if p not in params:
                params.append(p)
        return VariableSet(self.main, tuple(params))

    def zero(self) -> Polynomial:
        return Polynomial(self)

    def one(self) -> Polynomial:
        return Polynomial.constant(self, 1)

    def var(self, name: str) -> Polynomial:
        return Polynomial.variable(self, name)

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(v) for v in self.main)


class Polynomial:
    """Immutable sparse polynomial; equal polynomials have identical term maps."""

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars: VariableSet, terms: Mapping[Monomial, ScalarLike] | None = None):
        self.vars = vars
        clean = {}
        width = len(vars)
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != width or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for {vars.names}")
            c = as_scalar(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: VariableSet, terms: dict) -> Polynomial:
        # terms must already be canonical: no zero coefficients, Fraction values
        p = object.__new__(cls)
        p.vars = vars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, vars: VariableSet, c: ScalarLike) -> Polynomial:
        c = as_scalar(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def variable(cls, vars: VariableSet, name: str) -> Polynomial:
        mono = [0] * len(vars)
        mono[vars.index(name)] = 1
        return cls._raw(vars, {tuple(mono): Fraction(1)})

    @classmethod
    def monomial(cls, vars: VariableSet, mono: Monomial, c: ScalarLike = 1) -> Polynomial:
        return cls(vars, {tuple(mono): c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    def is_free_of_main(self) -> bool:
        n = self.vars.n
        return all(not any(m[:n]) for m in self._terms)

    def degree(self, var: str | int) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = var if isinstance(var, int) else self.vars.index(var)
        return max((m[i] for m in self._terms), default=-1)

    def main_degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(i) for i in range(self.vars.n))

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def leading(self) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = self.vars.lex_key
        mono = max(self._terms, key=key)
        return mono, self._terms[mono]

    def sorted_terms(self, descending: bool = True) -> list[tuple[Monomial, Fraction]]:
        key = self.vars.lex_key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=descending)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise VariableSetMismatch()
            return other
        try:
            return Polynomial.constant(self.vars, other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, {m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = as_scalar(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        if other.vars != self.vars:
            raise VariableSetMismatch()
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(self.vars, out)

    __rmul__ = __mul__

    def scale(self, c: ScalarLike) -> Polynomial:
        c = as_scalar(c)
        if not c:
            return Polynomial._raw(self.vars, {})
        return Polynomial._raw(self.vars, {m: v * c for m, v in self._terms.items()})

    def mul_monomial(self, mono: Monomial, c: ScalarLike = 1) -> Polynomial:
        c = as_scalar(c)
        if not c:
            return Polynomial._raw(self.vars, {})
        return Polynomial._raw(
            self.vars,
            {tuple(a + b for a, b in zip(m, mono)): v * c for m, v in self._terms.items()},
        )

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.vars.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        """Division by a nonzero scalar, or exact division by a polynomial."""
        if isinstance(other, Polynomial):
            if other.is_constant() and other:
                return self.scale(1 / other.constant_value())
            return exact_divide(self, other)
        c = as_scalar(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / c)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self._terms == other._terms
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self._terms == ({(0,) * len(self.vars): c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    # -- conversions ------------------------------------------------------

    def embed(self, vars: VariableSet, rename: Mapping[str, str] | None = None) -> Polynomial:
        """Move into another variable set, mapping each variable by name.

        ``rename`` maps old names to new ones; unmapped names keep their name.
        A variable that actually occurs must exist in the target set.
        """
        rename = rename or {}
        old = self.vars.names
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        target = {}
        for i in used:
            name = rename.get(old[i], old[i])
            if name not in vars:
                raise VariableSetMismatch(f"variable {name!r} missing from target variable set")
            target[i] = vars.index(name)
        width = len(vars)
        out: dict = {}
        for m, c in self._terms.items():
            nm = [0] * width
            for i, e in enumerate(m):
                if e:
                    nm[target[i]] += e
            nm = tuple(nm)
            s = out.get(nm, 0) + c
            if s:
                out[nm] = s
            else:
                out.pop(nm, None)
        return Polynomial._raw(vars, out)

    def __str__(self):
        from .parser import render

        return render(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, vars={self.vars.names})"


# -- module-level operations ----------------------------------------------


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    if p.vars != q.vars:
        raise VariableSetMismatch()
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def substitute(p: Polynomial, bindings: Mapping[str, Polynomial | ScalarLike]) -> Polynomial:
    """Simultaneously replace variables by polynomials or scalars.

    Unbound variables stay symbolic.  Polynomial values must live in ``p.vars``.
    """
    vars = p.vars
    idx = {}
    scalars = {}
    for name, value in bindings.items():
        i = vars.index(name)
        if isinstance(value, Polynomial):
            if value.vars != vars:
                raise VariableSetMismatch()
            if value.is_constant():
                scalars[i] = value.constant_value()
                continue
            idx[i] = value
        else:
            scalars[i] = as_scalar(value)
    if scalars:
        p = _substitute_scalars(p, scalars)
    if not idx:
        return p
    powers: dict = {i: [vars.one()] for i in idx}

    def power(i, e):
        cache = powers[i]
        while len(cache) <= e:
            cache.append(cache[-1] * idx[i])
        return cache[e]

    out = vars.zero()
    # group terms by their exponents on bound variables to share the products
    groups: dict = {}
    for m, c in p._terms.items():
        bound = tuple(m[i] for i in idx)
        rest = tuple(0 if i in idx else e for i, e in enumerate(m))
        groups.setdefault(bound, {})[rest] = c
    for bound, rest_terms in groups.items():
        factor = vars.one()
        for i, e in zip(idx, bound):
            if e:
                factor = factor * power(i, e)
        out = out + factor * Polynomial._raw(vars, rest_terms)
    return out


def _substitute_scalars(p: Polynomial, values: dict[int, Fraction]) -> Polynomial:
    out: dict = {}
    for m, c in p._terms.items():
        nm = list(m)
        for i, v in values.items():
            e = m[i]
            if e:
                c = c * v ** e
                nm[i] = 0
                if not c:
                    break
        if not c:
            continue
        nm = tuple(nm)
        s = out.get(nm, 0) + c
        if s:
            out[nm] = s
        else:
            del out[nm]
    return Polynomial._raw(p.vars, out)


def scaled_partial(p: Polynomial, v: str, j: int) -> Polynomial:
    """``(1/j!) d^j p / dv^j``, computed termwise as binomial coefficients."""
    if j < 0:
        raise ValueError("derivative order must be non-negative")
    i = p.vars.index(v)
    if j == 0:
        return p
    out = {}
    for m, c in p._terms.items():
        e = m[i]
        if e >= j:
            nm = m[:i] + (e - j,) + m[i + 1:]
            out[nm] = c * comb(e, j)
    return Polynomial._raw(p.vars, out)


def permute_main(p: Polynomial, perm: tuple[int, ...]) -> Polynomial:
    """Send main variable ``k`` to main variable ``perm[k]`` (0-based)."""
    n = p.vars.n
    out = {}
    for m, c in p._terms.items():
        nm = [0] * n
        for k in range(n):
            nm[perm[k]] = m[k]
        out[tuple(nm) + m[n:]] = c
    return Polynomial._raw(p.vars, out)


def is_symmetric(p: Polynomial) -> bool:
    n = p.vars.n
    for k in range(n - 1):
        perm = list(range(n))
        perm[k], perm[k + 1] = k + 1, k
        if permute_main(p, tuple(perm)) != p:
            return False
    return True


def exact_divide(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return ``p / q``, raising :class:`InexactDivisionError` if ``q`` does not divide ``p``.

    Lex leading-term division: if ``q | p`` then ``LT(q) | LT(p)`` at every
    step, so the first non-divisible leading term proves inexactness.
    """
    if p.vars != q.vars:
        raise VariableSetMismatch()
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    key = p.vars.lex_key
    lm_q, lc_q = q.leading()
    q_items = list(q._terms.items())
    rem = dict(p._terms)
    quot: dict = {}
    while rem:
        lm = max(rem, key=key)
        delta = tuple(a - b for a, b in zip(lm, lm_q))
        if any(e < 0 for e in delta):
            raise InexactDivisionError(f"{q} does not divide {p}")
        c = rem[lm] / lc_q
        quot[delta] = c
        for m, v in q_items:
            nm = tuple(a + b for a, b in zip(m, delta))
            s = rem.get(nm, 0) - c * v
            if s:
                rem[nm] = s
            else:
                rem.pop(nm, None)
    return Polynomial._raw(p.vars, quot)


def divides(q: Polynomial, p: Polynomial) -> bool:
    try:
        exact_divide(p, q)
    except InexactDivisionError:
        return False
    return True

