"""Normal forms modulo the triangular families ``G`` and ``F``.

Both families have a monic pure-power leading term ``x_i^{e_i}`` in member
``i``, and member ``i`` only involves ``x_1 .. x_i``.  Reduction is therefore
a chain of Euclidean divisions: first in ``x_n`` by member ``n``, then in
``x_{n-1}`` by member ``n-1``, and so on.  No division by a leading
coefficient ever happens, so parameter coefficients stay polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError, VariableSetMismatch
from .nodes import IdealFamily, NodeMultiset, build_F, build_G
from .poly import Polynomial, VariableSet, is_symmetric


@dataclass(frozen=True)
class ReductionResult:
    remainder: Polynomial
    quotients: tuple[Polynomial, ...]

    def reconstruct(self, fam: IdealFamily) -> Polynomial:
        total = self.remainder
        for q, g in zip(self.quotients, fam.members):
            total = total + q * g
        return total


def _check_member(g: Polynomial, i: int, e: int) -> Polynomial:
    """Return ``g - x_i^e`` after checking the triangular monic shape."""
    n = g.vars.n
    width = len(g.vars)
    lead = tuple(e if k == i else 0 for k in range(width))
    if g.coefficient(lead) != 1:
        raise PreconditionError(f"family member {i + 1} is not monic in x_{i + 1}^{e}")
    for m in g.terms:
        if m != lead and m[i] >= e:
            raise PreconditionError(f"family member {i + 1} has a second term of x_{i + 1}-degree >= {e}")
        if any(m[k] for k in range(i + 1, n)):
            raise PreconditionError(f"family member {i + 1} involves a later main variable")
    return g - Polynomial._raw(g.vars, {lead: g.coefficient(lead)})


def reduce(h: Polynomial, fam: IdealFamily) -> ReductionResult:
    """Normal form of ``h`` modulo ``fam`` with quotient certificates.

    ``h == sum(q_i * member_i) + remainder`` holds exactly, and no monomial of
    the remainder is divisible by a leading power ``x_i^{e_i}``.
    """
    if h.vars != fam.vars:
        raise VariableSetMismatch()
    vars = h.vars
    n = vars.n
    if fam.n != n:
        raise VariableSetMismatch(f"family has {fam.n} members for {n} main variables")
    rem = dict(h.terms)
    quotients = [vars.zero()] * n
    for i in range(n - 1, -1, -1):
        e = fam.leading_power(i)
        tail = _check_member(fam.members[i], i, e)
        tail_items = list(tail.terms.items())
        q: dict = {}
        last = None
        while True:
            k = max((m[i] for m in rem), default=-1)
            if k < e:
                break
            assert last is None or k < last, "reduction failed to lower the leading x_i power"
            last = k
            # all terms of x_i-degree k are cancelled by x_i^{k-e} * coeff * member
            top = [(m, c) for m, c in rem.items() if m[i] == k]
            for m, c in top:
                del rem[m]
                shift = m[:i] + (k - e,) + m[i + 1:]
                q[shift] = q.get(shift, 0) + c
                for tm, tc in tail_items:
                    nm = tuple(a + b for a, b in zip(shift, tm))
                    s = rem.get(nm, 0) - c * tc
                    if s:
                        rem[nm] = s
                    else:
                        rem.pop(nm, None)
        quotients[i] = Polynomial(vars, q)
    return ReductionResult(Polynomial._raw(vars, rem), tuple(quotients))


@lru_cache(maxsize=256)
def _family(kind: str, A: NodeMultiset, vars: VariableSet) -> IdealFamily:
    return (build_G if kind == "G" else build_F)(A, vars.n, vars)


def _check_nodes(h: Polynomial, A: NodeMultiset) -> None:
    n = h.vars.n
    if n < 1:
        raise PreconditionError("need at least one main variable")
    if A.d < n:
        raise PreconditionError(f"need |A| >= n (|A| = {A.d}, n = {n})")
    A.check_vars(h.vars)


def hermite_normal_form(h: Polynomial, A: NodeMultiset) -> Polynomial:
    """Remainder of a symmetric ``h`` modulo ``G``: the symmetric Hermite interpolant."""
    _check_nodes(h, A)
    if not is_symmetric(h):
        raise PreconditionError("input must be symmetric")
    return reduce(h, _family("G", A, h.vars)).remainder


def f_normal_form(h: Polynomial, A: NodeMultiset) -> Polynomial:
    """Remainder of ``h`` modulo ``F = {f(x_1), ..., f(x_n)}``."""
    _check_nodes(h, A)
    return reduce(h, _family("F", A, h.vars)).remainder


def family_G(A: NodeMultiset, vars: VariableSet) -> IdealFamily:
    return _family("G", A, vars)


def family_F(A: NodeMultiset, vars: VariableSet) -> IdealFamily:
    return _family("F", A, vars)
