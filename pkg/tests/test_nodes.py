from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import pytest

from conftest import P
from symherm import (
    ColumnSubset,
    NodeMultiset,
    ParseError,
    PreconditionError,
    VariableSet,
    build_F,
    build_G,
    elementary_symmetric,
    enumerate_subsets,
    parse_nodes,
)
from symherm.nodes import build_f, f_coefficients
from symherm.poly import is_symmetric, substitute
from symherm.verify import fixture_multisets


def test_parse_nodes_forms():
    A = parse_nodes("a^3, b^2")
    assert A.nodes == (("a", 3), ("b", 2)) and A.d == 5 and A.m == 2
    B = parse_nodes("1/2^3, 4^2")
    assert B.nodes == ((Fraction(1, 2), 3), (Fraction(4), 2))
    C = parse_nodes(" -1 , 0 ,2^1")
    assert C.values == (Fraction(-1), Fraction(0), Fraction(2)) and C.is_distinct
    assert str(parse_nodes("a^2, 1/3")) == "a^2, 1/3"


@pytest.mark.parametrize("text", ["", "a,,b", "a^0", "a^x", "2a", "1/2/3"])
def test_parse_nodes_errors(text):
    with pytest.raises(ParseError):
        parse_nodes(text)


def test_merging_and_rejection():
    A = parse_nodes("1, 1, 2")
    assert A.nodes == ((Fraction(1), 2), (Fraction(2), 1)) and A.merged
    assert not parse_nodes("1, 2").merged
    assert parse_nodes("a, a").nodes == (("a", 2),)
    with pytest.raises(PreconditionError):
        NodeMultiset((("a", 0),))
    with pytest.raises(PreconditionError):
        NodeMultiset(())
    assert NodeMultiset.of(3, 3, 5) == NodeMultiset(((3, 2), (5, 1)))


def test_labels():
    A = parse_nodes("a^3, b^2")
    assert A.labels == ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1))
    assert [A.label_name(c) for c in range(5)] == ["a_0", "a_1", "a_2", "b_0", "b_1"]
    assert ColumnSubset((1, 3)).describe(A) == "(a_1, b_0)"
    with pytest.raises(ValueError):
        ColumnSubset((2, 1))


def test_enumerate_subsets():
    A4 = parse_nodes("a^2, b^2")
    subs = enumerate_subsets(A4, 2)
    assert len(subs) == 6 and subs[0].picks == (0, 1) and subs[-1].picks == (2, 3)
    assert [s.picks for s in enumerate_subsets(A4, 4)] == [(0, 1, 2, 3)]
    assert len(enumerate_subsets(parse_nodes("a^3, b^2"), 2)) == 10
    with pytest.raises(PreconditionError):
        enumerate_subsets(A4, 5)


def test_build_f_examples():
    f = build_f(parse_nodes("1, 1"))
    assert f == P("x^2 - 2*x + 1", f.vars)
    f0 = build_f(parse_nodes("0^5"))
    assert f0 == P("x^5", f0.vars)
    fs = build_f(parse_nodes("a^3, b^2"))
    assert fs == P("(x-a)^3*(x-b)^2", fs.vars)


def test_f_coefficients_are_signed_elementary_symmetric():
    for A in fixture_multisets():
        vars = VariableSet((), A.params)
        flat = [vars.var(v) if isinstance(v, str) else v for v in A.flat_values()]
        coeffs = f_coefficients(A, vars)
        for k in range(A.d + 1):
            s = elementary_symmetric(k, flat, vars)
            assert coeffs[A.d - k] == (-s if k % 2 else s)


def test_build_G_examples():
    A = parse_nodes("a, b")
    G = build_G(A, 2)
    vars = G.vars
    assert G.members[0] == P("x1^2 - (a+b)*x1 + a*b", vars)
    assert G.members[1] == P("x1 + x2 - (a+b)", vars)
    Z = build_G(parse_nodes("0^4"), 2)
    assert Z.members == (P("x1^4", Z.vars), P("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", Z.vars))
    for A in fixture_multisets():
        G1 = build_G(A, 1)
        assert G1.members == build_F(A, 1).members
        assert G1.members[0] == build_f(A).embed(G1.vars, {"x": "x1"})


def test_build_F_examples():
    F = build_F(parse_nodes("1, -1"), 2)
    assert F.members == (P("x1^2 - 1", F.vars), P("x2^2 - 1", F.vars))
    Z = build_F(parse_nodes("0^4"), 2)
    assert Z.members == (P("x1^4", Z.vars), P("x2^4", Z.vars))
    assert [F.leading_power(i) for i in range(2)] == [2, 2]
    G = build_G(parse_nodes("0^4"), 3)
    assert [G.leading_power(i) for i in range(3)] == [4, 3, 2]


def test_family_size_precondition():
    with pytest.raises(PreconditionError):
        build_G(parse_nodes("1, 2"), 3)
    with pytest.raises(PreconditionError):
        build_F(parse_nodes("1, 2"), 3)


def _recurrence_and_telescoping(A, n):
    vars = A.session_vars(n)
    G = build_G(A, n, vars).members
    F = build_F(A, n, vars).members
    xs = vars.gens()
    for i in range(2, n + 1):
        shifted = substitute(G[i - 2], {vars.main[k]: xs[k + 1] for k in range(i - 1)})
        assert G[i - 1] * (xs[0] - xs[i - 1]) == G[i - 2] - shifted
    for k in range(1, n + 1):
        total = vars.zero()
        for j in range(1, k + 1):
            prod = vars.one()
            for i in range(1, j):
                prod = prod * (xs[k - 1] - xs[i - 1])
            total = total + prod * G[j - 1]
        assert total == F[k - 1]


@pytest.mark.parametrize("A", fixture_multisets(), ids=str)
def test_structural_identities(A):
    for n in range(1, min(4, A.d) + 1):
        _recurrence_and_telescoping(A, n)


def test_members_are_symmetric_in_their_variables():
    A = parse_nodes("a^2, b, 3")
    G = build_G(A, 3)
    vars = G.vars
    for i, g in enumerate(G.members, start=1):
        for perm in permutations(range(i)):
            moved = substitute(g, {vars.main[k]: vars.var(vars.main[perm[k]]) for k in range(i)})
            assert moved == g
    assert is_symmetric(G.members[-1])
