from __future__ import annotations

import sympy

from symherm import Polynomial, VariableSet, parse, render

ACCEPTANCE_LINES: list[str] = []


def to_sympy(p: Polynomial) -> sympy.Expr:
    """Independent re-reading of a polynomial through its rendered text."""
    names = {v: sympy.Symbol(v) for v in p.vars.names}
    return sympy.expand(sympy.sympify(render(p).replace("^", "**"), locals=names))


def sym_vars(vars: VariableSet) -> list[sympy.Symbol]:
    return [sympy.Symbol(v) for v in vars.names]


def xy(params=()) -> tuple[VariableSet, dict[str, str]]:
    """Two main variables with the ``x, y`` spelling."""
    return VariableSet.standard(2, params), {"x": "x1", "y": "x2"}


def P(text: str, vars: VariableSet, aliases=None) -> Polynomial:
    return parse(text, vars, aliases)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
