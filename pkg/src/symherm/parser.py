"""Text form of polynomials.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Division is only allowed by a nonzero constant, which is how rationals such
as ``1/2`` are written.  Juxtaposition (``2x``) is a syntax error.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .errors import ParseError
from .poly import Polynomial, VariableSet

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].isspace():
            break
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: VariableSet, aliases: Mapping[str, str]):
        self.text = text
        self.vars = vars
        self.aliases = aliases
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            self.fail(f"unexpected token {tok[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()
            q = self.unary()
            if op[1] == "*":
                p = p * q
            else:
                if not q.is_constant():
                    self.fail("division by a non-constant expression", op)
                if not q:
                    self.fail("division by zero", op)
                p = p.scale(1 / q.constant_value())
        return p

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.fail("exponent must be a non-negative integer literal")
            self.take()
            return base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return Polynomial.constant(self.vars, int(val))
        if kind == "name":
            name = self.aliases.get(val, val)
            if name not in self.vars:
                raise ParseError(f"undeclared identifier {val!r}", pos, self.text)
            return Polynomial.variable(self.vars, name)
        if tok[:2] == ("op", "("):
            p = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return p
        if kind == "end":
            raise ParseError("unexpected end of input", pos, self.text)
        raise ParseError(f"unexpected token {val!r}", pos, self.text)


def parse(text: str, vars: VariableSet, aliases: Mapping[str, str] | None = None) -> Polynomial:
    """Parse ``text`` into a polynomial over ``vars``.

    ``aliases`` maps extra spellings to declared names (the CLI uses it to
    accept ``x, y, z`` for ``x1, x2, x3``).
    """
    return _Parser(text, vars, aliases or {}).parse()


def format_scalar(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_monomial(vars: VariableSet, mono) -> str:
    # main variables x1 .. xn in increasing order, then params
    parts = []
    for name, e in zip(vars.names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(p: Polynomial) -> str:
    """Canonical text: terms in descending lex order, ``x_n`` most significant."""
    if p.is_zero():
        return "0"
    out = []
    for mono, c in p.sorted_terms():
        mon = render_monomial(p.vars, mono)
        mag = abs(c)
        if not mon:
            body = format_scalar(mag)
        elif mag == 1:
            body = mon
        else:
            body = f"{format_scalar(mag)}*{mon}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)
