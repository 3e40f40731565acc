"""Recursive-descent parser for coefficient expressions.

Grammar (whitespace insignificant)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor (('*' | '/')? factor)*
    factor := atom ('^' ['-'] int)?
    atom   := int | var | '(' expr ')'

Juxtaposition multiplies (``2v`` is ``2*v``).  Expressions are evaluated
directly in the target ring, so the result is already canonical.
"""
from __future__ import annotations

import re

from ..errors import ExpressionSyntaxError, InexactDivision, UndeclaredVariable

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|(\S))")


def tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("int", int(num), m.start(1)))
        elif name is not None:
            tokens.append(("var", name, m.start(2)))
        else:
            if op not in "+-*/^()":
                raise ExpressionSyntaxError(f"unexpected character {op!r} at column {m.start(3)} in {text!r}")
            tokens.append(("op", op, m.start(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, ring, allow_division):
        self.text = text
        self.ring = ring
        self.allow_division = allow_division
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def error(self, msg):
        tok = self.peek()
        where = f"column {tok[2]}" if tok else "end of input"
        return ExpressionSyntaxError(f"{msg} at {where} in {self.text!r}")

    def take_op(self, ops):
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in ops:
            self.i += 1
            return tok[1]
        return None

    def parse(self):
        if not self.tokens:
            raise ExpressionSyntaxError(f"empty expression {self.text!r}")
        value = self.expr()
        if self.peek() is not None:
            raise self.error("unexpected token")
        return value

    def expr(self):
        sign = self.take_op("+-")
        value = self.term()
        if sign == "-":
            value = -value
        while True:
            op = self.take_op("+-")
            if op is None:
                return value
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok is None or (tok[0] == "op" and tok[1] in "+-)"):
                return value
            op = self.take_op("*/") or "*"
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                value = self.divide(value, rhs)

    def divide(self, a, b):
        if not self.allow_division:
            raise InexactDivision(f"'/' is not permitted here: {self.text!r}")
        if not b:
            raise ExpressionSyntaxError(f"division by zero in {self.text!r}")
        return a / b

    def factor(self):
        base = self.atom()
        if self.take_op("^"):
            neg = self.take_op("-") is not None
            tok = self.peek()
            if tok is None or tok[0] != "int":
                raise self.error("expected an integer exponent")
            self.i += 1
            n = -tok[1] if neg else tok[1]
            if n < 0 and not self.allow_division and self.ring.is_field:
                raise InexactDivision(f"negative powers are not permitted here: {self.text!r}")
            if n < 0 and not base:
                raise ExpressionSyntaxError(f"zero raised to a negative power in {self.text!r}")
            return base ** n
        return base

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of expression")
        kind, val, _ = tok
        if kind == "int":
            self.i += 1
            return self.ring.from_int(val)
        if kind == "var":
            self.i += 1
            try:
                return self.ring.gen(val)
            except (KeyError, ValueError):
                raise UndeclaredVariable(f"variable {val!r} is not declared in {self.ring}") from None
        if val == "(":
            self.i += 1
            value = self.expr()
            if not self.take_op(")"):
                raise self.error("expected ')'")
            return value
        raise self.error(f"unexpected {val!r}")


def parse_scalar(text, ring, allow_division=True):
    """Parse ``text`` into a canonical element of ``ring``.

    ``allow_division=False`` rejects ``/`` outright (structure constants).
    Division in a non-field ring must be exact, otherwise
    :class:`InexactDivision` is raised.
    """
    if not isinstance(text, str):
        raise ExpressionSyntaxError(f"expected a string expression, got {text!r}")
    return _Parser(text, ring, allow_division).parse()
