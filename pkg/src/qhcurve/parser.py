"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insignificant)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | var | '(' expr ')'
    rational := uint ('/' uint)?
    var      := 'x0' | 'x1' | 'x2' | 'x' | 'y' | 'z'

Multiplication must be written explicitly.
"""

from __future__ import annotations

from gmpy2 import mpq

from .poly import NVARS, Polynomial

ALIASES = {"x": 0, "y": 1, "z": 2}


class ParseError(ValueError):
    """Syntax error with the 0-based character offset of the problem."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__("%s at position %d" % (message, position))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        raise ParseError(msg, self.pos if pos is None else pos, self.text)

    def skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error("expected %r" % ch)
        self.pos += 1

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse(self) -> Polynomial:
        if not self.text.strip():
            self.error("empty expression")
        p = self.expr()
        if self.peek():
            self.error("unexpected %r" % self.peek())
        return p

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek() and self.peek() in "+-":
            op = self.peek()
            self.pos += 1
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek() == "*":
            self.pos += 1
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            at = self.pos
            ch = self.text[at] if at < len(self.text) else ""
            if not ch.isdigit():
                self.error("exponent must be a non-negative integer", at)
            n = self.uint()
            if self.pos < len(self.text) and self.text[self.pos] in "./":
                self.error("exponent must be a non-negative integer", at)
            return base ** n
        return base

    def base(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            p = self.expr()
            self.take(")")
            return p
        if ch.isdigit():
            num = self.uint()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                at = self.pos
                den = self.uint()
                if den == 0:
                    self.error("zero denominator", at)
            if self.pos < len(self.text) and self.text[self.pos] == ".":
                self.error("decimal numbers are not supported")
            return Polynomial.constant(mpq(num, den))
        if ch.isalpha():
            return self.variable()
        if not ch:
            self.error("unexpected end of input")
        self.error("unexpected %r" % ch)

    def variable(self) -> Polynomial:
        start = self.pos
        t = self.text
        while self.pos < len(t) and (t[self.pos].isalnum() or t[self.pos] == "_"):
            self.pos += 1
        name = t[start:self.pos]
        if name in ALIASES:
            return Polynomial.var(ALIASES[name])
        if name[0] == "x" and name[1:].isdigit() and int(name[1:]) < NVARS and name[1:] == str(int(name[1:])):
            return Polynomial.var(int(name[1:]))
        raise ParseError("unknown variable %r" % name, start, self.text)


def parse_polynomial(text: str) -> Polynomial:
    """Parse ``text`` into a canonical :class:`Polynomial` in x0, x1, x2.

    >>> str(parse_polynomial("(x+y)^2 - x^2 - 2*x*y"))
    'x1^2'
    """
    return _Parser(text).parse()


def read_polynomial_file(path) -> Polynomial:
    """Read a UTF-8 file holding one expression; ``#`` starts a comment."""
    with open(path, encoding="utf-8") as fh:
        lines = [line.split("#", 1)[0] for line in fh]
    return parse_polynomial(" ".join(lines))
