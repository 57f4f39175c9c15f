"""Recursive-descent parser for polynomial text.

Grammar (whitespace insignificant)::

    expr     := sign? term (('+' | '-') term)*
    term     := factor ('*'? factor)*
    factor   := base ('^' int)?
    base     := rational | 't' | '(' expr ')'
    rational := digits ('/' digits)?
    int      := ('+' | '-')? digits

:func:`parse_ratfn` additionally accepts ``/ ( expr )`` and ``/ t`` as division,
and negative powers of any base.  :func:`parse_poly` rejects negative powers
of non-monomials.
"""

import re
from fractions import Fraction

from .errors import ParseError
from .laurent import T, LaurentPoly, RationalFn

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))", re.S)


def _tokenize(text):
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            ch = m.group(2)
            if ch not in "t+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(2), "token", text)
            tokens.append((ch, ch, m.start(2)))
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, rational):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.rational = rational

    @property
    def kind(self):
        return self.tokens[self.i][0]

    @property
    def pos(self):
        return self.tokens[self.i][2]

    def fail(self, expected):
        kind, value, pos = self.tokens[self.i]
        found = "end of input" if kind == "end" else repr(str(value))
        raise ParseError(f"unexpected {found}", pos, expected, self.text)

    def take(self, kind, expected=None):
        if self.kind != kind:
            self.fail(expected or repr(kind))
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        if self.kind == "end":
            self.fail("expression")
        value = self.expr()
        if self.kind != "end":
            self.fail("operator or end of input")
        return value

    def expr(self):
        sign = 1
        if self.kind in ("+", "-"):
            sign = -1 if self.take(self.kind)[0] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.kind in ("+", "-"):
            op = self.take(self.kind)[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_factor(self):
        return self.kind in ("num", "t", "(")

    def term(self):
        value = self.factor()
        while True:
            if self.kind == "*":
                self.take("*")
                value = value * self.factor()
            elif self.kind == "/" and self.rational:
                self.take("/")
                rhs = self.factor()
                if not rhs:
                    raise ParseError("division by zero", self.pos, "nonzero divisor", self.text)
                value = value / rhs
            elif self._starts_factor():
                value = value * self.factor()
            else:
                return value

    def factor(self):
        start = self.pos
        base = self.base()
        if self.kind != "^":
            return base
        self.take("^")
        sign = 1
        if self.kind in ("+", "-"):
            sign = -1 if self.take(self.kind)[0] == "-" else 1
        exp = sign * self.take("num", "integer")[1]
        if exp < 0:
            if isinstance(base, LaurentPoly) and not base.is_unit():
                raise ParseError(
                    "negative power of a non-monomial", start, "nonnegative exponent", self.text
                )
            if not base:
                raise ParseError("negative power of zero", start, "nonzero base", self.text)
        return base ** exp

    def base(self):
        kind = self.kind
        if kind == "num":
            n = self.take("num")[1]
            if self.kind == "/" and self.tokens[self.i + 1][0] == "num":
                self.take("/")
                tok = self.take("num", "positive integer")
                if tok[1] == 0:
                    raise ParseError("zero denominator", tok[2], "positive integer", self.text)
                return self._lift(Fraction(n, tok[1]))
            if self.kind == "/" and not self.rational:
                self.take("/")
                self.fail("positive integer")
            return self._lift(Fraction(n))
        if kind == "t":
            self.take("t")
            return self._lift(T)
        if kind == "(":
            self.take("(")
            value = self.expr()
            self.take(")", "')'")
            return value
        self.fail("number, 't' or '('")

    def _lift(self, x):
        if self.rational:
            return RationalFn(x)
        return LaurentPoly.coerce(x)


def parse_poly(text):
    """Parse text into a LaurentPoly."""
    return _Parser(text, rational=False).parse()


def parse_ratfn(text):
    """Parse text into a RationalFn; ``/`` may divide by parenthesised expressions."""
    return _Parser(text, rational=True).parse()


def parse_poly_or_ratfn(text):
    r = parse_ratfn(text)
    if r.is_polynomial():
        return r.num
    return r
