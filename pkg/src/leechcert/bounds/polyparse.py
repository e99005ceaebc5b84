"""Parser for polynomial expressions given on the command line.

Accepted forms:

* a comma-separated coefficient list, lowest degree first: ``-1/4,0,3``
* an expression in ``x`` built from rationals, ``+ - *``, parentheses and
  non-negative integer exponents: ``(x+1/2)^2*(x+1/8)^2*(x-1/4)``
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..exact.polynomial import RationalPolynomial


class PolynomialSyntaxError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(x)|(\*\*|[-+*^()]))")


def parse_rational(text: str) -> Fraction:
    """``p/q`` or an integer; no decimal or float syntax."""
    text = text.strip()
    if not re.fullmatch(r"[-+]?\d+(?:/\d+)?", text):
        raise PolynomialSyntaxError(f"not a rational p/q: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise PolynomialSyntaxError(f"zero denominator in {text!r}") from None


def _tokens(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, var, op = m.groups()
        if num is not None:
            out.append(("num", parse_rational(num)))
        elif var:
            out.append(("x", None))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            got = "end of input" if tok[0] is None else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {val or kind}, got {got}")
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        out = self.term() * sign
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self):
        out = self.power()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                out = out * self.power()
            elif tok[0] in ("num", "x") or tok == ("op", "("):
                out = out * self.power()  # implicit product, e.g. 3x or 2(x+1)
            else:
                return out

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            _, e = self.take("num")
            if e.denominator != 1 or e < 0:
                raise PolynomialSyntaxError("exponents must be non-negative integers")
            base = base ** int(e)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return RationalPolynomial([val])
        if kind == "x":
            self.take()
            return RationalPolynomial.x()
        if (kind, val) == ("op", "("):
            self.take()
            e = self.expr()
            self.take("op", ")")
            return e
        if kind is None:
            raise PolynomialSyntaxError("unexpected end of input")
        raise PolynomialSyntaxError(f"unexpected token {val!r}")


def parse_polynomial(text: str) -> RationalPolynomial:
    if "x" not in text and "," in text or re.fullmatch(r"\s*[-+]?\d+(/\d+)?\s*", text):
        return RationalPolynomial(parse_rational(part) for part in text.split(","))
    p = _Parser(_tokens(text))
    out = p.expr()
    if p.i != len(p.toks):
        raise PolynomialSyntaxError(f"trailing input at token {p.i}")
    return out
