"""Text syntax for Laurent polynomials.

Grammar::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := power (('*'|'/') power)*
    power   := atom ['^' ['+'|'-'] INT | '^' '(' ['+'|'-'] INT ')']
    atom    := INT | IDENT | '(' expr ')'

Division is only allowed by units (constants of a field, unit monomials).
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .domains import QQ, CoefficientDomain
from .errors import LaurentKitError, ParseError
from .laurent import LaurentPoly, invert_unit_poly

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col]!r}", column=col + 1)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str], domain: CoefficientDomain, column_offset: int = 0):
        self.tokens = tokenize(text)
        self.i = 0
        self.index: Dict[str, int] = {n: k for k, n in enumerate(names)}
        self.rank = len(names)
        self.domain = domain
        self.offset = column_offset

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, column=self.offset + tok[2] + 1)

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            self.fail(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok)

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self) -> LaurentPoly:
        result = self.power()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            rhs = self.power()
            if tok[1] == "*":
                result = result * rhs
            else:
                try:
                    result = result * invert_unit_poly(rhs)
                except LaurentKitError as exc:
                    self.fail(f"division by a non-unit: {exc}", tok)
        return result

    def signed_int(self) -> int:
        sign = 1
        if self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        tok = self.take()
        if tok[0] != "int":
            self.fail("expected an integer exponent", tok)
        return sign * int(tok[1])

    def power(self) -> LaurentPoly:
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            tok = self.take()
            if self.peek()[1] == "(":
                self.take()
                k = self.signed_int()
                self.expect(")")
            else:
                k = self.signed_int()
            try:
                base = base ** k
            except LaurentKitError as exc:
                self.fail(str(exc), tok)
        return base

    def atom(self) -> LaurentPoly:
        tok = self.take()
        kind, value, _ = tok
        if kind == "int":
            try:
                return LaurentPoly.constant(Fraction(int(value)), self.rank, self.domain)
            except (ValueError, ZeroDivisionError) as exc:
                self.fail(str(exc), tok)
        if kind == "ident":
            if value not in self.index:
                self.fail(f"unknown variable {value!r}", tok)
            return LaurentPoly.variable(self.index[value], self.rank, self.domain)
        if value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail(f"unexpected {value or 'end of input'!r}", tok)


def parse_poly(
    text: str, names: Sequence[str], domain: CoefficientDomain = QQ, column_offset: int = 0
) -> LaurentPoly:
    """Parse ``text`` into a Laurent polynomial in the variables ``names``."""
    parser = _Parser(text, names, domain, column_offset)
    if parser.peek()[0] == "end":
        parser.fail("empty expression")
    try:
        result = parser.expr()
    except ParseError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), column=column_offset + 1) from exc
    if parser.peek()[0] != "end":
        parser.fail(f"unexpected {parser.peek()[1]!r}")
    return result


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad number {text!r}") from exc


def parse_int_vector(text: str) -> Tuple[int, ...]:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ParseError(f"expected an integer vector like [1,-2], found {text!r}")
    body = t[1:-1].strip()
    if not body:
        return ()
    try:
        return tuple(int(x) for x in body.split(","))
    except ValueError as exc:
        raise ParseError(f"bad integer vector {text!r}") from exc


def parse_int_matrix(text: str) -> List[Tuple[int, ...]]:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ParseError(f"expected a matrix like [[1,1],[0,1]], found {text!r}")
    rows = re.findall(r"\[([^\[\]]*)\]", t[1:-1])
    if not rows and t[1:-1].strip():
        raise ParseError(f"bad matrix {text!r}")
    return [parse_int_vector(f"[{r}]") for r in rows]


def split_top_level(text: str, sep: str = ",") -> List[str]:
    """Split on ``sep`` outside brackets and parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


