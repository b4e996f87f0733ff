"""Parser for scalar and noncommutative polynomial expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT ['/' INT] | 'z' '(' INT ')' | NAME | '(' expr ')'

A polynomial is a dict mapping words (tuples of generator names) to exact
scalars; the empty word carries the scalar part.  Multiplication
concatenates words, so ``y0*y1`` and ``y1*y0`` are different monomials.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .scalars import root_of_unity

__all__ = ["ExprError", "parse_polynomial", "poly_mul", "poly_add"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class ExprError(ValueError):
    """Syntax or semantic error in an expression, with a column position."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at column {pos + 1}: {text!r}")
        self.column = pos + 1


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def poly_add(a: dict, b: dict, scale=1) -> dict:
    out = dict(a)
    for w, c in b.items():
        v = out.get(w, 0) + scale * c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            v = out.get(w, 0) + c1 * c2
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


class _Parser:
    def __init__(self, text, generators):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.generators = None if generators is None else set(generators)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value:
            raise ExprError(f"expected {value!r}", self.text, pos)

    def parse(self):
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected {val!r}", self.text, pos)
        return result

    def expr(self):
        result = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            result = poly_add(result, rhs, 1 if op == "+" else -1)
        return result

    def term(self):
        result = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            result = poly_mul(result, self.unary())
        return result

    def unary(self):
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return {w: -c for w, c in self.unary().items()}
        return self.power()

    def power(self):
        base, is_root = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.take()
                neg = True
            kind, k, pos = self.take()
            if kind != "int":
                raise ExprError("expected integer exponent", self.text, pos)
            if neg:
                if not is_root:
                    raise ExprError("negative exponent only allowed on z(N)", self.text, pos)
                k = -k
            if is_root:
                n, _ = is_root
                return {(): root_of_unity(n, k)}
            result = {(): Fraction(1)}
            for _ in range(k):
                result = poly_mul(result, base)
            return result
        if is_root:
            return {(): root_of_unity(is_root[0], 1)}
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            num = Fraction(val)
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                k2, den, p2 = self.take()
                if k2 != "int":
                    raise ExprError("expected denominator", self.text, p2)
                if den == 0:
                    raise ExprError("zero denominator", self.text, p2)
                num = num / den
            return ({(): num} if num else {}), None
        if kind == "name":
            if val == "z" and self.peek()[1] == "(":
                self.take()
                k2, n, p2 = self.take()
                if k2 != "int" or n < 1:
                    raise ExprError("expected positive root order", self.text, p2)
                self.expect(")")
                return None, (n, pos)
            if self.generators is not None and val not in self.generators:
                raise ExprError(f"unknown generator {val!r}", self.text, pos)
            return {(val,): Fraction(1)}, None
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner, None
        raise ExprError(f"unexpected {val!r}", self.text, pos)


def parse_polynomial(text: str, generators=None) -> dict:
    """Parse ``text`` into ``{word: coefficient}``.

    ``generators`` restricts the allowed names (``()`` means scalars only);
    ``None`` accepts any name.
    """
    return _Parser(text, generators).parse()
