"""Text input for polynomials.

Grammar (whitespace insignificant, ``=0`` suffix tolerated)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/")? unary)*      juxtaposition multiplies
    unary   := ("+" | "-") unary | power
    power   := atom ("^" INT)?
    atom    := INT | VAR | "(" expr ")"

Division is only allowed by a nonzero constant.  LaTeX-style rows such as
``x_{0}^{2}x_{2} + 3x_{3}^{3}`` are accepted: ``x_{i}`` is read as ``xi`` and
``^{n}`` as ``^n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .fields import QQ, Field
from .monomials import GREVLEX, MonomialOrder
from .poly import MultiPoly, PolyRing


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int) -> None:
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


@dataclass
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


_LATEX_SUB = re.compile(r"([A-Za-z]+)_\{?(\d+)\}?")
_LATEX_POW = re.compile(r"\^\{(\d+)\}")


def _preprocess(text: str) -> str:
    # keeps string length stable enough for error columns in the common case
    text = text.replace("−", "-").replace("**", "^")
    text = _LATEX_SUB.sub(r"\1\2", text)
    text = _LATEX_POW.sub(r"^\1", text)
    text = re.sub(r"=\s*0\s*$", "", text)
    return text


def _tokenize(text: str, names: Sequence[str]) -> list[_Tok]:
    by_len = sorted(names, key=len, reverse=True)
    toks: list[_Tok] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            for name in by_len:
                if text.startswith(name, i):
                    end = i + len(name)
                    if end < n and text[end].isdigit() and name[-1].isdigit():
                        continue
                    toks.append(_Tok("name", name, i))
                    i = end
                    break
            else:
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                raise PolySyntaxError(f"unknown variable {text[i:j]!r}", text, i)
            continue
        if ch in "+-*/^()":
            toks.append(_Tok("op", ch, i))
            i += 1
            continue
        raise PolySyntaxError(f"unexpected character {ch!r}", text, i)
    toks.append(_Tok("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, ring: PolyRing) -> None:
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text, ring.names)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.tok
        return PolySyntaxError(msg, self.text, tok.pos)

    def parse(self) -> MultiPoly:
        if self.tok.kind == "end":
            raise self.error("empty input")
        f = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return f

    def expr(self) -> MultiPoly:
        f = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.take().text
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("int", "name") or (t.kind == "op" and t.text == "(")

    def term(self) -> MultiPoly:
        f = self.unary()
        while True:
            t = self.tok
            if t.kind == "op" and t.text == "*":
                self.take()
                f = f * self.unary()
            elif t.kind == "op" and t.text == "/":
                self.take()
                g = self.unary()
                if not g.is_constant():
                    raise self.error("division by a non-constant", t)
                c = g.constant_term()
                if self.ring.field.is_zero(c):
                    raise self.error("zero denominator", t)
                f = f.scale(self.ring.field.inv(c))
            elif self._starts_atom():
                f = f * self.power()
            else:
                return f

    def unary(self) -> MultiPoly:
        t = self.tok
        if t.kind == "op" and t.text in "+-":
            self.take()
            f = self.unary()
            return -f if t.text == "-" else f
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.take()
            t = self.take()
            if t.kind != "int":
                raise self.error("exponent must be a non-negative integer", t)
            return base ** int(t.text)
        return base

    def atom(self) -> MultiPoly:
        t = self.take()
        R = self.ring
        if t.kind == "int":
            return R.const(int(t.text))
        if t.kind == "name":
            return R.gen(R.index(t.text))
        if t.kind == "op" and t.text == "(":
            f = self.expr()
            close = self.take()
            if not (close.kind == "op" and close.text == ")"):
                raise self.error("expected ')'", close)
            return f
        raise self.error(f"unexpected {t.text!r}" if t.kind != "end" else "unexpected end of input", t)


def poly_parse(
    text: str,
    variables: Sequence[str] | PolyRing,
    field: Field = QQ,
    order: MonomialOrder = GREVLEX,
) -> MultiPoly:
    """Parse ``text`` into a polynomial over ``field`` in ``variables``."""
    ring = variables if isinstance(variables, PolyRing) else PolyRing(field, variables, order)
    return _Parser(_preprocess(text), ring).parse()


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-3/4"`` (used for CLI scalars)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc
