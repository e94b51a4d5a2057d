"""Monomial orders and packed monomial encodings.

A monomial is stored as a single int whose integer comparison *is* the
monomial order: the exponent vector is multiplied by the order's weight
matrix and the resulting rows are packed into fixed-width bit fields, most
significant row first.  Because the map is linear, multiplying monomials is
adding their keys.  Divisibility uses a second packing of the raw exponents
with a guard bit per field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

FIELD_BITS = 12
_FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex``, ``lex``, or ``block`` (first ``k`` variables eliminated).

    A block order compares the first ``k`` variables by ``inner`` and breaks
    ties on the remaining variables by ``inner``.
    """

    kind: str = "grevlex"
    k: int = 0
    inner: str = "grevlex"

    def __post_init__(self) -> None:
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.inner not in ("grevlex", "lex"):
            raise ValueError(f"unknown inner order {self.inner!r}")
        if self.kind == "block" and self.k < 1:
            raise ValueError("block order needs k >= 1")

    def weight_rows(self, n: int) -> list[list[int]]:
        if self.kind == "lex":
            return _lex_rows(n, 0, n)
        if self.kind == "grevlex":
            return _grevlex_rows(n, 0, n)
        if self.k > n:
            raise ValueError(f"cannot eliminate {self.k} of {n} variables")
        rows = _block_rows(self.inner, n, 0, self.k)
        rows += _block_rows(self.inner, n, self.k, n)
        return rows

    def __str__(self) -> str:
        if self.kind == "block":
            return f"block({self.k},{self.inner})"
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(k: int, inner: str = "grevlex") -> MonomialOrder:
    return MonomialOrder("block", k, inner)


def _block_rows(inner: str, n: int, lo: int, hi: int) -> list[list[int]]:
    return _lex_rows(n, lo, hi) if inner == "lex" else _grevlex_rows(n, lo, hi)


def _lex_rows(n: int, lo: int, hi: int) -> list[list[int]]:
    return [[1 if j == i else 0 for j in range(n)] for i in range(lo, hi)]


def _grevlex_rows(n: int, lo: int, hi: int) -> list[list[int]]:
    # total degree, then prefix sums x_lo + ... + x_{m}: the monomial with the
    # smaller exponent in the last variable wins, as grevlex requires
    rows = []
    for m in range(hi, lo, -1):
        rows.append([1 if lo <= j < m else 0 for j in range(n)])
    return rows


class MonomialCodec:
    """Packing for one (order, nvars) pair.  Shared and memoized per ring."""

    def __init__(self, order: MonomialOrder, n: int) -> None:
        self.order = order
        self.n = n
        self.rows = order.weight_rows(n)
        self._shifts = [FIELD_BITS * (n - 1 - r) for r in range(n)]
        self._inverse = _invert(self.rows) if n else []
        self.guard = sum(1 << (s + FIELD_BITS - 1) for s in self._shifts)
        self._exps: dict[int, tuple[int, ...]] = {0: (0,) * n}
        self._epack: dict[int, int] = {0: 0}

    def key(self, exps) -> int:
        k = 0
        for row, s in zip(self.rows, self._shifts):
            v = 0
            for w, e in zip(row, exps):
                if w:
                    v += w * e
            k |= v << s
        return k

    def exps(self, key: int) -> tuple[int, ...]:
        e = self._exps.get(key)
        if e is None:
            fields = [(key >> s) & _FIELD_MASK for s in self._shifts]
            vals = []
            for row in self._inverse:
                v = sum(w * f for w, f in zip(row, fields))
                vals.append(int(v))
            e = tuple(vals)
            if any(x < 0 or x > MAX_EXPONENT for x in e):
                raise OverflowError("monomial exponent out of range")
            self._exps[key] = e
        return e

    def epack(self, key: int) -> int:
        """Raw exponents packed with guard bits (for divisibility tests)."""
        v = self._epack.get(key)
        if v is None:
            v = 0
            for e, s in zip(self.exps(key), self._shifts):
                v |= e << s
            self._epack[key] = v
        return v

    def divides(self, a: int, b: int) -> bool:
        """Does monomial ``a`` divide monomial ``b``?"""
        g = self.guard
        return ((self.epack(b) + g) - self.epack(a)) & g == g

    def degree(self, key: int) -> int:
        return sum(self.exps(key))

    def lcm(self, a: int, b: int) -> int:
        return self.key([max(x, y) for x, y in zip(self.exps(a), self.exps(b))])

    def coprime(self, a: int, b: int) -> bool:
        return not any(x and y for x, y in zip(self.exps(a), self.exps(b)))


def _invert(rows: list[list[int]]) -> list[list[Fraction]]:
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = [row[n:] for row in a]
    for row in out:
        for x in row:
            if x.denominator != 1:
                raise ValueError("weight matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


_CODECS: dict[tuple[MonomialOrder, int], MonomialCodec] = {}


def codec_for(order: MonomialOrder, n: int) -> MonomialCodec:
    c = _CODECS.get((order, n))
    if c is None:
        c = _CODECS[(order, n)] = MonomialCodec(order, n)
    return c
