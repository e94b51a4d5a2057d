"""Cubic threefolds in P^4 and points on them."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Sequence

from ..algebra.fields import QQ, Field
from ..algebra.parser import poly_parse
from ..algebra.poly import MultiPoly, PolyRing, _is_payload

VARS = ("x0", "x1", "x2", "x3", "x4")
RING = PolyRing(QQ, VARS)


class CubicError(ValueError):
    """Input is not a valid cubic threefold (or a point is not on it)."""


class SingularPointError(CubicError):
    pass


class CubicThreefold:
    """A nonzero cubic form in ``x0..x4`` over QQ."""

    def __init__(self, form: MultiPoly | str, name: str | None = None) -> None:
        if isinstance(form, str):
            form = poly_parse(form, RING)
        if form.ring != RING:
            if set(form.ring.names) - set(VARS) or form.field != QQ:
                raise CubicError(f"expected a form over QQ in {', '.join(VARS)}")
            form = form.change_ring(RING)
        if form.is_zero():
            raise CubicError("the zero polynomial is not a cubic")
        if not form.is_homogeneous() or form.total_degree() != 3:
            raise CubicError("form must be homogeneous of degree 3")
        self.form = form
        self.name = name

    @cached_property
    def gradient(self) -> tuple[MultiPoly, ...]:
        return tuple(self.form.diff(i) for i in range(5))

    @cached_property
    def third_derivatives(self) -> dict[tuple[int, int, int], Fraction]:
        """``f_ijk`` for sorted index triples (the tensor is symmetric)."""
        out = {}
        for i, j, k in combinations_with_replacement(range(5), 3):
            d = self.form.diff(i).diff(j).diff(k)
            out[(i, j, k)] = d.constant_term()
        return out

    def fijk(self, i: int, j: int, k: int) -> Fraction:
        return self.third_derivatives[tuple(sorted((i, j, k)))]

    def __call__(self, point: Sequence):
        return self.form.evaluate(point)

    def text(self) -> str:
        return str(self.form)

    def transformed(self, T: Sequence[Sequence]) -> "CubicThreefold":
        from ..algebra.ops import linear_substitute

        return CubicThreefold(linear_substitute(self.form, T))

    def __eq__(self, other) -> bool:
        return isinstance(other, CubicThreefold) and self.form == other.form

    def __hash__(self) -> int:
        return hash(self.form)

    def __repr__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"CubicThreefold({label}{self.form})"


class ProjPoint:
    """Point of P^4, scaled so the first nonzero coordinate is 1."""

    __slots__ = ("coords", "field")

    def __init__(self, coords: Sequence, field: Field = QQ) -> None:
        if len(coords) != 5:
            raise ValueError("a point of P^4 has 5 coordinates")
        c = [x if _is_payload(field, x) else field.convert(x) for x in coords]
        lead = next((x for x in c if not field.is_zero(x)), None)
        if lead is None:
            raise ValueError("all coordinates are zero")
        inv = field.inv(lead)
        self.coords = tuple(field.mul(x, inv) for x in c)
        self.field = field

    @property
    def stratum(self) -> int:
        """Index of the leading 1."""
        return next(i for i, x in enumerate(self.coords) if not self.field.is_zero(x))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return 5

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjPoint) and self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __lt__(self, other: "ProjPoint") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.stratum, [self.field.to_str(x) for x in self.coords])

    def text(self) -> str:
        return "(" + ":".join(self.field.to_str(x) for x in self.coords) + ")"

    def __repr__(self) -> str:
        return f"ProjPoint{self.text()}"


def unit_point(i: int) -> ProjPoint:
    return ProjPoint([int(j == i) for j in range(5)])
