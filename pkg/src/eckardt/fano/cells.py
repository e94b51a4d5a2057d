"""Schubert cells of the Grassmannian of lines in P^4.

A line is the row space of a 2x5 matrix in reduced row-echelon form with
pivots ``i < j``.  The ten pivot patterns give ten disjoint affine cells
covering the Grassmannian.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from ..algebra.fields import Field
from ..algebra.poly import MultiPoly, PolyRing

# the big cell keeps the short names a, b, c / d, e, g for its coordinates
_CHART01_NAMES = {("u", 2): "a", ("u", 3): "b", ("u", 4): "c", ("w", 2): "d", ("w", 3): "e", ("w", 4): "g"}


@dataclass(frozen=True)
class SchubertCell:
    i: int
    j: int

    def __post_init__(self) -> None:
        if not 0 <= self.i < self.j <= 4:
            raise ValueError(f"bad pivot pair ({self.i}, {self.j})")

    @property
    def pivots(self) -> tuple[int, int]:
        return (self.i, self.j)

    @cached_property
    def free_slots(self) -> tuple[tuple[int, int], ...]:
        """``(row, column)`` of every free entry, row 0 first."""
        row0 = [(0, c) for c in range(self.i + 1, 5) if c != self.j]
        row1 = [(1, c) for c in range(self.j + 1, 5)]
        return tuple(row0 + row1)

    @property
    def dimension(self) -> int:
        return len(self.free_slots)

    @cached_property
    def coordinate_names(self) -> tuple[str, ...]:
        names = []
        for r, c in self.free_slots:
            key = ("u" if r == 0 else "w", c)
            if self.pivots == (0, 1):
                names.append(_CHART01_NAMES[key])
            else:
                names.append(f"{key[0]}{c}")
        return tuple(names)

    @property
    def complement(self) -> tuple[int, int, int]:
        return tuple(c for c in range(5) if c not in self.pivots)

    def rows(self, ring: PolyRing, offset: int = 0) -> tuple[list[MultiPoly], list[MultiPoly]]:
        """Symbolic rows; cell coordinate ``k`` is ring variable ``offset + k``."""
        v = [[ring.zero] * 5, [ring.zero] * 5]
        v[0][self.i] = ring.one
        v[1][self.j] = ring.one
        for k, (r, c) in enumerate(self.free_slots):
            v[r][c] = ring.gen(offset + k)
        return v[0], v[1]

    def concrete_rows(self, values, field: Field) -> tuple[list, list]:
        if len(values) != self.dimension:
            raise ValueError(f"cell {self.pivots} needs {self.dimension} coordinates")
        v = [[field.zero] * 5, [field.zero] * 5]
        v[0][self.i] = field.one
        v[1][self.j] = field.one
        for x, (r, c) in zip(values, self.free_slots):
            v[r][c] = x
        return v[0], v[1]

    def __str__(self) -> str:
        return f"cell({self.i},{self.j})"


def cells() -> list[SchubertCell]:
    return [SchubertCell(i, j) for i, j in combinations(range(5), 2)]


def cell_of(v0, v1, field: Field) -> tuple[SchubertCell, list]:
    """Cell and coordinates of the line spanned by two independent vectors."""
    from ..algebra import linalg

    m, piv = linalg.rref(field, [list(v0), list(v1)])
    if len(piv) != 2:
        raise ValueError("vectors do not span a line")
    cell = SchubertCell(piv[0], piv[1])
    coords = [m[r][c] for r, c in cell.free_slots]
    return cell, coords


def plucker(v0, v1, field: Field | None = None) -> dict[tuple[int, int], object]:
    """``p_kl = v0_k v1_l - v0_l v1_k`` for ``k < l``.

    Works on MultiPoly rows (no field needed) or on payload rows.
    """
    out = {}
    for k, l in combinations(range(5), 2):
        if field is None:
            out[(k, l)] = v0[k] * v1[l] - v0[l] * v1[k]
        else:
            out[(k, l)] = field.sub(field.mul(v0[k], v1[l]), field.mul(v0[l], v1[k]))
    return out


def plucker_relations(p: dict) -> list:
    """The five quadrics ``p_ab p_cd - p_ac p_bd + p_ad p_bc`` for ``a<b<c<d``."""
    return [
        p[(a, b)] * p[(c, d)] - p[(a, c)] * p[(b, d)] + p[(a, d)] * p[(b, c)]
        for a, b, c, d in combinations(range(5), 4)
    ]
