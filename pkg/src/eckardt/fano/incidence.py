"""Lines through a point and the elliptic curves of Eckardt points."""

from __future__ import annotations

from typing import Sequence

from ..algebra.poly import PolyRing
from ..cubic.polar import is_eckardt
from ..cubic.threefold import CubicError, CubicThreefold, ProjPoint
from ..groebner import Ideal
from ..primes import reduction_map
from .cells import SchubertCell
from .systems import cell_ring, fano_ideal

CHART01 = SchubertCell(0, 1)


def point_in_field(p: ProjPoint, prime: int | None) -> list:
    """Coordinates of ``p`` as payloads of QQ (``prime=None``) or GF(prime)."""
    if prime is None:
        if p.field.kind != "rationals":
            raise CubicError(f"{p.text()} is not a rational point")
        return list(p.coords)
    to_p = reduction_map(p.field, prime)
    return [to_p(c) for c in p.coords]


def point_conditions(cell: SchubertCell, coords: Sequence, ring: PolyRing) -> list:
    """Linear forms in the cell coordinates vanishing iff the point is on the line.

    If ``p = l0 v0 + l1 v1`` then ``l0 = p_i`` and ``l1 = p_j`` (the pivot
    entries), so incidence is ``p - p_i v0 - p_j v1 = 0``.  The cell
    coordinates must be the first variables of ``ring``.
    """
    v0, v1 = cell.rows(ring)
    pi, pj = coords[cell.i], coords[cell.j]
    out = []
    for c in range(5):
        if c in cell.pivots:
            continue
        g = ring.const(coords[c]) - v0[c].scale(pi) - v1[c].scale(pj)
        if g:
            out.append(g)
    return out


def lines_through_point_ideal(cell: SchubertCell, p: ProjPoint, prime: int | None = None) -> Ideal:
    R = cell_ring(cell, prime)
    return Ideal(point_conditions(cell, point_in_field(p, prime), R), R)


def elliptic_curve_chart_ideal(X: CubicThreefold, p: ProjPoint, prime: int | None = None) -> Ideal:
    """Lines through the Eckardt point ``p`` inside the big cell."""
    if not is_eckardt(X, p):
        raise CubicError(f"{p.text()} is not an Eckardt point")
    return fano_ideal(X, CHART01, prime) + lines_through_point_ideal(CHART01, p, prime)
