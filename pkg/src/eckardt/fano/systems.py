"""Polynomial systems on a Schubert cell: lines on X, second-type and triple lines.

For a line spanned by ``v0, v1`` and a point ``v2`` off it, expand
``f(t0 v0 + t1 v1 + t2 v2)`` in ``t2``:

* the ``t2^0`` part gives the four Fano equations (coefficients of
  ``t0^3, t0^2 t1, t0 t1^2, t1^3``);
* the ``t2^1`` part is ``sum_c alpha_c df/dx_c`` along the line, a binary
  quadric whose three coefficients are the entries of ``D(l) alpha``;
* the ``t2^2`` part is ``1/2 sum alpha_a alpha_b d2f/dx_a dx_b``, a binary
  linear form with two coefficients.

The line is of second type when some plane makes the ``t2`` part vanish,
and a triple line when the ``t2^2`` part vanishes as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..algebra import linalg
from ..algebra.fields import QQ, Field, PrimeField
from ..algebra.ops import restrict_line_expansion
from ..algebra.poly import MultiPoly, PolyRing
from ..cubic.polar import reduce_form
from ..cubic.threefold import CubicThreefold
from ..groebner import Ideal
from .cells import SchubertCell

ALPHA_STRATA = (0, 1, 2)


def _field(p: int | None) -> Field:
    return QQ if p is None else PrimeField(p)


def _form(X: CubicThreefold, p: int | None) -> MultiPoly:
    return X.form if p is None else reduce_form(X, p)


def alpha_names(cell: SchubertCell) -> tuple[str, str, str]:
    return tuple(f"al{c}" for c in cell.complement)


def cell_ring(cell: SchubertCell, p: int | None, with_alpha: bool = False) -> PolyRing:
    names = cell.coordinate_names + (alpha_names(cell) if with_alpha else ())
    return PolyRing(_field(p), names)


@dataclass
class _Expansion:
    ring: PolyRing  # cell coordinates followed by al_c for the three complement columns
    phi: list[MultiPoly]  # Fano equations
    D: list[list[MultiPoly]]  # rows t0^2, t0 t1, t1^2; columns complement
    dalpha: list[MultiPoly]  # D * alpha
    quad: list[MultiPoly]  # coefficients of t0, t1 in sum alpha_a alpha_b f_ab
    plane: MultiPoly  # f(v2)


@lru_cache(maxsize=256)
def _expansion(X: CubicThreefold, cell: SchubertCell, p: int | None) -> _Expansion:
    f = _form(X, p)
    R = cell_ring(cell, p, with_alpha=True)
    n = cell.dimension
    v0, v1 = cell.rows(R)
    comp = cell.complement
    alpha = {c: R.gen(n + k) for k, c in enumerate(comp)}
    phi = restrict_line_expansion(f, v0, v1, R)
    grads = {c: f.diff(c) for c in comp}
    cols = {c: restrict_line_expansion(grads[c], v0, v1, R) for c in comp}
    D = [[cols[c][r] for c in comp] for r in range(3)]
    dalpha = [sum((D[r][k] * alpha[c] for k, c in enumerate(comp)), R.zero) for r in range(3)]
    quad = [R.zero, R.zero]
    for a in comp:
        for b in comp:
            h = grads[a].diff(b)
            if h.is_zero():
                continue
            lin = restrict_line_expansion(h, v0, v1, R)
            for r in range(2):
                quad[r] = quad[r] + lin[r] * alpha[a] * alpha[b]
    v2 = [R.zero] * 5
    for c in comp:
        v2[c] = alpha[c]
    plane = f.compose(v2, R)
    return _Expansion(R, phi, D, dalpha, quad, plane)


def _drop_alpha(g: MultiPoly, ring: PolyRing, n: int) -> MultiPoly:
    """Move an alpha-free polynomial from the big ring into the cell ring."""
    out = []
    for exps, c in g.items():
        if any(exps[n:]):
            raise ValueError("polynomial involves alpha variables")
        out.append((exps[:n], c))
    return ring.from_terms(out)


def fano_ideal(X: CubicThreefold, cell: SchubertCell, p: int | None = None) -> Ideal:
    """The four Fano equations on ``cell`` (over GF(p), or QQ for ``p=None``)."""
    E = _expansion(X, cell, p)
    R = cell_ring(cell, p)
    return Ideal([_drop_alpha(g, R, cell.dimension) for g in E.phi], R)


def fano_generators(X: CubicThreefold, cell: SchubertCell, p: int | None = None) -> list[MultiPoly]:
    """The four generators in order ``phi30, phi21, phi12, phi03`` (zeros kept)."""
    E = _expansion(X, cell, p)
    R = cell_ring(cell, p)
    return [_drop_alpha(g, R, cell.dimension) for g in E.phi]


@dataclass
class SecondTypeSystem:
    fano: Ideal
    D: list[list[MultiPoly]]
    det: MultiPoly

    def m_ideal(self) -> Ideal:
        return Ideal(list(self.fano.gens) + [self.det], self.fano.ring)


def second_type_system(X: CubicThreefold, cell: SchubertCell, p: int | None = None) -> SecondTypeSystem:
    E = _expansion(X, cell, p)
    R = cell_ring(cell, p)
    n = cell.dimension
    D = [[_drop_alpha(e, R, n) for e in row] for row in E.D]
    return SecondTypeSystem(fano_ideal(X, cell, p), D, linalg.det3_poly(D))


@dataclass
class TripleLineSystem:
    cell: SchubertCell
    alpha_stratum: int
    ideal: Ideal
    plane: MultiPoly  # f(v2) on this stratum; must not vanish at any solution

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring


def alpha_stratum_ring(cell: SchubertCell, s: int, p: int | None) -> PolyRing:
    free = alpha_names(cell)[s + 1:]
    return PolyRing(_field(p), cell.coordinate_names + free)


def triple_line_system(X: CubicThreefold, cell: SchubertCell, s: int, p: int | None = None) -> TripleLineSystem:
    """Triple lines of ``cell`` whose tangent plane direction lies in alpha-stratum ``s``.

    Stratum 0 sets the first complement coordinate of ``alpha`` to 1, stratum
    1 sets it to 0 and the second to 1, stratum 2 is ``alpha = (0, 0, 1)``.
    """
    if s not in ALPHA_STRATA:
        raise ValueError("alpha stratum must be 0, 1 or 2")
    E = _expansion(X, cell, p)
    n = cell.dimension
    S = alpha_stratum_ring(cell, s, p)
    images = [S.gen(k) for k in range(n)]
    alpha = [S.zero] * s + [S.one] + [S.gen(n + k) for k in range(2 - s)]
    images += alpha
    gens = [g.compose(images, S) for g in E.phi + E.dalpha + E.quad]
    return TripleLineSystem(cell, s, Ideal(gens, S), E.plane.compose(images, S))


def triple_line_conditions(X: CubicThreefold, cell: SchubertCell, coords, alpha, field: Field) -> list:
    """Values of all nine triple-line generators at a concrete (line, alpha)."""
    p = field.p if isinstance(field, PrimeField) else None
    E = _expansion(X, cell, p)
    point = list(coords) + list(alpha)
    return [g.evaluate(point) for g in E.phi + E.dalpha + E.quad]
