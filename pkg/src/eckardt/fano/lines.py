"""Classifying concrete lines and counting triple lines over all cells."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..algebra import linalg
from ..algebra.fields import QQ, Field
from ..algebra.ops import restrict_line_expansion
from ..algebra.poly import PolyRing
from ..cubic.normal import form_over
from ..cubic.threefold import CubicError, CubicThreefold, ProjPoint
from ..groebner import DEFAULT_TRIALS, GroebnerBasis, Ideal, buchberger, distinct_point_count
from ..primes import DEFAULT_PRIMES, NoConsensusError, consensus, splitting_primes
from .cells import SchubertCell, cell_of, cells
from .incidence import CHART01, point_conditions, point_in_field
from .systems import ALPHA_STRATA, triple_line_system


@dataclass
class LineData:
    cell: SchubertCell
    coords: list
    phi: list  # restriction of f to the line
    D: list[list]  # 3x3 tangency matrix
    quad: list | None  # second-order conditions at the tangent direction
    alpha: list | None  # tangent direction in the complement coordinates


def line_data(X: CubicThreefold, v0: Sequence, v1: Sequence, F: Field = QQ) -> LineData:
    """Evaluate the line equations at the concrete line spanned by ``v0, v1``."""
    v0 = [F.convert(x) if not isinstance(x, tuple) else x for x in v0]
    v1 = [F.convert(x) if not isinstance(x, tuple) else x for x in v1]
    cell, coords = cell_of(v0, v1, F)
    r0, r1 = cell.concrete_rows(coords, F)
    f = form_over(X, F)
    target = PolyRing(F, ())

    def values(g, a=r0, b=r1):
        return [h.constant_term() for h in restrict_line_expansion(g, a, b, target)] if g else None

    phi = values(f)
    comp = cell.complement
    cols = []
    for c in comp:
        v = values(f.diff(c))
        cols.append(v if v is not None else [F.zero] * 3)
    D = [[cols[k][r] for k in range(3)] for r in range(3)]
    return LineData(cell, coords, phi, D, None, None)


def line_type(X: CubicThreefold, v0: Sequence, v1: Sequence, F: Field = QQ) -> str:
    """``"not-on-X"``, ``"first"``, ``"second"`` or ``"triple"``."""
    data = line_data(X, v0, v1, F)
    if any(not F.is_zero(x) for x in data.phi):
        return "not-on-X"
    r = linalg.rank(F, data.D)
    if r == 3:
        return "first"
    if r < 2:
        raise CubicError("tangent plane along the line is not unique; the cubic is singular")
    (alpha,) = linalg.kernel(F, data.D)
    comp = data.cell.complement
    r0, r1 = data.cell.concrete_rows(data.coords, F)
    f = form_over(X, F)
    target = PolyRing(F, ())
    quad = [F.zero, F.zero]
    for a, ca in zip(comp, alpha):
        for b, cb in zip(comp, alpha):
            h = f.diff(a).diff(b)
            if h.is_zero() or F.is_zero(ca) or F.is_zero(cb):
                continue
            lin = restrict_line_expansion(h, r0, r1, target)
            w = F.mul(ca, cb)
            for k in range(2):
                quad[k] = F.add(quad[k], F.mul(w, lin[k].constant_term()))
    data.quad, data.alpha = quad, alpha
    return "triple" if all(F.is_zero(x) for x in quad) else "second"


def _check_no_plane(G: GroebnerBasis, plane, where: str) -> None:
    """A solution with ``f(v2) = 0`` would put a plane inside X."""
    if G.contains_one:
        return
    if plane.is_zero() or not buchberger(Ideal(list(G.polys) + [plane], G.ring)).contains_one:
        raise AssertionError(f"{where}: a solution spans a plane contained in the cubic")


def system_count(I: Ideal, trials: int, seed: int, plane=None, where: str = "") -> tuple[int, int]:
    G = buchberger(I)
    if plane is not None:
        _check_no_plane(G, plane, where)
    sol = distinct_point_count(G, trials, seed)
    return sol.distinct_count, sol.quotient_dimension


def triple_counts_mod_p(
    X: CubicThreefold,
    p: int,
    cell_list: Sequence[SchubertCell] | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    point: ProjPoint | None = None,
) -> tuple[tuple[int, ...], ...]:
    """Distinct triple-line counts per (cell, alpha-stratum) over GF(p)-bar."""
    from ..cubic.polar import smooth_mod_p

    if not smooth_mod_p(X, p):
        raise ValueError(f"bad reduction at {p}")
    coords = point_in_field(point, p) if point is not None else None
    out = []
    for cell in cell_list or cells():
        row = []
        for s in ALPHA_STRATA:
            T = triple_line_system(X, cell, s, p)
            I = T.ideal
            if coords is not None:
                I = I + Ideal(point_conditions(cell, coords, I.ring), I.ring)
            d, _ = system_count(I, trials, seed, T.plane, f"{cell} alpha-stratum {s}")
            row.append(d)
        out.append(tuple(row))
    return tuple(out)


@dataclass
class TripleLineReport:
    total: int
    per_cell: dict[str, int]
    per_alpha: dict[str, tuple[int, ...]]
    chart01: int
    primes: tuple[int, ...]
    consensus: bool
    outliers: list[int] = field(default_factory=list)


def triple_line_count(
    X: CubicThreefold,
    primes: Sequence[int] = DEFAULT_PRIMES,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    chart_only: bool = False,
) -> TripleLineReport:
    """Triple lines summed over the ten cells and three alpha-strata."""
    cl = [CHART01] if chart_only else cells()
    c = consensus(lambda p: triple_counts_mod_p(X, p, cl, trials, seed), primes)
    if not c.ok:
        raise NoConsensusError("triple-line counts", c.per_prime)
    per_alpha = {str(cell): row for cell, row in zip(cl, c.value)}
    per_cell = {k: sum(v) for k, v in per_alpha.items()}
    return TripleLineReport(
        total=sum(per_cell.values()),
        per_cell=per_cell,
        per_alpha=per_alpha,
        chart01=per_cell[str(CHART01)],
        primes=tuple(c.per_prime),
        consensus=True,
        outliers=c.outliers,
    )


def triple_lines_in_chart01(X: CubicThreefold, primes: Sequence[int] = DEFAULT_PRIMES, trials: int = DEFAULT_TRIALS) -> int:
    return triple_line_count(X, primes, trials, chart_only=True).chart01


def triple_lines_through(
    X: CubicThreefold,
    p: ProjPoint,
    primes: Sequence[int] | None = None,
    trials: int = DEFAULT_TRIALS,
) -> int:
    """Triple lines of X passing through the point ``p`` (all cells)."""
    from ..cubic.polar import evaluate_form

    if not p.field.is_zero(evaluate_form(X, p)):
        raise CubicError(f"point {p.text()} does not lie on the cubic")
    if primes is None:
        primes = DEFAULT_PRIMES if p.field.kind == "rationals" else tuple(splitting_primes(3))
    c = consensus(lambda q: triple_counts_mod_p(X, q, None, trials, 0, p), primes)
    if not c.ok:
        raise NoConsensusError("triple lines through a point", c.per_prime)
    return sum(sum(row) for row in c.value)
