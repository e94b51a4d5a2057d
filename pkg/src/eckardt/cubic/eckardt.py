"""Counting and listing Eckardt points by stratified minors systems."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..algebra.fields import QQ, eisenstein_field
from ..groebner import (
    DEFAULT_TRIALS,
    Ideal,
    NotZeroDimensional,
    PointCapExceeded,
    buchberger,
    distinct_point_count,
    rational_points_zero_dim,
)
from ..primes import DEFAULT_PRIMES, NoConsensusError, consensus, splitting_primes
from .polar import POINT_VARS, evaluate_form, is_eckardt, minors_ideal_stratum, minors_of, polar_matrix, stratum_point, stratum_ring
from .threefold import CubicThreefold, ProjPoint

MAX_ECKARDT = 30


@dataclass
class StratumCount:
    distinct: int
    multiplicity: int


@dataclass
class EckardtReport:
    total: int
    strata: tuple[int, ...]
    multiplicities: tuple[int, ...]
    primes: tuple[int, ...]
    consensus: bool
    per_prime: dict[int, tuple[int, ...]]
    outliers: list[int] = field(default_factory=list)
    rational_points: list[ProjPoint] | None = None
    rational_complete: bool = True

    def __post_init__(self) -> None:
        if self.total != sum(self.strata):
            raise AssertionError("stratum counts do not add up to the total")
        if self.total > MAX_ECKARDT:
            raise AssertionError(f"{self.total} Eckardt points exceeds the bound {MAX_ECKARDT}")


def stratum_count(X: CubicThreefold, s: int, p: int, trials: int = DEFAULT_TRIALS, seed: int = 0) -> StratumCount:
    I = minors_ideal_stratum(X, s, p)
    G = buchberger(I)
    sol = distinct_point_count(G, trials, seed)
    return StratumCount(sol.distinct_count, sol.quotient_dimension)


def eckardt_counts_mod_p(X: CubicThreefold, p: int, trials: int = DEFAULT_TRIALS, seed: int = 0) -> tuple[tuple[int, ...], tuple[int, ...]]:
    from .polar import smooth_mod_p

    if not smooth_mod_p(X, p):
        raise ValueError(f"bad reduction at {p}: the cubic is singular modulo {p}")
    counts = [stratum_count(X, s, p, trials, seed) for s in range(5)]
    return tuple(c.distinct for c in counts), tuple(c.multiplicity for c in counts)


def eckardt_count(
    X: CubicThreefold,
    primes: Sequence[int] = DEFAULT_PRIMES,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    with_rational: bool = False,
) -> EckardtReport:
    """Geometric Eckardt points, stratum by stratum, agreed across primes."""
    c = consensus(lambda p: eckardt_counts_mod_p(X, p, trials, seed), primes)
    if not c.ok:
        raise NoConsensusError("Eckardt counts", c.per_prime)
    strata, mult = c.value
    report = EckardtReport(
        total=sum(strata),
        strata=strata,
        multiplicities=mult,
        primes=tuple(c.per_prime),
        consensus=True,
        per_prime={p: v[0] for p, v in c.per_prime.items()},
        outliers=c.outliers,
    )
    if with_rational:
        pts, complete = eckardt_rational_points(X, return_complete=True)
        report.rational_points = pts
        report.rational_complete = complete
    return report


def rational_minors_ideal(X: CubicThreefold, s: int) -> Ideal:
    R = stratum_ring(s, QQ)
    pt = stratum_point(s, R)
    B = polar_matrix(X, None)
    rows = [[e.compose(pt, R) for e in row] for row in B.rows()]
    return Ideal([X.form.compose(pt, R)] + minors_of(rows), R)


def eckardt_rational_points(X: CubicThreefold, cap: int = 64, return_complete: bool = False):
    """Eckardt points with rational coordinates, verified by the rank test."""
    pts: list[ProjPoint] = []
    complete = True
    for s in range(5):
        I = rational_minors_ideal(X, s)
        if I.ring.nvars == 0:
            if all(g.is_zero() for g in I.gens):
                pts.append(ProjPoint([int(i == s) for i in range(5)]))
            continue
        try:
            sols = rational_points_zero_dim(I, cap=cap)
        except (NotZeroDimensional, PointCapExceeded):
            complete = False
            continue
        for sol in sols:
            pt = ProjPoint([0] * s + [1] + list(sol))
            if not is_eckardt(X, pt):
                raise AssertionError(f"{pt.text()} solves the minors system but fails the rank test")
            pts.append(pt)
    pts.sort()
    return (pts, complete) if return_complete else pts


def _eisenstein_lift(a: int, p: int, root: int, bound: int = 12):
    """Small ``(x, y)`` with ``x + y*root = a mod p`` (``root`` a root of t^2-t+1)."""
    for h in range(bound + 1):
        for x in range(-h, h + 1):
            for y in range(-h, h + 1):
                if max(abs(x), abs(y)) == h and (x + y * root - a) % p == 0:
                    return x, y
    return None


def eckardt_points_exact(X: CubicThreefold, expected: int | None = None) -> tuple[list[ProjPoint], bool]:
    """Eckardt points with coordinates in QQ or in QQ(xi), xi^2 - xi + 1 = 0.

    Points are found over a prime splitting ``t^2 - t + 1``, lifted to small
    Eisenstein integers and verified exactly with the rank test over QQ(xi).
    The flag says whether every geometric point was recovered.
    """
    E = eisenstein_field()
    p = splitting_primes(1)[0]
    root = min(r for r in range(p) if (r * r - r + 1) % p == 0)
    found: list[ProjPoint] = []
    complete = True
    for s in range(5):
        I = minors_ideal_stratum(X, s, p)
        if I.ring.nvars == 0:
            if all(g.is_zero() for g in I.gens):
                found.append(ProjPoint([int(i == s) for i in range(5)]))
            continue
        try:
            sols = rational_points_zero_dim(I)
            dim = distinct_point_count(buchberger(I)).distinct_count
        except (NotZeroDimensional, PointCapExceeded):
            complete = False
            continue
        if len(sols) < dim:
            complete = False
        for sol in sols:
            coords = [(0, 0)] * s + [(1, 0)]
            for a in sol:
                lift = _eisenstein_lift(a, p, root)
                if lift is None:
                    complete = False
                    break
                coords.append(lift)
            else:
                pt = ProjPoint([E.convert(c) for c in coords], E)
                if E.is_zero(evaluate_form(X, pt)) and is_eckardt(X, pt):
                    found.append(_simplify(pt))
                else:
                    complete = False
    if expected is not None and len(found) != expected:
        complete = False
    return sorted(found), complete


def _simplify(pt: ProjPoint) -> ProjPoint:
    """Rational points are returned over QQ."""
    F = pt.field
    if all(F.in_base(c) for c in pt.coords):
        return ProjPoint([c[0] for c in pt.coords], QQ)
    return pt


def conjugate(pt: ProjPoint) -> ProjPoint:
    """Complex conjugate of a QQ(xi)-point (xi goes to 1 - xi)."""
    F = pt.field
    if F.kind == "rationals":
        return pt
    out = []
    for a, b in pt.coords:
        out.append((a + b, -b))
    return ProjPoint(out, F)


def galois_orbits(points: Sequence[ProjPoint]) -> list[list[ProjPoint]]:
    """Group points into orbits under conjugation."""
    seen: set = set()
    out = []
    for pt in points:
        if pt in seen:
            continue
        c = conjugate(pt)
        orbit = [pt] if c == pt else sorted([pt, c])
        seen.update(orbit)
        out.append(orbit)
    return out


__all__ = [
    "EckardtReport",
    "MAX_ECKARDT",
    "POINT_VARS",
    "conjugate",
    "eckardt_count",
    "eckardt_counts_mod_p",
    "eckardt_points_exact",
    "eckardt_rational_points",
    "galois_orbits",
    "stratum_count",
]
