"""The main component of the curve of second-type lines, in the big cell.

In the cell ``p01 = 1`` the second-type lines are cut out by the Fano
equations and ``det D``.  Each Eckardt point ``p`` contributes the curve
``E_p`` of lines through ``p``; removing all of them (saturation) leaves
the main component ``P``.  We report how ``P`` and the ``E_p`` meet.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..algebra.fields import QQ
from ..cubic.eckardt import eckardt_count, eckardt_points_exact, galois_orbits
from ..cubic.threefold import CubicThreefold, ProjPoint
from ..groebner import DEFAULT_TRIALS, Ideal, buchberger, distinct_point_count, rational_points_zero_dim, saturate
from ..primes import DEFAULT_PRIMES, NoConsensusError, consensus, rational_reconstruct, splitting_primes
from .incidence import CHART01, point_conditions, point_in_field
from .systems import ALPHA_STRATA, cell_ring, fano_generators, second_type_system, triple_line_system


@dataclass
class Intersection:
    distinct: int
    multiplicity: int
    rational: int | None = None  # points with rational coordinates

    def as_dict(self) -> dict:
        return {"distinct": self.distinct, "multiplicity": self.multiplicity, "rational": self.rational}


@dataclass
class MainComponentModel:
    points: list[ProjPoint]  # Eckardt points whose curve meets the big cell
    orbits: list[list[ProjPoint]]  # the same points grouped by conjugation
    per_point: list[Intersection]  # E_p . P
    triple_points: list[int]  # how many points of E_p . P are triple lines
    pairwise_points: dict[tuple[int, int], Intersection]
    per_curve: list[Intersection]  # E_p . P summed over each orbit
    pairwise_curves: dict[tuple[int, int], Intersection]
    chart_triple_lines: int
    primes: tuple[int, ...]
    stable: bool  # a second saturation pass changed nothing
    contains_m: bool  # P contains the M ideal
    complete: bool  # every Eckardt point was recovered exactly

    @property
    def n_curves(self) -> int:
        return len(self.orbits)


def _chart_points(points: Sequence[ProjPoint]) -> list[ProjPoint]:
    """Eckardt points through which some line of the big cell passes."""
    F = lambda p: p.field  # noqa: E731
    return [p for p in points if not (F(p).is_zero(p[0]) and F(p).is_zero(p[1]))]


def _lift(I: Ideal, ring) -> list:
    n = I.ring.nvars
    return [g.change_ring(ring, list(range(n))) for g in I.gens]


def _modp_data(X: CubicThreefold, points: list[ProjPoint], q: int, trials: int, seed: int):
    R = cell_ring(CHART01, q)
    M = second_type_system(X, CHART01, q).m_ideal()
    fano = Ideal(fano_generators(X, CHART01, q), R)
    Es = [fano + Ideal(point_conditions(CHART01, point_in_field(p, q), R), R) for p in points]
    P = M
    for E in Es:
        P = saturate(P, E)
    GP = buchberger(P)
    stable = all(buchberger(saturate(P, E)).same_ideal(GP) for E in Es)
    contains_m = all(GP.contains(g) for g in M.gens)
    per_point = []
    triples = []
    fp_points = []
    for E in Es:
        G = buchberger(P + E)
        sol = distinct_point_count(G, trials, seed)
        per_point.append((sol.distinct_count, sol.quotient_dimension))
        fp_points.append(tuple(rational_points_zero_dim(G, cap=10 ** 6)) if sol.quotient_dimension else ())
        t = 0
        for s in ALPHA_STRATA:
            T = triple_line_system(X, CHART01, s, q)
            S = T.ring
            H = buchberger(Ideal(list(T.ideal.gens) + _lift(P, S) + _lift(E, S), S))
            t += distinct_point_count(H, trials, seed).distinct_count
        triples.append(t)
    pairs = []
    for a, b in combinations(range(len(Es)), 2):
        sol = distinct_point_count(buchberger(Es[a] + Es[b]), trials, seed)
        pairs.append((sol.distinct_count, sol.quotient_dimension))
    triple_chart = 0
    for s in ALPHA_STRATA:
        T = triple_line_system(X, CHART01, s, q)
        triple_chart += distinct_point_count(buchberger(T.ideal), trials, seed).distinct_count
    counts = (tuple(per_point), tuple(triples), tuple(pairs), stable, contains_m, triple_chart)
    return counts, fp_points


def _rational_points(X: CubicThreefold, point: ProjPoint, per_prime: dict[int, tuple]) -> int:
    """Intersection points with rational coordinates, agreed across primes and checked over QQ."""
    if point.field.kind != "rationals":
        return 0
    common = None
    for q, pts in per_prime.items():
        lifted = set()
        for pt in pts:
            lift = [rational_reconstruct(int(c), q) for c in pt]
            if all(x is not None for x in lift):
                lifted.add(tuple(lift))
        common = lifted if common is None else common & lifted
    if not common:
        return 0
    R = cell_ring(CHART01, None)
    checks = list(second_type_system(X, CHART01, None).m_ideal().gens)
    checks += point_conditions(CHART01, point_in_field(point, None), R)
    return sum(1 for pt in common if all(QQ.is_zero(g.evaluate(list(pt))) for g in checks))


def main_component_model(
    X: CubicThreefold,
    primes: Sequence[int] | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> MainComponentModel:
    """Saturate the second-type curve by every ``E_p`` and intersect.

    Non-rational Eckardt points live in QQ(xi); in that case the default
    primes are ones where ``xi`` exists modulo ``p``.
    """
    n_E = eckardt_count(X).total
    exact, complete = eckardt_points_exact(X, n_E)
    points = _chart_points(exact)
    rational = all(p.field.kind == "rationals" for p in points)
    if primes is None:
        primes = DEFAULT_PRIMES if rational else tuple(splitting_primes(3))
    elif not rational and any(q % 3 != 1 for q in primes):
        raise ValueError("Eckardt points over QQ(xi) need primes congruent to 1 mod 3")
    side: dict[int, list] = {}

    def compute(q: int):
        counts, fp = _modp_data(X, points, q, trials, seed)
        side[q] = fp
        return counts

    c = consensus(compute, primes)
    if not c.ok:
        raise NoConsensusError("main component intersections", c.per_prime)
    per_point_raw, triples, pairs_raw, stable, contains_m, triple_chart = c.value
    agreeing = [q for q in c.per_prime if c.per_prime[q] == c.value]
    per_point = []
    for i, (d, m) in enumerate(per_point_raw):
        rat = _rational_points(X, points[i], {q: side[q][i] for q in agreeing})
        per_point.append(Intersection(d, m, rat))
    pairwise_points = {}
    for (a, b), (d, m) in zip(combinations(range(len(points)), 2), pairs_raw):
        pairwise_points[(a, b)] = Intersection(d, m, None)
    orbits = galois_orbits(points)
    index = {p: i for i, p in enumerate(points)}
    per_curve = []
    for orb in orbits:
        members = [per_point[index[p]] for p in orb]
        rat = sum(x.rational or 0 for x in members) if len(orb) == 1 else 0
        per_curve.append(Intersection(sum(x.distinct for x in members), sum(x.multiplicity for x in members), rat))
    pairwise_curves = {}
    for a, b in combinations(range(len(orbits)), 2):
        d = m = 0
        for p in orbits[a]:
            for r in orbits[b]:
                i, j = sorted((index[p], index[r]))
                d += pairwise_points[(i, j)].distinct
                m += pairwise_points[(i, j)].multiplicity
        pairwise_curves[(a, b)] = Intersection(d, m, None)
    return MainComponentModel(
        points=points,
        orbits=orbits,
        per_point=per_point,
        triple_points=list(triples),
        pairwise_points=pairwise_points,
        per_curve=per_curve,
        pairwise_curves=pairwise_curves,
        chart_triple_lines=triple_chart,
        primes=tuple(c.per_prime),
        stable=stable,
        contains_m=contains_m,
        complete=complete,
    )


__all__ = ["Intersection", "MainComponentModel", "main_component_model"]
