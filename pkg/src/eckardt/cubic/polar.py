"""Polar quadrics, the rank test for Eckardt points, and smoothness."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..algebra import linalg
from ..algebra.fields import QQ, Field, PrimeField
from ..algebra.poly import MultiPoly, PolyRing, reduce_mod_prime
from ..groebner import Ideal, buchberger, contains_irrelevant_power
from .threefold import CubicError, CubicThreefold, ProjPoint

POINT_VARS = ("p0", "p1", "p2", "p3", "p4")


@dataclass(frozen=True)
class PolarMatrix:
    """Symmetric 5x5 matrix of the polar quadric.

    ``entries`` holds field payloads for a concrete point, or linear forms in
    ``p0..p4`` (MultiPoly) in symbolic mode.
    """

    entries: tuple[tuple, ...]
    field: Field
    symbolic: bool

    def __getitem__(self, jk):
        j, k = jk
        return self.entries[j][k]

    def rows(self) -> list[list]:
        return [list(r) for r in self.entries]


def polar_matrix(X: CubicThreefold, p: ProjPoint | None = None, ring: PolyRing | None = None) -> PolarMatrix:
    """Entry ``(j, k) = 1/2 * sum_i p_i f_ijk``.

    With ``p=None`` the matrix is symbolic in ``p0..p4`` (over ``ring``, by
    default QQ[p0..p4]).
    """
    half = Fraction(1, 2)
    if p is None:
        R = ring or PolyRing(QQ, POINT_VARS)
        F = R.field
        gens = R.gens
        rows = []
        for j in range(5):
            row = []
            for k in range(5):
                e = R.zero
                for i in range(5):
                    c = X.fijk(i, j, k)
                    if c:
                        e = e + gens[i].scale(F.convert(c * half))
                row.append(e)
            rows.append(tuple(row))
        return PolarMatrix(tuple(rows), F, True)
    F = p.field
    rows = []
    for j in range(5):
        row = []
        for k in range(5):
            e = F.zero
            for i in range(5):
                c = X.fijk(i, j, k)
                if c and not F.is_zero(p[i]):
                    e = F.add(e, F.mul(p[i], F.convert(c * half)))
            row.append(e)
        rows.append(tuple(row))
    return PolarMatrix(tuple(rows), F, False)


def evaluate_form(X: CubicThreefold, p: ProjPoint):
    """``f(p)`` computed in ``p``'s field."""
    F = p.field
    total = F.zero
    for exps, c in X.form.items():
        term = F.convert(c)
        for i, e in enumerate(exps):
            if e:
                term = F.mul(term, F.pow(p[i], e))
        total = F.add(total, term)
    return total


def gradient_at(X: CubicThreefold, p: ProjPoint) -> list:
    F = p.field
    out = []
    for g in X.gradient:
        v = F.zero
        for exps, c in g.items():
            term = F.convert(c)
            for i, e in enumerate(exps):
                if e:
                    term = F.mul(term, F.pow(p[i], e))
            v = F.add(v, term)
        out.append(v)
    return out


def is_eckardt(X: CubicThreefold, p: ProjPoint) -> bool:
    """Rank of the polar quadric at ``p`` is at most 2 (exact elimination)."""
    if not p.field.is_zero(evaluate_form(X, p)):
        raise CubicError(f"point {p.text()} does not lie on the cubic")
    return linalg.rank(p.field, polar_matrix(X, p).rows()) <= 2


def minors_of(rows: Sequence[Sequence]) -> list:
    """All 3x3 minors (100 of them for a 5x5 matrix), duplicates removed."""
    out = []
    seen = set()
    for r in combinations(range(len(rows)), 3):
        for c in combinations(range(len(rows[0])), 3):
            m = linalg.det3_poly([[rows[i][j] for j in c] for i in r])
            if m and m not in seen:
                seen.add(m)
                out.append(m)
    return out


def stratum_ring(s: int, field: Field) -> PolyRing:
    return PolyRing(field, POINT_VARS[s + 1:])


def stratum_point(s: int, ring: PolyRing) -> list[MultiPoly]:
    """Coordinates ``(0,..,0,1,p_{s+1},..,p4)`` as polynomials in ``ring``."""
    out = [ring.zero] * s + [ring.one]
    out += [ring.gen(i) for i in range(4 - s)]
    return out


def reduce_form(X: CubicThreefold, p: int) -> MultiPoly:
    """``f`` over GF(p); raises ``CubicError`` if the reduction is degenerate."""
    try:
        fp, dropped = reduce_mod_prime(X.form, p)
    except ZeroDivisionError as exc:
        raise CubicError(f"bad prime {p}: {exc}") from exc
    if dropped:
        raise CubicError(f"bad prime {p}: coefficients vanish modulo {p}")
    return fp


def minors_ideal_stratum(X: CubicThreefold, s: int, p: int) -> Ideal:
    """``f`` and the 3x3 minors of the polar matrix on stratum ``s`` over GF(p)."""
    if not 0 <= s <= 4:
        raise ValueError("stratum index must be in 0..4")
    F = PrimeField(p)
    fp = reduce_form(X, p)
    R = stratum_ring(s, F)
    pt = stratum_point(s, R)
    half = F.inv(2)
    rows = []
    for j in range(5):
        row = []
        for k in range(5):
            e = R.zero
            for i in range(5):
                c = X.fijk(i, j, k)
                if c:
                    e = e + pt[i].scale(F.mul(F.from_fraction(c), half))
            row.append(e)
        rows.append(row)
    gens = [fp.compose(pt, R)] + minors_of(rows)
    return Ideal(gens, R)


@dataclass
class SmoothnessVerdict:
    smooth: bool
    primes: tuple[int, ...]
    per_prime: dict[int, bool]
    witness_prime: int | None = None
    rational_singular_point: ProjPoint | None = None

    @property
    def label(self) -> str:
        if self.smooth:
            return "smooth-certified"
        return "singular"


def gradient_ideal_modp(X: CubicThreefold, p: int) -> Ideal:
    fp = reduce_form(X, p)
    return Ideal([fp.diff(i) for i in range(5)], fp.ring)


def smooth_mod_p(X: CubicThreefold, p: int) -> bool:
    G = buchberger(gradient_ideal_modp(X, p))
    return contains_irrelevant_power(G, 5)


def smoothness_check(X: CubicThreefold, primes: Sequence[int]) -> SmoothnessVerdict:
    """Gradient ideal has no projective zero modulo every prime in ``primes``.

    When some prime says "singular" the rational affine-cone strata are
    searched for an actual singular point to attach as a certificate.
    """
    if not primes:
        raise ValueError("need at least one prime")
    per = {p: smooth_mod_p(X, p) for p in primes}
    smooth = all(per.values())
    witness = None if smooth else next(p for p, ok in per.items() if not ok)
    verdict = SmoothnessVerdict(smooth, tuple(primes), per, witness)
    if not smooth:
        verdict.rational_singular_point = find_rational_singular_point(X)
    return verdict


def find_rational_singular_point(X: CubicThreefold) -> ProjPoint | None:
    from ..groebner import NotZeroDimensional, PointCapExceeded, rational_points_zero_dim

    for s in range(5):
        R = stratum_ring(s, QQ)
        pt = stratum_point(s, R)
        gens = [g.compose(pt, R) for g in X.gradient]
        I = Ideal(gens, R)
        if R.nvars == 0:
            if all(g.is_zero() for g in gens):
                return ProjPoint([int(i == s) for i in range(5)])
            continue
        try:
            sols = rational_points_zero_dim(I)
        except (NotZeroDimensional, PointCapExceeded):
            # positive-dimensional singular locus: pick a rational point on it
            sols = _points_on_positive_dim(I)
        for sol in sols:
            return ProjPoint([0] * s + [1] + list(sol))
    return None


def _points_on_positive_dim(I: Ideal) -> list[tuple]:
    """Try setting free variables to 0 until the system is zero-dimensional."""
    from ..groebner import NotZeroDimensional, PointCapExceeded, rational_points_zero_dim

    R = I.ring
    gens = list(I.gens)
    for i in range(R.nvars):
        gens.append(R.gen(i))
        try:
            return rational_points_zero_dim(Ideal(gens, R))
        except (NotZeroDimensional, PointCapExceeded):
            continue
    return []
