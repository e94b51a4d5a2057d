"""Normal form of the cubic at a point, the elliptic curve E_p and its flexes.

At a smooth point ``p`` choose coordinates with ``p = e0`` and tangent
hyperplane ``x1 = 0``; then ``f = x0^2 x1 + x0 Q(x1..x4) + C(x1..x4)``.
``p`` is an Eckardt point exactly when ``Q`` can be made to vanish, and
then the tangent section is the cone over the plane cubic
``C(0, x2, x3, x4)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..algebra import linalg
from ..algebra.fields import Field
from ..algebra.ops import linear_substitute
from ..algebra.poly import MultiPoly, PolyRing
from ..groebner import DEFAULT_TRIALS, Ideal, buchberger, contains_irrelevant_power, distinct_point_count
from ..primes import DEFAULT_PRIMES, NoConsensusError, consensus, reduce_poly, splitting_primes
from .polar import evaluate_form, gradient_at
from .threefold import VARS, CubicError, CubicThreefold, ProjPoint, SingularPointError

PLANE_VARS = ("x2", "x3", "x4")


@dataclass
class NormalForm:
    T: list[list]  # columns are the new basis; T e0 = p
    form: MultiPoly  # f(T x)
    Q: MultiPoly  # coefficient of x0, in x1..x4
    C: MultiPoly  # x0-free part, in x1..x4

    @property
    def is_eckardt(self) -> bool:
        return self.Q.is_zero()


def _ring(F: Field) -> PolyRing:
    return PolyRing(F, VARS)


def form_over(X: CubicThreefold, F: Field) -> MultiPoly:
    R = _ring(F)
    if F.kind == "rationals":
        return X.form
    return X.form.map_coefficients(F.convert, R)


def _split_by_x0(g: MultiPoly) -> dict[int, MultiPoly]:
    R = g.ring
    parts: dict[int, list] = {}
    for exps, c in g.items():
        parts.setdefault(exps[0], []).append(((0,) + tuple(exps[1:]), c))
    return {e: R.from_terms(t) for e, t in parts.items()}


def _tangent_frame(F: Field, p: Sequence, grad: Sequence) -> list[list]:
    """Columns ``p, c1, c2, c3, c4`` with ``grad . c1 = 1`` and ``c2..c4`` in ``grad^perp``."""
    k = next(i for i, g in enumerate(grad) if not F.is_zero(g))
    c1 = [F.zero] * 5
    c1[k] = F.inv(grad[k])
    cols = [list(p)]
    for v in linalg.kernel(F, [list(grad)]):
        trial = cols + [v]
        if linalg.rank(F, trial) == len(trial):
            cols.append(v)
        if len(cols) == 4:
            break
    cols.insert(1, c1)
    return [[cols[j][i] for j in range(5)] for i in range(5)]


def normalize_at(X: CubicThreefold, p: ProjPoint) -> NormalForm:
    """Coordinates in which ``p = e0`` and the tangent hyperplane is ``x1 = 0``.

    Linear multiples of ``x1`` inside ``Q`` are absorbed by ``x0 -> x0 - L/2``,
    so ``Q`` depends on ``x2, x3, x4`` only and vanishes iff ``p`` is Eckardt.
    """
    F = p.field
    if not F.is_zero(evaluate_form(X, p)):
        raise CubicError(f"point {p.text()} does not lie on the cubic")
    grad = gradient_at(X, p)
    if all(F.is_zero(g) for g in grad):
        raise SingularPointError(f"the cubic is singular at {p.text()}")
    f = form_over(X, F)
    T = _tangent_frame(F, p.coords, grad)
    g = linear_substitute(f, T)
    Q = _split_by_x0(g).get(1, g.ring.zero)
    # Q = Q(0, x2, x3, x4) + x1 * L
    L = [F.zero] * 5
    for exps, c in Q.items():
        if exps[1]:
            rest = list(exps)
            rest[1] -= 1
            j = next((i for i, e in enumerate(rest) if e), None)
            L[j] = F.add(L[j], c)
    if any(not F.is_zero(c) for c in L):
        half = F.inv(F.from_int(2))
        S = [[F.one if i == j else F.zero for j in range(5)] for i in range(5)]
        for j in range(1, 5):
            S[0][j] = F.neg(F.mul(L[j], half))
        T = linalg.mat_mul(F, T, S)
        g = linear_substitute(f, T)
    parts = _split_by_x0(g)
    nf = NormalForm(T, g, parts.get(1, g.ring.zero), parts.get(0, g.ring.zero))
    _check_normal_form(nf, F)
    return nf


def _check_normal_form(nf: NormalForm, F: Field) -> None:
    R = nf.form.ring
    parts = _split_by_x0(nf.form)
    if 3 in parts:
        raise AssertionError("x0^3 survives normalization")
    lead = parts.get(2, R.zero)
    if lead != R.gen(1):
        raise AssertionError(f"x0^2 part is {lead}, expected x1")
    if nf.Q.degree_in(1) > 0:
        raise AssertionError("Q still depends on x1")


@dataclass
class EllipticCurveModel:
    cbar: MultiPoly  # plane cubic in x2, x3, x4
    normal: NormalForm
    point: ProjPoint
    smooth_primes: tuple[int, ...] = ()

    @property
    def field(self) -> Field:
        return self.cbar.field

    @property
    def T(self) -> list[list]:
        return self.normal.T


def plane_cubic(nf: NormalForm) -> MultiPoly:
    F = nf.form.field
    P = PolyRing(F, PLANE_VARS)
    out = []
    for exps, c in nf.C.items():
        if exps[1] == 0:
            out.append((exps[2:], c))
    return P.from_terms(out)


def default_primes_for(F: Field) -> tuple[int, ...]:
    if F.kind == "rationals":
        return DEFAULT_PRIMES
    return tuple(splitting_primes(3))


def plane_curve_smooth_mod_p(c: MultiPoly, p: int) -> bool:
    cp = reduce_poly(c, p)
    G = buchberger(Ideal([cp.diff(i) for i in range(3)], cp.ring))
    return contains_irrelevant_power(G)


def elliptic_curve_at(X: CubicThreefold, p: ProjPoint, primes: Sequence[int] | None = None) -> EllipticCurveModel:
    """``C(0, x2, x3, x4)`` of the normal form at the Eckardt point ``p``."""
    nf = normalize_at(X, p)
    if not nf.is_eckardt:
        raise CubicError(f"{p.text()} is not an Eckardt point")
    cbar = plane_cubic(nf)
    primes = tuple(primes) if primes else default_primes_for(p.field)
    for q in primes:
        if not plane_curve_smooth_mod_p(cbar, q):
            raise AssertionError(
                f"plane cubic at {p.text()} is singular modulo {q}; the threefold cannot be smooth"
            )
    return EllipticCurveModel(cbar, nf, p, primes)


def hessian_determinant(c: MultiPoly) -> MultiPoly:
    n = c.ring.nvars
    H = [[c.diff(i).diff(j) for j in range(n)] for i in range(n)]
    return linalg.det3_poly(H)


def plane_points_mod_p(gens: Sequence[MultiPoly], p: int, trials: int = DEFAULT_TRIALS, seed: int = 0) -> tuple[int, int]:
    """(distinct, with multiplicity) points of a homogeneous system in P^2 over GF(p)-bar."""
    distinct = mult = 0
    for s in range(3):
        names = PLANE_VARS[s + 1:]
        R = PolyRing(gens[0].field, names)
        images = [R.zero] * s + [R.one] + [R.gen(i) for i in range(2 - s)]
        I = Ideal([g.compose(images, R) for g in gens], R)
        G = buchberger(I)
        sol = distinct_point_count(G, trials, seed)
        distinct += sol.distinct_count
        mult += sol.quotient_dimension
    return distinct, mult


@dataclass
class InflectionCounts:
    distinct: int
    multiplicity: int
    primes: tuple[int, ...]


def inflection_analysis(E: EllipticCurveModel, primes: Sequence[int] | None = None, trials: int = DEFAULT_TRIALS) -> InflectionCounts:
    """Points of ``{C = 0, Hess(C) = 0}`` in the plane: the flexes of ``E_p``."""
    primes = tuple(primes) if primes else E.smooth_primes or default_primes_for(E.field)
    H = hessian_determinant(E.cbar)

    def count(q: int):
        if not plane_curve_smooth_mod_p(E.cbar, q):
            raise ValueError(f"plane cubic singular modulo {q}")
        return plane_points_mod_p([reduce_poly(E.cbar, q), reduce_poly(H, q)], q, trials)

    c = consensus(count, primes)
    if not c.ok:
        raise NoConsensusError("inflection points", c.per_prime)
    d, m = c.value
    return InflectionCounts(d, m, tuple(c.per_prime))


__all__ = [
    "EllipticCurveModel",
    "InflectionCounts",
    "NormalForm",
    "elliptic_curve_at",
    "hessian_determinant",
    "inflection_analysis",
    "normalize_at",
    "plane_cubic",
]
