"""Zero-dimensional ideals: standard monomials, multiplication maps, counting."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..algebra import univariate as uv
from ..algebra.fields import Field, PrimeField
from ..algebra.poly import MultiPoly, PolyRing
from .basis import GroebnerBasis, Ideal, buchberger

DEFAULT_TRIALS = 5
DEFAULT_RATIONAL_CAP = 64
SEPARATION_RISK = 1e-9  # tolerated chance that all random forms fail to separate


class NotZeroDimensional(ValueError):
    """The ideal has a positive-dimensional solution set."""


class PointCapExceeded(ValueError):
    pass


@dataclass
class ZeroDimSolution:
    quotient_dimension: int
    distinct_count: int
    separating_form_minpoly: MultiPoly | None
    rational_points: list[tuple] | None = None
    trial_counts: list[int] = field(default_factory=list)
    method: str = "separating-form"  # or "radical" when the field is too small to trust random forms


def is_zero_dimensional(G: GroebnerBasis) -> bool:
    if G.contains_one:
        return True
    n = G.ring.nvars
    pure = set()
    for exps in G.leading_monomials:
        used = [i for i, e in enumerate(exps) if e]
        if len(used) == 1:
            pure.add(used[0])
    # the zero ideal in zero variables is the single point of affine 0-space
    return len(pure) == n


def contains_irrelevant_power(G: GroebnerBasis, n: int | None = None) -> bool:
    """Every variable has a pure power among the leading monomials.

    For a homogeneous ideal this means its projective zero set is empty.
    """
    n = G.ring.nvars if n is None else n
    if G.contains_one:
        return True
    if n != G.ring.nvars:
        raise ValueError("variable count does not match the ring")
    return is_zero_dimensional(G)


def standard_monomials(G: GroebnerBasis) -> list[int]:
    """Packed keys of the standard monomials, in increasing order."""
    if not is_zero_dimensional(G):
        raise NotZeroDimensional("ideal is not zero-dimensional")
    if G.contains_one:
        return []
    R = G.ring
    codec = R.codec
    lms = G.leading_keys
    gen_keys = [codec.key([int(i == j) for j in range(R.nvars)]) for i in range(R.nvars)]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for gk in gen_keys:
                k = m + gk
                if k in seen:
                    continue
                if any(codec.divides(lm, k) for lm in lms):
                    continue
                seen.add(k)
                nxt.append(k)
        frontier = nxt
    return sorted(seen)


def quotient_dimension(G: GroebnerBasis) -> int:
    return len(standard_monomials(G))


def multiplication_matrix(G: GroebnerBasis, g: MultiPoly, basis: Sequence[int] | None = None) -> list[list]:
    """Matrix of ``h -> normal_form(g*h)`` on the standard monomials.

    Column ``j`` holds the coordinates of ``g * basis[j]``; entries are field
    payloads.
    """
    R = G.ring
    F = R.field
    basis = list(standard_monomials(G) if basis is None else basis)
    pos = {k: i for i, k in enumerate(basis)}
    d = len(basis)
    M = [[F.zero] * d for _ in range(d)]
    for j, m in enumerate(basis):
        prod = g * MultiPoly(R, {m: F.one})
        for k, c in G.reduce(prod).terms.items():
            M[pos[k]][j] = c
    return M


def _variable_matrices_modp(G: GroebnerBasis, basis: list[int]) -> list[np.ndarray]:
    R = G.ring
    p = R.field.p
    mats = []
    for i in range(R.nvars):
        M = multiplication_matrix(G, R.gen(i), basis)
        mats.append(np.array(M, dtype=np.int64) % p)
    return mats


def _krylov_minpoly_modp(M: np.ndarray, v: np.ndarray, p: int) -> list[int]:
    """Monic minimal polynomial of ``M`` relative to ``v`` over GF(p), low first."""
    d = M.shape[0]
    rows: list[np.ndarray] = []  # reduced vectors, each with a pivot
    pivots: list[int] = []
    combos: list[np.ndarray] = []  # expresses row in terms of M^k v
    w = v.copy()
    for k in range(d + 1):
        vec = w.copy()
        combo = np.zeros(d + 1, dtype=np.int64)
        combo[k] = 1
        for r, pc, cb in zip(rows, pivots, combos):
            c = int(vec[pc])
            if c:
                vec = (vec - c * r) % p
                combo = (combo - c * cb) % p
        nz = np.flatnonzero(vec)
        if nz.size == 0:
            coeffs = [int(x) for x in combo[: k + 1]]
            inv = pow(coeffs[-1], -1, p)
            return [c * inv % p for c in coeffs]
        pc = int(nz[0])
        inv = pow(int(vec[pc]), -1, p)
        rows.append(vec * inv % p)
        combos.append(combo * inv % p)
        pivots.append(pc)
        w = (M @ w) % p
    raise AssertionError("Krylov sequence did not terminate")


def _krylov_minpoly_generic(F: Field, M: list[list], v: list) -> list:
    d = len(M)
    rows: list[list] = []
    pivots: list[int] = []
    combos: list[list] = []
    w = list(v)
    for k in range(d + 1):
        vec = list(w)
        combo = [F.zero] * (d + 1)
        combo[k] = F.one
        for r, pc, cb in zip(rows, pivots, combos):
            c = vec[pc]
            if not F.is_zero(c):
                vec = [F.sub(a, F.mul(c, b)) for a, b in zip(vec, r)]
                combo = [F.sub(a, F.mul(c, b)) for a, b in zip(combo, cb)]
        pc = next((i for i, x in enumerate(vec) if not F.is_zero(x)), None)
        if pc is None:
            coeffs = combo[: k + 1]
            inv = F.inv(coeffs[-1])
            return [F.mul(c, inv) for c in coeffs]
        inv = F.inv(vec[pc])
        rows.append([F.mul(x, inv) for x in vec])
        combos.append([F.mul(x, inv) for x in combo])
        pivots.append(pc)
        w = [
            _dot(F, M[i], w) for i in range(d)
        ]
    raise AssertionError("Krylov sequence did not terminate")


def _dot(F: Field, row, w):
    acc = F.zero
    for a, b in zip(row, w):
        if not F.is_zero(a) and not F.is_zero(b):
            acc = F.add(acc, F.mul(a, b))
    return acc


def minimal_polynomial(G: GroebnerBasis, g: MultiPoly) -> list:
    """Minimal polynomial of ``g`` in the quotient ring (dense, low first)."""
    basis = standard_monomials(G)
    F = G.ring.field
    if not basis:
        return [F.one]
    one = basis.index(0)
    M = multiplication_matrix(G, g, basis)
    if isinstance(F, PrimeField):
        v = np.zeros(len(basis), dtype=np.int64)
        v[one] = 1
        return _krylov_minpoly_modp(np.array(M, dtype=np.int64), v, F.p)
    v = [F.zero] * len(basis)
    v[one] = F.one
    return _krylov_minpoly_generic(F, M, v)


def _univariate_poly(coeffs: Sequence, F: Field) -> MultiPoly:
    R = PolyRing(F, ("u",))
    return R.from_terms(((i,), c) for i, c in enumerate(coeffs) if not F.is_zero(c))


def distinct_point_count(
    I: Ideal | GroebnerBasis,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> ZeroDimSolution:
    """Number of distinct points of a zero-dimensional ideal over GF(p).

    Each trial draws a random linear form and takes the squarefree degree of
    its minimal polynomial in the quotient ring.  A non-separating form can
    only merge points, so the maximum over trials is reported.

    When ``p`` is small next to the quotient dimension, every trial may miss
    a separating form.  In that case the count is taken from the radical
    instead (see ``radical_point_count``), which must dominate the trials.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    G = I if isinstance(I, GroebnerBasis) else buchberger(I)
    R = G.ring
    F = R.field
    if not isinstance(F, PrimeField):
        raise ValueError("distinct_point_count works over a prime field")
    if not is_zero_dimensional(G):
        raise NotZeroDimensional("ideal is not zero-dimensional")
    basis = standard_monomials(G)
    d = len(basis)
    if d == 0:
        return ZeroDimSolution(0, 0, _univariate_poly([1], F), trial_counts=[0] * trials)
    p = F.p
    mats = _variable_matrices_modp(G, basis)
    v = np.zeros(d, dtype=np.int64)
    v[basis.index(0)] = 1
    rng = random.Random(seed)
    best = -1
    best_poly: list[int] = [1]
    counts = []
    for _ in range(trials):
        cs = [rng.randrange(1, p) for _ in range(R.nvars)]
        M = np.zeros((d, d), dtype=np.int64)
        for c, Mi in zip(cs, mats):
            M = (M + c * Mi) % p
        mp = _krylov_minpoly_modp(M, v, p)
        n = uv.squarefree_degree(F, mp)
        counts.append(n)
        if n > best:
            best, best_poly = n, mp
    sol = ZeroDimSolution(d, best, _univariate_poly(best_poly, F), trial_counts=counts)
    # a random form fails to split a given pair of points with probability <= 1/(p-1)
    miss = d * (d - 1) / (2 * (p - 1))
    if best < d and (miss >= 1 or miss ** trials > SEPARATION_RISK):
        exact = radical_point_count(G)
        if best > exact:
            raise AssertionError(f"separating forms found {best} points but the radical has {exact}")
        sol.distinct_count, sol.method = exact, "radical"
    return sol


def radical_point_count(G: GroebnerBasis) -> int:
    """Distinct points as the quotient dimension of the radical.

    Over a perfect field, adding the squarefree part of each variable's
    minimal polynomial to a zero-dimensional ideal yields its radical.
    """
    R = G.ring
    F = R.field
    if not is_zero_dimensional(G):
        raise NotZeroDimensional("ideal is not zero-dimensional")
    if G.contains_one:
        return 0
    extra = []
    for i in range(R.nvars):
        sq = uv.squarefree_part(F, minimal_polynomial(G, R.gen(i)))
        x = R.gen(i)
        extra.append(sum((x ** e * R.const(c) for e, c in enumerate(sq) if not F.is_zero(c)), R.zero))
    return quotient_dimension(buchberger(Ideal(list(G.polys) + extra, R)))


def _roots_in_field(F: Field, mp: list) -> list:
    if isinstance(F, PrimeField):
        return uv.roots_in_prime_field(F, mp)
    if F.kind == "rationals":
        return uv.rational_roots([Fraction(c) for c in mp])
    raise ValueError(f"root extraction over {F!r} is not supported")


def rational_points_zero_dim(I: Ideal | GroebnerBasis, cap: int = DEFAULT_RATIONAL_CAP) -> list[tuple]:
    """All points of a zero-dimensional ideal with coordinates in the base field.

    Works over QQ (rational-root theorem) and over prime fields.  Candidate
    coordinates come from each variable's minimal polynomial; every returned
    tuple is verified by substitution into the generators.
    """
    G = I if isinstance(I, GroebnerBasis) else buchberger(I)
    gens = list(I.gens) if isinstance(I, Ideal) else list(G.polys)
    R = G.ring
    F = R.field
    if not is_zero_dimensional(G):
        raise NotZeroDimensional("ideal is not zero-dimensional")
    if G.contains_one:
        return []
    basis = standard_monomials(G)
    if len(basis) > cap:
        raise PointCapExceeded(f"quotient dimension {len(basis)} exceeds cap {cap}")
    candidates = []
    for i in range(R.nvars):
        roots = _roots_in_field(F, minimal_polynomial(G, R.gen(i)))
        if not roots:
            return []
        candidates.append(sorted(roots))
    points: list[tuple] = []

    def extend(prefix: list, i: int) -> None:
        if i == R.nvars:
            if all(F.is_zero(g.evaluate(prefix)) for g in gens):
                points.append(tuple(prefix))
            return
        for r in candidates[i]:
            extend(prefix + [r], i + 1)

    total = 1
    for c in candidates:
        total *= len(c)
    if total <= 20000:
        extend([], 0)
    else:
        points = _split_points(G, gens, candidates)
    return sorted(points)


def _split_points(G: GroebnerBasis, gens: list[MultiPoly], candidates: list[list]) -> list[tuple]:
    """Fix coordinates one at a time, recomputing the basis after each choice."""
    R = G.ring
    F = R.field
    out = []

    def rec(ideal_gens: list[MultiPoly], prefix: list) -> None:
        i = len(prefix)
        if i == R.nvars:
            if all(F.is_zero(g.evaluate(prefix)) for g in gens):
                out.append(tuple(prefix))
            return
        for r in candidates[i]:
            H = buchberger(Ideal(ideal_gens + [R.gen(i) - R.const(r)], R))
            if not H.contains_one:
                rec(list(H.polys), prefix + [r])

    rec(list(G.polys), [])
    return out
