"""Cubics containing a prescribed triple line, and random members without Eckardt points.

Every member of the family

    x0^2 x2 + x1^2 x3 + x0 q0(x2, x3, x4) + x1 q1(x2, x3, x4) + k x4^3

with ``k != 0`` and no ``x4^2`` term in ``q0`` or ``q1`` contains the line
``x2 = x3 = x4 = 0`` as a triple line with tangent plane ``x2 = x3 = 0``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..algebra.parser import poly_parse
from ..algebra.poly import MultiPoly
from ..primes import DEFAULT_PRIMES
from .eckardt import EckardtReport, eckardt_count
from .polar import smoothness_check
from .threefold import RING, CubicError, CubicThreefold

QUAD_MONOMIALS = ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))  # in x2, x3, x4
WITNESS_LINE = ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0))
MAX_ATTEMPTS = 100


class FamilyError(CubicError):
    pass


def _as_quadric(q: MultiPoly | str) -> MultiPoly:
    if isinstance(q, str):
        q = poly_parse(q, RING)
    elif q.ring != RING:
        q = q.change_ring(RING)
    if not q.is_zero() and (not q.is_homogeneous() or q.total_degree() != 2):
        raise FamilyError("q0 and q1 must be quadratic forms")
    if q.degree_in(0) > 0 or q.degree_in(1) > 0:
        raise FamilyError("q0 and q1 may only involve x2, x3, x4")
    return q


def generate_family(q0: MultiPoly | str, q1: MultiPoly | str, k, strict: bool = True) -> CubicThreefold:
    """Assemble the family member with data ``(q0, q1, k)``.

    With ``strict`` the ``x4^2`` coefficients of ``q0`` and ``q1`` must vanish
    and the witness line is checked to be a triple line.  ``strict=False``
    only assembles the form.
    """
    k = Fraction(k)
    if k == 0:
        raise FamilyError("k must be nonzero")
    q0, q1 = _as_quadric(q0), _as_quadric(q1)
    x0, x1, x2, x3, x4 = RING.gens
    if strict:
        for name, q in (("q0", q0), ("q1", q1)):
            if q.coefficient((0, 0, 0, 0, 2)):
                raise FamilyError(f"{name} has an x4^2 term; the family requires it to vanish")
    f = x0 ** 2 * x2 + x1 ** 2 * x3 + x0 * q0 + x1 * q1 + (x4 ** 3).scale(k)
    X = CubicThreefold(f)
    if strict:
        from ..fano.lines import line_type

        kind = line_type(X, *WITNESS_LINE)
        if kind != "triple":
            raise AssertionError(f"witness line is {kind}, expected a triple line")
    return X


@dataclass
class FamilySample:
    cubic: CubicThreefold
    q0: MultiPoly
    q1: MultiPoly
    k: int
    eckardt: EckardtReport
    attempts: int
    seed: int


def _random_quadric(rng: random.Random, bound: int) -> MultiPoly:
    terms = []
    for m in QUAD_MONOMIALS:
        c = rng.randint(-bound, bound)
        if m == (0, 0, 2):
            c = 0
        terms.append(((0, 0) + m, c))
    return RING.from_terms(terms)


def sample_no_eckardt(
    seed: int,
    coeff_bound: int = 3,
    primes: Sequence[int] = DEFAULT_PRIMES,
    max_attempts: int = MAX_ATTEMPTS,
) -> FamilySample:
    """Deterministic search for a smooth family member without Eckardt points."""
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        q0 = _random_quadric(rng, coeff_bound)
        q1 = _random_quadric(rng, coeff_bound)
        k = rng.randint(1, coeff_bound)
        X = generate_family(q0, q1, k)
        if not smoothness_check(X, primes).smooth:
            continue
        report = eckardt_count(X, primes)
        if report.total == 0:
            return FamilySample(X, q0, q1, k, report, attempt, seed)
    raise FamilyError(f"no smooth member without Eckardt points after {max_attempts} attempts (seed {seed})")
