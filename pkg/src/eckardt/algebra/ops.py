"""Polynomial operations used throughout the pipeline."""

from __future__ import annotations

from typing import Sequence

from . import linalg
from . import univariate as uv
from .fields import Field
from .poly import MultiPoly, PolyRing, _is_payload, reduce_mod_prime  # noqa: F401  (re-export)


def poly_eval(f: MultiPoly, point: Sequence):
    return f.evaluate(point)


def poly_diff(f: MultiPoly, var: int) -> MultiPoly:
    return f.diff(var)


def linear_substitute(f: MultiPoly, T: Sequence[Sequence]) -> MultiPoly:
    """``f(T x)``: variable ``x_i`` is replaced by ``sum_j T[i][j] x_j``.

    ``T`` holds payloads of ``f``'s field (ints/Fractions are converted) and
    must be invertible.
    """
    R = f.ring
    F = R.field
    n = R.nvars
    if len(T) != n or any(len(row) != n for row in T):
        raise ValueError(f"substitution matrix must be {n}x{n}")
    M = [[x if _is_payload(F, x) else F.convert(x) for x in row] for row in T]
    if F.is_zero(linalg.det(F, M)):
        raise ZeroDivisionError("singular substitution matrix")
    images = []
    for i in range(n):
        images.append(R.from_terms(
            ([1 if k == j else 0 for k in range(n)], M[i][j]) for j in range(n) if not F.is_zero(M[i][j])
        ))
    return f.compose(images, R)


def restrict_line_expansion(f: MultiPoly, v0: Sequence, v1: Sequence, target: PolyRing | None = None) -> list[MultiPoly]:
    """Coefficients of ``t0^3, t0^2 t1, t0 t1^2, t1^3`` in ``f(t0 v0 + t1 v1)``.

    ``v0``/``v1`` entries are polynomials in ``target`` (the line's
    coordinate ring) or scalars.  Returned list is ordered by descending
    power of ``t0``: ``[phi30, phi21, phi12, phi03]`` for a cubic.
    """
    if not f.is_homogeneous() or f.is_zero():
        raise ValueError("restrict_line_expansion needs a nonzero homogeneous form")
    d = f.total_degree()
    if target is None:
        target = next((x.ring for x in list(v0) + list(v1) if isinstance(x, MultiPoly)), None)
    if target is None:
        target = PolyRing(f.field, ())
    ext = PolyRing(target.field, target.names + ("_t0", "_t1"), target.order)
    n = target.nvars
    emb = list(range(n))
    t0, t1 = ext.gen(n), ext.gen(n + 1)

    def lift(x):
        if isinstance(x, MultiPoly):
            return x.change_ring(ext, emb)
        return ext.const(x)

    images = [lift(a) * t0 + lift(b) * t1 for a, b in zip(v0, v1)]
    g = f.compose(images, ext)
    parts: list[list] = [[] for _ in range(d + 1)]
    for exps, c in g.items():
        j = exps[n + 1]
        parts[j].append((exps[:n], c))
    return [target.from_terms(parts[j]) for j in range(d + 1)]


def univ_squarefree_degree(u: MultiPoly) -> int:
    """Distinct-root count of a univariate polynomial (one-variable ring)."""
    if u.ring.nvars != 1:
        if len(u.variables()) > 1:
            raise ValueError("univ_squarefree_degree needs a univariate polynomial")
    if u.is_zero():
        raise ValueError("squarefree degree of the zero polynomial")
    return uv.squarefree_degree(u.field, to_dense(u))


def to_dense(u: MultiPoly) -> list:
    F: Field = u.field
    used = u.variables()
    var = next(iter(used)) if used else 0
    deg = max((e[var] for e, _ in u.items()), default=0) if u.ring.nvars else 0
    out = [F.zero] * (deg + 1)
    for exps, c in u.items():
        out[exps[var] if u.ring.nvars else 0] = c
    return uv.normalize(F, out)


def from_dense(ring: PolyRing, coeffs: Sequence, var: int = 0) -> MultiPoly:
    n = ring.nvars
    return ring.from_terms(
        ([i if k == var else 0 for k in range(n)], c) for i, c in enumerate(coeffs) if not ring.field.is_zero(c)
    )
