"""Elimination, ideal quotients, saturation and intersection."""

from __future__ import annotations

from ..algebra.monomials import GREVLEX, block_order
from ..algebra.poly import MultiPoly, PolyRing
from .basis import DEFAULT_MAX_BASIS, DEFAULT_MAX_DEGREE, GroebnerBasis, Ideal, buchberger

TAG = "_tag"


def _gb(I: Ideal, caps: dict) -> GroebnerBasis:
    return buchberger(I, **caps)


def eliminate(I: Ideal, k: int, **caps) -> Ideal:
    """``I`` intersected with the subring of all but the first ``k`` variables.

    The result lives in a grevlex ring on the remaining variables.
    """
    R = I.ring
    if not 0 < k <= R.nvars:
        raise ValueError(f"cannot eliminate {k} of {R.nvars} variables")
    Rb = PolyRing(R.field, R.names, block_order(k))
    G = _gb(I.with_ring(Rb) if R != Rb else I, caps)
    rest = PolyRing(R.field, R.names[k:], GREVLEX)
    keep = [g for g in G.polys if not any(e for e in g.leading_monomial()[:k])]
    # block order: leading monomial free of the first k variables means the
    # whole polynomial is
    return Ideal([g.change_ring(rest, [0] * k + list(range(R.nvars - k))) for g in keep], rest)


def _tagged_ring(R: PolyRing) -> PolyRing:
    if TAG in R.names:
        raise ValueError(f"variable name {TAG!r} is reserved")
    return PolyRing(R.field, (TAG,) + R.names, block_order(1))


def _lift(f: MultiPoly, T: PolyRing) -> MultiPoly:
    return f.change_ring(T, [i + 1 for i in range(f.ring.nvars)])


def intersection(I: Ideal, J: Ideal, **caps) -> Ideal:
    """``I ∩ J`` via ``t*I + (1-t)*J`` with ``t`` eliminated."""
    R = I.ring
    if J.ring != R:
        raise ValueError("ideals live in different rings")
    if not I.gens or not J.gens:
        return Ideal([], R)
    T = _tagged_ring(R)
    t = T.gen(0)
    gens = [t * _lift(f, T) for f in I.gens] + [(T.one - t) * _lift(g, T) for g in J.gens]
    out = eliminate(Ideal(gens, T), 1, **caps)
    return out.with_ring(R)


def exact_divide(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """``f / g`` when ``g`` divides ``f``; raises ``ValueError`` otherwise."""
    R = f.ring
    F = R.field
    codec = R.codec
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    lg = g.leading_key()
    inv = F.inv(g.terms[lg])
    q_terms: dict = {}
    r = f
    while r:
        lr = r.leading_key()
        if not codec.divides(lg, lr):
            raise ValueError("polynomial division is not exact")
        k = lr - lg
        c = F.mul(r.terms[lr], inv)
        q_terms[k] = c
        r = r - g * MultiPoly(R, {k: c})
    return MultiPoly(R, q_terms)


def ideal_quotient(I: Ideal, g: MultiPoly, **caps) -> Ideal:
    """``I : g = (I ∩ <g>) / g``."""
    if not g:
        raise ValueError("quotient by the zero polynomial")
    R = I.ring
    if not I.gens:
        return Ideal([], R)
    meet = intersection(I, Ideal([g], R), **caps)
    return Ideal([exact_divide(h, g) for h in meet.gens], R)


def ideal_quotient_by_ideal(I: Ideal, J: Ideal, **caps) -> Ideal:
    """``I : J`` as the intersection of ``I : g`` over the generators of ``J``.

    Generators already in ``I`` contribute the whole ring and are skipped.
    """
    if not J.gens:
        raise ValueError("quotient by the zero ideal")
    G = _gb(I, caps)
    out = None
    for g in J.gens:
        if G.contains(g):
            continue
        Q = ideal_quotient(I, g, **caps)
        out = Q if out is None else intersection(out, Q, **caps)
    return out if out is not None else Ideal([I.ring.one], I.ring)


def saturate(I: Ideal, J: Ideal | MultiPoly, max_rounds: int = 64, **caps) -> Ideal:
    """``I : J^infinity`` by repeated quotients until the reduced basis is stable.

    The returned ideal's generators are its reduced Groebner basis.
    """
    if isinstance(J, MultiPoly):
        J = Ideal([J], I.ring)
    if not J.gens:
        raise ValueError("saturation by the zero ideal")
    cur = _gb(I, caps)
    for _ in range(max_rounds):
        if cur.contains_one:
            break
        if len(J.gens) == 1:
            nxt = ideal_quotient(Ideal(cur.polys, I.ring), J.gens[0], **caps)
        else:
            nxt = ideal_quotient_by_ideal(Ideal(cur.polys, I.ring), J, **caps)
        H = _gb(nxt, caps)
        if H.same_ideal(cur):
            break
        cur = H
    else:
        raise RuntimeError(f"saturation did not stabilize within {max_rounds} rounds")
    return Ideal(cur.polys, I.ring)


def saturate_rabinowitsch(I: Ideal, g: MultiPoly, **caps) -> Ideal:
    """``I : g^infinity`` in one elimination: ``I + <1 - t*g>``, drop ``t``."""
    R = I.ring
    T = _tagged_ring(R)
    t = T.gen(0)
    gens = [_lift(f, T) for f in I.gens] + [T.one - t * _lift(g, T)]
    out = eliminate(Ideal(gens, T), 1, **caps)
    G = _gb(out.with_ring(R), caps)
    return Ideal(G.polys, R)


__all__ = [
    "DEFAULT_MAX_BASIS",
    "DEFAULT_MAX_DEGREE",
    "eliminate",
    "exact_divide",
    "ideal_quotient",
    "ideal_quotient_by_ideal",
    "intersection",
    "saturate",
    "saturate_rabinowitsch",
]
