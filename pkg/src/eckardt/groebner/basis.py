"""Buchberger's algorithm with the Gebauer-Moeller criteria.

Polynomials are handled as raw ``{packed monomial: payload}`` dicts inside
the kernel.  Prime fields get a dedicated reduction loop on bare ints; every
other field goes through the generic field interface.
"""

from __future__ import annotations

import heapq
import logging
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..algebra.fields import Field, PrimeField
from ..algebra.monomials import MonomialCodec
from ..algebra.poly import MultiPoly, PolyRing

log = logging.getLogger(__name__)

DEFAULT_MAX_BASIS = 20000
DEFAULT_MAX_DEGREE = 60

# caps used when buchberger() is called without explicit ones
_CAPS: ContextVar[tuple[int, int]] = ContextVar("groebner_caps", default=(DEFAULT_MAX_BASIS, DEFAULT_MAX_DEGREE))


# when set, every basis produced is certified and its size recorded here
_AUDIT: ContextVar[list | None] = ContextVar("groebner_audit", default=None)


@contextmanager
def certify_all():
    """Certify every basis computed inside the block; yields the list of their sizes."""
    sizes: list[int] = []
    token = _AUDIT.set(sizes)
    try:
        yield sizes
    finally:
        _AUDIT.reset(token)


@contextmanager
def resource_caps(max_basis: int | None = None, max_degree: int | None = None):
    """Override the default basis-size and degree caps inside a ``with`` block."""
    cur_basis, cur_degree = _CAPS.get()
    token = _CAPS.set((max_basis or cur_basis, max_degree or cur_degree))
    try:
        yield
    finally:
        _CAPS.reset(token)


class GroebnerResourceError(RuntimeError):
    """A configured cap (basis size or degree) was exceeded."""

    def __init__(self, what: str, limit: int, value: int) -> None:
        super().__init__(f"{what} limit {limit} exceeded (reached {value})")
        self.what = what
        self.limit = limit
        self.value = value


class Ideal:
    """Finitely generated ideal; zero generators are dropped."""

    def __init__(self, gens: Iterable[MultiPoly], ring: PolyRing | None = None) -> None:
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("an empty ideal needs an explicit ring")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise ValueError(f"generator in {g.ring!r}, expected {ring!r}")
        seen: set = set()
        uniq = []
        for g in gens:
            if g and g not in seen:
                seen.add(g)
                uniq.append(g)
        self.ring = ring
        self.gens: tuple[MultiPoly, ...] = tuple(uniq)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.gens + other.gens, self.ring)

    def __len__(self) -> int:
        return len(self.gens)

    def __repr__(self) -> str:
        return f"Ideal({len(self.gens)} generators in {self.ring!r})"

    def with_ring(self, ring: PolyRing) -> "Ideal":
        """Same generators re-expressed in ``ring`` (variables matched by name)."""
        return Ideal([g.change_ring(ring) for g in self.gens], ring)


class _Reducers:
    """Monic polynomials available as reducers, with a divisor-lookup cache."""

    __slots__ = ("codec", "guard", "lm", "tails", "lm_ep", "cache")

    def __init__(self, codec: MonomialCodec) -> None:
        self.codec = codec
        self.guard = codec.guard
        self.lm: list[int] = []
        self.tails: list[list[tuple[int, object]]] = []
        self.lm_ep: list[int] = []
        self.cache: dict[int, int] = {}

    def add(self, terms: dict) -> int:
        keys = sorted(terms, reverse=True)
        self.lm.append(keys[0])
        self.tails.append([(k, terms[k]) for k in keys[1:]])
        self.lm_ep.append(self.codec.epack(keys[0]))
        return len(self.lm) - 1

    def find(self, k: int) -> int:
        v = self.cache.get(k)
        if v is not None and v >= 0:
            return v
        start = 0 if v is None else ~v
        g = self.guard
        e = self.codec.epack(k) + g
        lm_ep = self.lm_ep
        for i in range(start, len(lm_ep)):
            if (e - lm_ep[i]) & g == g:
                self.cache[k] = i
                return i
        self.cache[k] = ~len(lm_ep)
        return -1


def _reduce_modp(terms: dict, red: _Reducers, p: int, full: bool) -> dict:
    """Reduce ``terms`` (consumed) modulo the reducers over GF(p)."""
    heap = [-k for k in terms]
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    find = red.find
    lms, tails = red.lm, red.tails
    rem: dict[int, int] = {}
    while heap:
        k = -pop(heap)
        c = terms.pop(k, None)
        if c is None:
            continue
        idx = find(k)
        if idx < 0:
            rem[k] = c
            if not full:
                rem.update(terms)
                return rem
            continue
        shift = k - lms[idx]
        for gk, gc in tails[idx]:
            nk = gk + shift
            old = terms.get(nk)
            if old is None:
                terms[nk] = (-c * gc) % p
                push(heap, -nk)
            else:
                v = (old - c * gc) % p
                if v:
                    terms[nk] = v
                else:
                    del terms[nk]
    return rem


def _reduce_generic(terms: dict, red: _Reducers, F: Field, full: bool) -> dict:
    heap = [-k for k in terms]
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    find = red.find
    lms, tails = red.lm, red.tails
    rem: dict = {}
    while heap:
        k = -pop(heap)
        c = terms.pop(k, None)
        if c is None:
            continue
        idx = find(k)
        if idx < 0:
            rem[k] = c
            if not full:
                rem.update(terms)
                return rem
            continue
        shift = k - lms[idx]
        for gk, gc in tails[idx]:
            nk = gk + shift
            old = terms.get(nk)
            if old is None:
                terms[nk] = F.neg(F.mul(c, gc))
                push(heap, -nk)
            else:
                v = F.sub(old, F.mul(c, gc))
                if F.is_zero(v):
                    del terms[nk]
                else:
                    terms[nk] = v
    return rem


def _reduce(terms: dict, red: _Reducers, F: Field, full: bool = True) -> dict:
    if isinstance(F, PrimeField):
        return _reduce_modp(terms, red, F.p, full)
    return _reduce_generic(terms, red, F, full)


def _make_monic(terms: dict, F: Field) -> dict:
    lc = terms[max(terms)]
    if F.is_one(lc):
        return terms
    inv = F.inv(lc)
    if isinstance(F, PrimeField):
        p = F.p
        return {k: c * inv % p for k, c in terms.items()}
    return {k: F.mul(c, inv) for k, c in terms.items()}


@dataclass
class GroebnerStats:
    pairs_processed: int = 0
    zero_reductions: int = 0
    basis_peak: int = 0
    max_pair_degree: int = 0


@dataclass
class GroebnerBasis:
    """Reduced Groebner basis: monic, sorted by increasing leading monomial."""

    ring: PolyRing
    polys: tuple[MultiPoly, ...]
    stats: GroebnerStats = field(default_factory=GroebnerStats, compare=False)
    _reducers: _Reducers | None = field(default=None, repr=False, compare=False)

    @property
    def order(self):
        return self.ring.order

    @property
    def contains_one(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant() and bool(self.polys[0])

    @property
    def leading_keys(self) -> list[int]:
        return [g.leading_key() for g in self.polys]

    @property
    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.leading_monomial() for g in self.polys]

    @property
    def is_zero_dimensional(self) -> bool:
        from .zerodim import is_zero_dimensional

        return is_zero_dimensional(self)

    def reducers(self) -> _Reducers:
        if self._reducers is None:
            red = _Reducers(self.ring.codec)
            for g in self.polys:
                red.add(g.terms)
            self._reducers = red
        return self._reducers

    def reduce(self, f: MultiPoly) -> MultiPoly:
        if f.ring != self.ring:
            raise ValueError("polynomial and basis live in different rings")
        if not f or not self.polys:
            return f
        rem = _reduce(dict(f.terms), self.reducers(), self.ring.field, full=True)
        return MultiPoly(self.ring, rem)

    def contains(self, f: MultiPoly) -> bool:
        return not self.reduce(f)

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def same_ideal(self, other: "GroebnerBasis") -> bool:
        """Reduced bases are unique, so ideal equality is basis equality."""
        return self.ring == other.ring and set(self.polys) == set(other.polys)

    def to_text(self) -> list[str]:
        return [str(g) for g in self.polys]


def normal_form(f: MultiPoly, G: GroebnerBasis) -> MultiPoly:
    return G.reduce(f)


def buchberger(
    ideal: Ideal | Sequence[MultiPoly],
    max_basis: int | None = None,
    max_degree: int | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` in its ring's monomial order."""
    G = _buchberger(ideal, max_basis, max_degree)
    audit = _AUDIT.get()
    if audit is not None:
        if not certify(G):
            raise AssertionError(f"basis of {len(G.polys)} elements failed certification")
        audit.append(len(G.polys))
    return G


def _buchberger(ideal, max_basis, max_degree) -> GroebnerBasis:
    default_basis, default_degree = _CAPS.get()
    max_basis = max_basis or default_basis
    max_degree = max_degree or default_degree
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal)
    R = ideal.ring
    F = R.field
    codec = R.codec
    stats = GroebnerStats()
    if not ideal.gens:
        return GroebnerBasis(R, (), stats)

    red = _Reducers(codec)
    active: list[int] = []
    pairs: dict[tuple[int, int], int] = {}
    queue: list[tuple[int, int, int, int]] = []
    deg = codec.degree
    lcm = codec.lcm
    divides = codec.divides
    coprime = codec.coprime

    def one_basis() -> GroebnerBasis:
        return GroebnerBasis(R, (R.one,), stats)

    def update(h: int) -> None:
        lm_h = red.lm[h]
        lcms = {g: lcm(lm_h, red.lm[g]) for g in active}
        cand = list(active)
        keep: list[int] = []
        while cand:
            g1 = cand.pop()
            L1 = lcms[g1]
            if coprime(lm_h, red.lm[g1]) or not (
                any(divides(lcms[g2], L1) for g2 in cand) or any(divides(lcms[g2], L1) for g2 in keep)
            ):
                keep.append(g1)
        new_pairs = [g for g in keep if not coprime(lm_h, red.lm[g])]
        for (a, b), L in list(pairs.items()):
            if divides(lm_h, L) and lcm(red.lm[a], lm_h) != L and lcm(red.lm[b], lm_h) != L:
                del pairs[(a, b)]
        for g in new_pairs:
            L = lcms[g]
            key = (min(g, h), max(g, h))
            pairs[key] = L
            heapq.heappush(queue, (deg(L), L, key[0], key[1]))
        active[:] = [g for g in active if not divides(lm_h, red.lm[g])] + [h]

    def insert(terms: dict) -> bool:
        """Add a nonzero reduced polynomial; True when the ideal became (1)."""
        terms = _make_monic(terms, F)
        if max(terms) == 0:
            return True
        if deg(max(terms)) > max_degree:
            raise GroebnerResourceError("degree", max_degree, deg(max(terms)))
        h = red.add(terms)
        if len(red.lm) > max_basis:
            raise GroebnerResourceError("basis size", max_basis, len(red.lm))
        update(h)
        stats.basis_peak = max(stats.basis_peak, len(active))
        return False

    gens = sorted(ideal.gens, key=lambda g: (g.total_degree(), g.leading_key()))
    for g in gens:
        h = _reduce(dict(g.terms), red, F, full=True)
        if h and insert(h):
            return one_basis()

    while queue:
        d, L, i, j = heapq.heappop(queue)
        if pairs.get((i, j)) != L:
            continue
        del pairs[(i, j)]
        if d > max_degree:
            raise GroebnerResourceError("degree", max_degree, d)
        stats.pairs_processed += 1
        stats.max_pair_degree = max(stats.max_pair_degree, d)
        s = _spoly(red, i, j, L, F)
        h = _reduce(s, red, F, full=True)
        if not h:
            stats.zero_reductions += 1
            continue
        if insert(h):
            return one_basis()

    polys = _interreduce(R, red, active)
    log.debug("groebner: %d elements, %s", len(polys), stats)
    return GroebnerBasis(R, tuple(polys), stats)


def _spoly(red: _Reducers, i: int, j: int, L: int, F: Field) -> dict:
    si, sj = L - red.lm[i], L - red.lm[j]
    out = {k + si: c for k, c in red.tails[i]}
    if isinstance(F, PrimeField):
        p = F.p
        for k, c in red.tails[j]:
            nk = k + sj
            v = (out.get(nk, 0) - c) % p
            if v:
                out[nk] = v
            else:
                out.pop(nk, None)
        return out
    for k, c in red.tails[j]:
        nk = k + sj
        v = F.sub(out.get(nk, F.zero), c)
        if F.is_zero(v):
            out.pop(nk, None)
        else:
            out[nk] = v
    return out


def _interreduce(R: PolyRing, red: _Reducers, active: list[int]) -> list[MultiPoly]:
    F = R.field
    idx = sorted(active, key=lambda i: red.lm[i])
    out = []
    for i in idx:
        others = _Reducers(R.codec)
        for j in idx:
            if j != i:
                others.add({red.lm[j]: F.one, **dict(red.tails[j])})
        tail = _reduce(dict(red.tails[i]), others, F, full=True) if red.tails[i] else {}
        terms = {red.lm[i]: F.one}
        terms.update(tail)
        out.append(MultiPoly(R, terms))
    out.sort(key=lambda g: g.leading_key())
    return out


def spoly(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """S-polynomial of two nonzero polynomials (made monic first)."""
    R = f.ring
    red = _Reducers(R.codec)
    i = red.add(f.monic().terms)
    j = red.add(g.monic().terms)
    L = R.codec.lcm(red.lm[i], red.lm[j])
    return MultiPoly(R, _spoly(red, i, j, L, R.field))


def certify(G: GroebnerBasis) -> bool:
    """Check Buchberger's criterion: every S-polynomial reduces to zero.

    Pairs with coprime leading monomials are skipped (their S-polynomials
    always reduce to zero).  Also checks the basis is reduced and monic.
    """
    codec = G.ring.codec
    lms = G.leading_keys
    F = G.ring.field
    for g in G.polys:
        if not F.is_one(g.leading_coefficient()):
            return False
    for a in range(len(lms)):
        for b in range(len(lms)):
            if a != b and any(codec.divides(lms[a], k) for k in G.polys[b].terms):
                return False
    for a in range(len(lms)):
        for b in range(a + 1, len(lms)):
            if codec.coprime(lms[a], lms[b]):
                continue
            if G.reduce(spoly(G.polys[a], G.polys[b])):
                return False
    return True
