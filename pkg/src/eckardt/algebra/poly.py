"""Sparse multivariate polynomials over an exact field.

Terms live in a dict ``{packed monomial: coefficient payload}``; the packed
monomial compares like the ring's monomial order (see
:mod:`eckardt.algebra.monomials`).  ``MultiPoly`` values are treated as
immutable once built.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .fields import QQ, Field, PrimeField
from .monomials import GREVLEX, MonomialOrder, codec_for


class PolyRing:
    """``field[names]`` under a monomial order."""

    def __init__(self, field: Field, names: Sequence[str], order: MonomialOrder = GREVLEX) -> None:
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.field = field
        self.names = names
        self.order = order
        self.nvars = len(names)
        self.codec = codec_for(order, self.nvars)
        self._index = {n: i for i, n in enumerate(names)}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((self.field, self.names, self.order))

    def __repr__(self) -> str:
        return f"{self.field!r}[{','.join(self.names)}; {self.order}]"

    def index(self, name: str) -> int:
        return self._index[name]

    @property
    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    @property
    def one(self) -> "MultiPoly":
        return self.const(1)

    def const(self, c) -> "MultiPoly":
        c = self.field.convert(c) if not _is_payload(self.field, c) else c
        if self.field.is_zero(c):
            return self.zero
        return MultiPoly(self, {0: c})

    def gen(self, i: int) -> "MultiPoly":
        exps = [0] * self.nvars
        exps[i] = 1
        return MultiPoly(self, {self.codec.key(exps): self.field.one})

    @property
    def gens(self) -> tuple["MultiPoly", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff=1) -> "MultiPoly":
        return self.from_terms([(tuple(exps), coeff)])

    def from_terms(self, terms: Iterable[tuple[Sequence[int], object]]) -> "MultiPoly":
        F = self.field
        out: dict[int, object] = {}
        for exps, c in terms:
            if len(exps) != self.nvars:
                raise ValueError("exponent vector has wrong length")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = c if _is_payload(F, c) else F.convert(c)
            k = self.codec.key(exps)
            if k in out:
                c = F.add(out[k], c)
            if F.is_zero(c):
                out.pop(k, None)
            else:
                out[k] = c
        return MultiPoly(self, out)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.field, self.names, order)

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(field, self.names, self.order)


def _is_payload(F: Field, c) -> bool:
    if isinstance(F, PrimeField):
        return isinstance(c, int) and not isinstance(c, bool) and 0 <= c < F.p
    if F is QQ or F.kind == "rationals":
        return isinstance(c, Fraction)
    return isinstance(c, tuple)


class MultiPoly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict) -> None:
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- structure -----------------------------------------------------
    @property
    def field(self) -> Field:
        return self.ring.field

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_keys(self) -> list[int]:
        return sorted(self.terms, reverse=True)

    def items(self) -> list[tuple[tuple[int, ...], object]]:
        """``(exponents, coefficient)`` pairs, descending in the ring order."""
        ex = self.ring.codec.exps
        return [(ex(k), self.terms[k]) for k in self.sorted_keys()]

    def leading_key(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms)

    def leading_monomial(self) -> tuple[int, ...]:
        return self.ring.codec.exps(self.leading_key())

    def leading_coefficient(self):
        return self.terms[self.leading_key()]

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(self.ring.codec.key(exps), self.field.zero)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        deg = self.ring.codec.degree
        return max(deg(k) for k in self.terms)

    def degree_in(self, i: int) -> int:
        ex = self.ring.codec.exps
        return max((ex(k)[i] for k in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        deg = self.ring.codec.degree
        return len({deg(k) for k in self.terms}) <= 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self):
        return self.terms.get(0, self.field.zero)

    def variables(self) -> set[int]:
        ex = self.ring.codec.exps
        used: set[int] = set()
        for k in self.terms:
            used.update(i for i, e in enumerate(ex(k)) if e)
        return used

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.const(other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        F = self.field
        out = dict(self.terms)
        for k, c in other.terms.items():
            if k in out:
                v = F.add(out[k], c)
                if F.is_zero(v):
                    del out[k]
                else:
                    out[k] = v
            else:
                out[k] = c
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        F = self.field
        return MultiPoly(self.ring, {k: F.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(self.field.convert(other) if not _is_payload(self.field, other) else other)
        other = self._coerce(other)
        F = self.field
        out: dict[int, object] = {}
        if isinstance(F, PrimeField):
            p = F.p
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    k = k1 + k2
                    out[k] = (out.get(k, 0) + c1 * c2) % p
            return MultiPoly(self.ring, {k: c for k, c in out.items() if c})
        zero = F.zero
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                out[k] = F.add(out.get(k, zero), F.mul(c1, c2))
        return MultiPoly(self.ring, {k: c for k, c in out.items() if not F.is_zero(c)})

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        F = self.field
        if F.is_zero(c):
            return self.ring.zero
        return MultiPoly(self.ring, {k: F.mul(v, c) for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient()))

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except Exception:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution --------------------------------------
    def diff(self, i: int) -> "MultiPoly":
        """Formal partial derivative with respect to variable ``i``."""
        if not 0 <= i < self.ring.nvars:
            raise IndexError(f"variable index {i} out of range")
        F = self.field
        R = self.ring
        out = []
        for exps, c in self.items():
            e = exps[i]
            if e:
                ne = list(exps)
                ne[i] -= 1
                out.append((ne, F.mul(F.from_int(e), c)))
        return R.from_terms(out)

    def evaluate(self, point: Sequence):
        """Exact value at ``point`` (payloads of this field, or ints/Fractions)."""
        F = self.field
        R = self.ring
        if len(point) != R.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {R.nvars} variables")
        pt = [x if _is_payload(F, x) else F.convert(x) for x in point]
        powers: list[dict[int, object]] = [{0: F.one, 1: x} for x in pt]

        def pw(i: int, e: int):
            cache = powers[i]
            v = cache.get(e)
            if v is None:
                v = cache[e] = F.pow(pt[i], e)
            return v

        total = F.zero
        ex = R.codec.exps
        for k, c in self.terms.items():
            term = c
            for i, e in enumerate(ex(k)):
                if e:
                    term = F.mul(term, pw(i, e))
            total = F.add(total, term)
        return total

    def compose(self, images: Sequence["MultiPoly"], target: PolyRing | None = None) -> "MultiPoly":
        """Substitute variable ``i`` by ``images[i]`` (all in ``target``)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        if target is None:
            target = images[0].ring if images else self.ring
        images = [im if isinstance(im, MultiPoly) else target.const(im) for im in images]
        cache: list[dict[int, MultiPoly]] = [{0: target.one, 1: im} for im in images]

        def pw(i: int, e: int) -> MultiPoly:
            c = cache[i]
            if e not in c:
                half = pw(i, e // 2)
                v = half * half
                if e % 2:
                    v = v * images[i]
                c[e] = v
            return c[e]

        result = target.zero
        for exps, c in self.items():
            term = target.const(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * pw(i, e)
            result = result + term
        return result

    def change_ring(self, target: PolyRing, var_map: Sequence[int] | None = None) -> "MultiPoly":
        """Re-express in ``target``; variable ``i`` goes to ``var_map[i]``.

        Without ``var_map`` variables are matched by name.  Coefficients are
        converted into the target field when the fields differ.
        """
        if var_map is None:
            var_map = [target.index(n) for n in self.ring.names]
        F, G = self.field, target.field
        out = []
        for exps, c in self.items():
            ne = [0] * target.nvars
            for i, e in enumerate(exps):
                if e:
                    ne[var_map[i]] += e
            out.append((ne, c if F == G else _convert_coeff(F, G, c)))
        return target.from_terms(out)

    def map_coefficients(self, fn, target: PolyRing) -> "MultiPoly":
        return target.from_terms((exps, fn(c)) for exps, c in self.items())

    # -- printing ------------------------------------------------------
    def to_str(self) -> str:
        return format_poly(self)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({format_poly(self)!r})"


def _convert_coeff(F: Field, G: Field, c):
    if F.kind == "rationals":
        return G.from_fraction(c)
    if isinstance(F, PrimeField) and isinstance(G, PrimeField):
        if F.p != G.p:
            raise ValueError("cannot move coefficients between prime fields")
        return c
    if getattr(G, "base", None) == F:
        return G.embed_base(c)
    raise ValueError(f"no canonical embedding {F!r} -> {G!r}")


def format_poly(f: MultiPoly) -> str:
    """Canonical text: grevlex-descending terms, explicit ``*`` and ``^``."""
    R = f.ring
    F = f.field
    if not f.terms:
        return "0"
    ex = R.codec.exps
    grev = codec_for(GREVLEX, R.nvars)
    keys = sorted(f.terms, key=lambda k: grev.key(ex(k)), reverse=True)
    pieces: list[str] = []
    for k in keys:
        exps = ex(k)
        c = f.terms[k]
        mon = "*".join(
            (R.names[i] if e == 1 else f"{R.names[i]}^{e}") for i, e in enumerate(exps) if e
        )
        cs = _coeff_str(F, c)
        negative = cs.startswith("-")
        if negative:
            cs = cs[1:]
        if mon:
            body = mon if cs == "1" else f"{cs}*{mon}"
        else:
            body = cs
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


def _coeff_str(F: Field, c) -> str:
    return F.to_str(c)


def reduce_mod_prime(f: MultiPoly, p: int, ring: PolyRing | None = None) -> tuple[MultiPoly, list[tuple[int, ...]]]:
    """Reduce a QQ-polynomial modulo ``p``.

    Returns the reduced polynomial and the exponent vectors of terms whose
    coefficient vanished mod ``p``.  Raises ``ZeroDivisionError`` when a
    denominator is divisible by ``p``.
    """
    if f.field.kind != "rationals":
        raise ValueError("reduce_mod_prime expects a polynomial over QQ")
    Fp = PrimeField(p)
    target = ring or PolyRing(Fp, f.ring.names, f.ring.order)
    if target.field != Fp:
        raise ValueError("target ring field does not match p")
    out = []
    dropped = []
    for exps, c in f.items():
        if c.denominator % p == 0:
            raise ZeroDivisionError(f"coefficient {c} has denominator divisible by {p}")
        v = Fp.from_fraction(c)
        if v == 0:
            dropped.append(exps)
        else:
            out.append((exps, v))
    return target.from_terms(out), dropped
