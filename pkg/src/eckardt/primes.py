"""Prime selection, reduction maps and multi-prime consensus."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Sequence

from .algebra import univariate as uv
from .algebra.fields import ExtensionField, Field, FieldError, PrimeField, is_prime
from .algebra.poly import MultiPoly, PolyRing

DEFAULT_PRIMES = (32003, 31013, 30011)


def primes_below(start: int, count: int, residue: tuple[int, int] | None = None, exclude: Sequence[int] = ()) -> list[int]:
    """The ``count`` largest primes below ``start``, optionally ``= r mod m``."""
    out = []
    n = start - 1
    while len(out) < count and n > 3:
        if is_prime(n) and n not in exclude and (residue is None or n % residue[1] == residue[0]):
            out.append(n)
        n -= 1
    return out


def escalation_primes(used: Sequence[int], count: int = 3) -> list[int]:
    return primes_below(min(used), count, exclude=used)


def splitting_primes(count: int = 3) -> list[int]:
    """Primes ``= 1 mod 3``: cube roots of unity (and of -1) exist in GF(p)."""
    return primes_below(32003, count, residue=(1, 3))


def validate_primes(primes: Sequence[int]) -> tuple[int, ...]:
    primes = tuple(int(p) for p in primes)
    if not primes:
        raise ValueError("need at least one prime")
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be pairwise distinct")
    for p in primes:
        if p <= 3 or not is_prime(p):
            raise ValueError(f"{p} is not a prime greater than 3")
    return primes


def reduction_map(F: Field, p: int) -> Callable[[object], int]:
    """Ring map from ``F`` into GF(p).

    For QQ this is the usual reduction.  For an extension ``QQ[t]/(m)`` the
    generator goes to the smallest root of ``m`` modulo ``p``, which must
    exist; the choice is fixed so different points map consistently.
    """
    Fp = PrimeField(p)
    if F.kind == "rationals":
        return Fp.from_fraction
    if isinstance(F, PrimeField):
        if F.p != p:
            raise FieldError(f"cannot map GF({F.p}) into GF({p})")
        return lambda x: x
    if isinstance(F, ExtensionField) and F.base.kind == "rationals":
        mod = [Fp.from_fraction(c) for c in F.modulus]
        roots = uv.roots_in_prime_field(Fp, mod)
        if not roots:
            raise FieldError(f"{F!r} does not embed into GF({p})")
        r = min(roots)

        def to_p(x):
            acc = 0
            for c in reversed(x):
                acc = (acc * r + Fp.from_fraction(c)) % p
            return acc

        return to_p
    raise FieldError(f"no reduction map from {F!r} to GF({p})")


def reduce_poly(f: MultiPoly, p: int) -> MultiPoly:
    """Image of ``f`` under :func:`reduction_map`; fails if a term vanishes."""
    to_p = reduction_map(f.field, p)
    R = PolyRing(PrimeField(p), f.ring.names, f.ring.order)
    g = f.map_coefficients(to_p, R)
    if len(g) != len(f):
        raise FieldError(f"bad prime {p}: coefficients vanish modulo {p}")
    return g


def rational_reconstruct(a: int, p: int) -> Fraction | None:
    """Smallest-height ``n/d = a mod p`` with ``|n|, d <= sqrt(p/2)``."""
    return uv._rational_reconstruct(a, p)


@dataclass
class Consensus:
    """Agreement of one quantity across primes."""

    value: Hashable | None
    per_prime: dict[int, Hashable]
    unanimous: bool
    escalated: bool = False
    outliers: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.value is not None


class NoConsensusError(RuntimeError):
    def __init__(self, what: str, per_prime: dict) -> None:
        super().__init__(f"no consensus for {what}: {per_prime}")
        self.what = what
        self.per_prime = per_prime


def consensus(
    compute: Callable[[int], Hashable],
    primes: Sequence[int],
    escalate: int = 3,
) -> Consensus:
    """Evaluate ``compute`` at each prime and require agreement.

    When the primes disagree, ``escalate`` further primes are tried and a
    strict majority of the good primes, at least two of them, must agree.
    Primes raising ``ValueError`` (bad reduction) are skipped and replaced
    by escalation primes.
    """
    primes = validate_primes(primes)
    per: dict[int, Hashable] = {}
    bad: list[int] = []
    for p in primes:
        try:
            per[p] = compute(p)
        except ValueError:
            bad.append(p)
    values = set(per.values())
    if len(values) == 1 and not bad:
        v = next(iter(values))
        return Consensus(v, per, True)
    for p in escalation_primes(list(primes), escalate + len(bad)):
        try:
            per[p] = compute(p)
        except ValueError:
            bad.append(p)
    counts = Counter(per.values())
    if counts:
        v, n = counts.most_common(1)[0]
        if 2 * n > len(per) and n >= 2:
            outliers = sorted(q for q, w in per.items() if w != v) + sorted(bad)
            return Consensus(v, per, False, True, outliers)
    return Consensus(None, per, False, True, sorted(bad))
