"""Dense univariate polynomials over a :class:`~eckardt.algebra.fields.Field`.

A polynomial is a list of field payloads, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt

from .fields import ExtensionField, Field, PrimeField, RationalField


def normalize(F: Field, a: list) -> list:
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def degree(a: list) -> int:
    return len(a) - 1


def add(F: Field, a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return normalize(F, out)


def sub(F: Field, a: list, b: list) -> list:
    return add(F, a, [F.neg(c) for c in b])


def scale(F: Field, a: list, c) -> list:
    return normalize(F, [F.mul(x, c) for x in a])


def mul(F: Field, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return normalize(F, out)


def divmod_poly(F: Field, a: list, b: list) -> tuple[list, list]:
    b = normalize(F, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = normalize(F, a)
    db = len(b) - 1
    if len(r) <= db:
        return [], r
    inv_lead = F.inv(b[-1])
    q = [F.zero] * (len(r) - db)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c = F.mul(r[-1], inv_lead)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, y))
        r = normalize(F, r)
    return normalize(F, q), r


def monic(F: Field, a: list) -> list:
    if not a:
        return []
    return scale(F, a, F.inv(a[-1]))


def gcd_poly(F: Field, a: list, b: list) -> list:
    a, b = normalize(F, a), normalize(F, b)
    while b:
        a, b = b, divmod_poly(F, a, b)[1]
    return monic(F, a)


def xgcd(F: Field, a: list, b: list) -> tuple[list, list, list]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` (``g`` not normalized to monic)."""
    r0, r1 = normalize(F, a), normalize(F, b)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = divmod_poly(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    return r0, s0, t0


def derivative(F: Field, a: list) -> list:
    return normalize(F, [F.mul(F.from_int(i), a[i]) for i in range(1, len(a))])


def powmod(F: Field, a: list, n: int, m: list) -> list:
    result = [F.one]
    base = divmod_poly(F, a, m)[1]
    while n:
        if n & 1:
            result = divmod_poly(F, mul(F, result, base), m)[1]
        base = divmod_poly(F, mul(F, base, base), m)[1]
        n >>= 1
    return result


def evaluate(F: Field, a: list, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def field_order(F: Field) -> int:
    if isinstance(F, PrimeField):
        return F.p
    if isinstance(F, ExtensionField) and isinstance(F.base, PrimeField):
        return F.base.p ** F.degree
    raise ValueError(f"{F!r} is not finite")


def _pth_root(F: Field, a: list) -> list:
    """Inverse of Frobenius on a polynomial whose derivative vanishes."""
    p = F.characteristic
    coeffs = a[::p]
    if isinstance(F, ExtensionField):
        e = F.base.p ** (F.degree - 1)
        coeffs = [F.pow(c, e) for c in coeffs]
    return normalize(F, coeffs)


def squarefree_degree(F: Field, a: list) -> int:
    """Number of distinct roots of ``a`` over the algebraic closure of ``F``."""
    a = normalize(F, a)
    if not a:
        raise ValueError("squarefree degree of the zero polynomial")
    if len(a) == 1:
        return 0
    da = derivative(F, a)
    if not da:
        return squarefree_degree(F, _pth_root(F, a))
    g = gcd_poly(F, a, da)
    w = divmod_poly(F, a, g)[0]
    count = degree(w)
    if F.characteristic == 0 or degree(g) == 0:
        return count
    # roots whose multiplicity is divisible by p survive in g only
    y = gcd_poly(F, g, w)
    while degree(y) > 0:
        g = divmod_poly(F, g, y)[0]
        y = gcd_poly(F, g, y)
    if degree(g) == 0:
        return count
    return count + squarefree_degree(F, g)


def squarefree_part(F: Field, a: list) -> list:
    """Monic product of the distinct irreducible factors of ``a`` (perfect fields)."""
    a = normalize(F, a)
    if not a:
        raise ValueError("squarefree part of the zero polynomial")
    if len(a) == 1:
        return [F.one]
    da = derivative(F, a)
    if not da:
        return squarefree_part(F, _pth_root(F, a))
    g = gcd_poly(F, a, da)
    w = monic(F, divmod_poly(F, a, g)[0])
    if F.characteristic == 0 or degree(g) == 0:
        return w
    y = gcd_poly(F, g, w)
    while degree(y) > 0:
        g = divmod_poly(F, g, y)[0]
        y = gcd_poly(F, g, y)
    if degree(g) == 0:
        return w
    return monic(F, mul(F, w, squarefree_part(F, g)))


def is_irreducible(F: Field, m: list) -> bool:
    m = monic(F, normalize(F, m))
    n = degree(m)
    if n <= 0:
        return False
    if n == 1:
        return True
    if isinstance(F, RationalField):
        return _rational_irreducible(m)
    q = field_order(F)
    t = [F.zero, F.one]
    h = t
    for _ in range(1, n // 2 + 1):
        h = powmod(F, h, q, m)
        if degree(gcd_poly(F, m, sub(F, h, t))) > 0:
            return False
    return True


def _integer_primitive(a: list[Fraction]) -> list[int]:
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_irreducible(m: list[Fraction]) -> bool:
    n = degree(m)
    if n > 4:
        raise ValueError("irreducibility over QQ is only checked up to degree 4")
    if rational_roots(m):
        return False
    if n <= 3:
        return True
    # monic quartic: make it an integer monic polynomial in s = L*t
    den = 1
    for c in m:
        den = den * c.denominator // gcd(den, c.denominator)
    k = [int(m[i] * den ** (4 - i)) for i in range(5)]
    k0, k1, k2, k3 = k[0], k[1], k[2], k[3]
    # (s^2 + a s + b)(s^2 + c s + d) with integers a, b, c, d (Gauss)
    for b in _divisors(k0):
        for b in (b, -b):
            d = k0 // b
            if d != b:
                num = k1 - b * k3
                if num % (d - b):
                    continue
                a = num // (d - b)
                c = k3 - a
                if b + d + a * c == k2:
                    return False
            else:
                if k1 != b * k3:
                    continue
                # a + c = k3, a c = k2 - 2b
                disc = k3 * k3 - 4 * (k2 - 2 * b)
                if disc >= 0 and isqrt(disc) ** 2 == disc and (k3 + isqrt(disc)) % 2 == 0:
                    return False
    return True


# ---------------------------------------------------------------------------
# Root finding


def roots_in_prime_field(F: PrimeField, a: list, rng: random.Random | None = None) -> list[int]:
    """Distinct roots of ``a`` lying in ``F`` itself, sorted."""
    a = monic(F, normalize(F, a))
    if not a:
        raise ValueError("roots of the zero polynomial")
    if degree(a) == 0:
        return []
    p = F.p
    t = [0, 1]
    h = powmod(F, t, p, a)
    g = gcd_poly(F, a, sub(F, h, t))
    rng = rng or random.Random(0)
    out: list[int] = []
    _split_linear(F, g, rng, out)
    return sorted(out)


def _split_linear(F: PrimeField, g: list, rng: random.Random, out: list) -> None:
    d = degree(g)
    if d <= 0:
        return
    if d == 1:
        out.append(F.neg(F.div(g[0], g[1])))
        return
    p = F.p
    while True:
        shift = rng.randrange(p)
        h = powmod(F, [shift, 1], (p - 1) // 2, g)
        k = gcd_poly(F, g, sub(F, h, [1]))
        if 0 < degree(k) < d:
            _split_linear(F, k, rng, out)
            _split_linear(F, divmod_poly(F, g, k)[0], rng, out)
            return


def _rational_reconstruct(a: int, m: int) -> Fraction | None:
    """Find u/v = a (mod m) with |u|, v < sqrt(m/2)."""
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


_LIFT_PRIMES = (10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079, 10091, 10093)


def rational_roots(a: list[Fraction]) -> list[Fraction]:
    """All rational roots of a polynomial over QQ, sorted.

    The polynomial is cleared to a primitive integer polynomial; by the
    rational-root theorem every root u/v has ``u | a_0`` and ``v | a_n``,
    which bounds the height.  Candidates are found as simple roots modulo
    a prime, Hensel-lifted beyond that height bound, rationally
    reconstructed and then checked exactly.
    """
    QQ_ = RationalField()
    a = normalize(QQ_, [Fraction(c) for c in a])
    if not a:
        raise ValueError("roots of the zero polynomial")
    roots: list[Fraction] = []
    if QQ_.is_zero(a[0]):
        roots.append(Fraction(0))
        while a and QQ_.is_zero(a[0]):
            a = a[1:]
    if degree(a) <= 0:
        return sorted(roots)
    sq = divmod_poly(QQ_, a, gcd_poly(QQ_, a, derivative(QQ_, a)))[0]
    ints = _integer_primitive(sq)
    lead, const = ints[-1], ints[0]
    target = 2 * (max(abs(lead), abs(const)) + 1) ** 2 + 1
    for P in _LIFT_PRIMES:
        if lead % P == 0:
            continue
        Fp = PrimeField(P)
        red = normalize(Fp, [c % P for c in ints])
        if degree(red) != degree(ints) or degree(gcd_poly(Fp, red, derivative(Fp, red))) > 0:
            continue
        for r in roots_in_prime_field(Fp, red):
            root = _hensel_lift(ints, r, P, target)
            if root is None:
                continue
            val = sum(Fraction(c) * root**i for i, c in enumerate(ints))
            if val == 0:
                roots.append(root)
        return sorted(set(roots))
    raise ArithmeticError("no suitable lifting prime found")


def _hensel_lift(ints: list[int], r: int, P: int, target: int) -> Fraction | None:
    deriv = [i * ints[i] for i in range(1, len(ints))]

    def ev(poly, x, m):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % m
        return acc

    mod = P
    x = r
    while mod < target:
        mod2 = mod * mod
        fx = ev(ints, x, mod2)
        dfx = ev(deriv, x, mod2)
        x = (x - fx * pow(dfx, -1, mod2)) % mod2
        mod = mod2
    return _rational_reconstruct(x, mod)
