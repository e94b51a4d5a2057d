"""Exact coefficient fields.

Elements are plain payloads (``Fraction`` for the rationals, ``int`` residues
for prime fields, tuples of base payloads for extensions) and all arithmetic
goes through the owning field object.  Keeping payloads unwrapped lets the
Groebner kernel run its inner loops on bare ints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence


class FieldError(ValueError):
    """Invalid field construction or an element that does not belong."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface; subclasses define the payload representation."""

    kind: str = ""
    characteristic: int = 0

    zero: Any
    one: Any

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        return self.div(self.from_int(q.numerator), self.from_int(q.denominator))

    def convert(self, x):
        """Coerce ``x`` (int, Fraction, or an element of a subfield) into this field."""
        if isinstance(x, bool):
            raise FieldError("booleans are not field elements")
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        raise FieldError(f"cannot convert {x!r} into {self}")

    def pow(self, a, n: int):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def to_str(self, a) -> str:
        return str(a)

    def is_one(self, a) -> bool:
        return a == self.one


class RationalField(Field):
    kind = "rationals"
    characteristic = 0

    def __init__(self) -> None:
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def from_int(self, n: int):
        return Fraction(n)

    def from_fraction(self, q: Fraction):
        return Fraction(q)

    def convert(self, x):
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return Fraction(x)
        raise FieldError(f"cannot convert {x!r} into QQ")

    def to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


class PrimeField(Field):
    kind = "prime-field"

    def __init__(self, p: int) -> None:
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p <= 3:
            raise FieldError("characteristic must exceed 3")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def from_int(self, n: int):
        return n % self.p

    def from_fraction(self, q: Fraction):
        if q.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator {q.denominator} divisible by {self.p}")
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def symmetric(self, a: int) -> int:
        """Representative in (-p/2, p/2]."""
        return a - self.p if a > self.p // 2 else a

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


class ExtensionField(Field):
    """``base[t] / (m(t))`` for a monic irreducible ``m``.

    Over a prime field this is ``GF(p^n)``; over QQ it is a number field of
    degree at most 4.  Payloads are tuples of base payloads, low degree first,
    always of length ``deg m``.
    """

    def __init__(self, base: Field, modulus: Sequence, name: str = "t", check: bool = True) -> None:
        from . import univariate as uv

        if isinstance(base, ExtensionField):
            raise FieldError("towers of extensions are not supported")
        mod = [base.convert(c) for c in modulus]
        mod = uv.normalize(base, mod)
        if len(mod) < 2:
            raise FieldError("modulus must have degree >= 1")
        if not base.is_one(mod[-1]):
            raise FieldError("modulus must be monic")
        self.base = base
        self.modulus = tuple(mod)
        self.degree = len(mod) - 1
        self.name = name
        self.characteristic = base.characteristic
        if isinstance(base, RationalField):
            self.kind = "rational-extension"
            if self.degree > 4:
                raise FieldError("rational extensions are limited to degree <= 4")
        else:
            self.kind = "extension-field"
        if check and not uv.is_irreducible(base, list(self.modulus)):
            raise FieldError(f"modulus {self._poly_str(self.modulus)} is reducible over {base!r}")
        self.zero = tuple([base.zero] * self.degree)
        self.one = tuple([base.one] + [base.zero] * (self.degree - 1))

    @property
    def gen(self):
        if self.degree == 1:
            return (self.base.neg(self.modulus[0]),)
        return tuple(self.base.one if i == 1 else self.base.zero for i in range(self.degree))

    def _reduce(self, coeffs: list) -> tuple:
        from . import univariate as uv

        _, r = uv.divmod_poly(self.base, coeffs, list(self.modulus))
        r = list(r) + [self.base.zero] * (self.degree - len(r))
        return tuple(r)

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def mul(self, a, b):
        from . import univariate as uv

        return self._reduce(uv.mul(self.base, list(a), list(b)))

    def inv(self, a):
        from . import univariate as uv

        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = uv.xgcd(self.base, uv.normalize(self.base, list(a)), list(self.modulus))
        if len(g) != 1:
            raise FieldError("non-invertible element; modulus not irreducible")
        s = uv.scale(self.base, s, self.base.inv(g[0]))
        return self._reduce(s)

    def from_int(self, n: int):
        return tuple([self.base.from_int(n)] + [self.base.zero] * (self.degree - 1))

    def from_fraction(self, q: Fraction):
        return tuple([self.base.from_fraction(q)] + [self.base.zero] * (self.degree - 1))

    def convert(self, x):
        if isinstance(x, tuple) and len(x) == self.degree:
            return tuple(self.base.convert(c) for c in x)
        return super().convert(x)

    def embed_base(self, c):
        return tuple([c] + [self.base.zero] * (self.degree - 1))

    def in_base(self, a) -> bool:
        return all(self.base.is_zero(c) for c in a[1:])

    def _poly_str(self, coeffs) -> str:
        parts = []
        for i in range(len(coeffs) - 1, -1, -1):
            c = coeffs[i]
            if self.base.is_zero(c):
                continue
            cs = self.base.to_str(c)
            if i == 0:
                parts.append(cs)
            else:
                mon = self.name if i == 1 else f"{self.name}^{i}"
                if self.base.is_one(c):
                    parts.append(mon)
                elif cs == "-1":
                    parts.append(f"-{mon}")
                else:
                    parts.append(f"{cs}*{mon}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def to_str(self, a) -> str:
        s = self._poly_str(a)
        return s if self.in_base(a) else f"({s})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("EXT", self.base, self.modulus))

    def __repr__(self) -> str:
        return f"{self.base!r}[{self.name}]/({self._poly_str(self.modulus)})"


def eisenstein_field() -> ExtensionField:
    """QQ(xi) with xi^2 - xi + 1 = 0, so xi^3 = -1 and xi is not -1."""
    return ExtensionField(QQ, [1, -1, 1], name="xi")
