from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eckardt.algebra import QQ, FieldError, PolyRing, eisenstein_field, poly_parse
from eckardt.primes import (
    DEFAULT_PRIMES,
    consensus,
    escalation_primes,
    primes_below,
    rational_reconstruct,
    reduce_poly,
    reduction_map,
    splitting_primes,
    validate_primes,
)


def test_default_primes():
    assert DEFAULT_PRIMES == (32003, 31013, 30011)
    assert validate_primes(DEFAULT_PRIMES) == DEFAULT_PRIMES


@pytest.mark.parametrize("bad", [(), (3,), (32003, 32003), (32004,), (1,)])
def test_validate_primes_rejects(bad):
    with pytest.raises(ValueError):
        validate_primes(bad)


def test_primes_below_and_escalation():
    assert primes_below(32003, 3) == [31991, 31981, 31973]
    assert escalation_primes([32003, 31013, 30011]) == primes_below(30011, 3)
    assert all(p < 30011 for p in escalation_primes(DEFAULT_PRIMES))


def test_splitting_primes_are_one_mod_three():
    sp = splitting_primes(3)
    assert sp == [31981, 31963, 31957]
    assert all(p % 3 == 1 for p in sp)


def test_unanimous_consensus():
    c = consensus(lambda p: 7, DEFAULT_PRIMES)
    assert c.ok and c.unanimous and not c.escalated
    assert c.value == 7 and list(c.per_prime) == list(DEFAULT_PRIMES)


def test_outlier_is_outvoted_after_escalation():
    c = consensus(lambda p: 5 if p == 31013 else 4, DEFAULT_PRIMES)
    assert c.ok and c.escalated and not c.unanimous
    assert c.value == 4
    assert c.outliers == [31013]
    assert len(c.per_prime) == 6


def test_bad_reduction_is_replaced():
    def compute(p):
        if p == 32003:
            raise ValueError("bad reduction")
        return 1

    c = consensus(compute, DEFAULT_PRIMES)
    assert c.ok and c.value == 1
    assert 32003 in c.outliers and 32003 not in c.per_prime


def test_no_consensus():
    c = consensus(lambda p: p % 7, DEFAULT_PRIMES)
    assert not c.ok and c.value is None


def test_reduction_map_on_eisenstein_field():
    K = eisenstein_field()
    for p in splitting_primes(3):
        to_p = reduction_map(K, p)
        r = to_p(K.gen)
        assert (r * r - r + 1) % p == 0
        a, b = K.convert(3), K.add(K.gen, K.convert(2))
        assert to_p(K.mul(a, b)) == to_p(a) * to_p(b) % p
    with pytest.raises(FieldError):
        reduction_map(K, 32003)  # 32003 = 2 mod 3: xi does not exist


def test_reduce_poly_detects_vanishing_coefficients():
    R = PolyRing(QQ, ("x", "y"))
    assert str(reduce_poly(poly_parse("x^2 + 1/2*y", R), 7)) == "x^2 + 4*y"
    with pytest.raises(FieldError):
        reduce_poly(poly_parse("x^2 + 7*y", R), 7)


@given(st.integers(-100, 100), st.integers(1, 100))
def test_rational_reconstruction_roundtrip(n, d):
    p = 32003
    q = Fraction(n, d)
    a = q.numerator * pow(q.denominator, -1, p) % p
    assert rational_reconstruct(a, p) == q


def test_rational_reconstruction_failure():
    # 12345/31 is too tall to be recovered modulo 32003
    p = 32003
    a = 12345 * pow(31, -1, p) % p
    assert rational_reconstruct(a, p) != Fraction(12345, 31)


def test_single_good_prime_is_not_consensus():
    def compute(p):
        if p != 5:
            raise ValueError("bad reduction")
        return 1

    c = consensus(compute, (7, 11, 13))
    assert not c.ok and list(c.per_prime) == [5]
