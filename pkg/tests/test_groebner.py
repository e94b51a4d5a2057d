import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import fp_ring, random_poly, seeds
from eckardt.algebra import LEX, QQ, PolyRing, PrimeField, poly_parse
from eckardt.groebner import (
    GroebnerResourceError,
    Ideal,
    NotZeroDimensional,
    buchberger,
    certify,
    distinct_point_count,
    eliminate,
    ideal_quotient,
    intersection,
    minimal_polynomial,
    multiplication_matrix,
    normal_form,
    quotient_dimension,
    rational_points_zero_dim,
    resource_caps,
    saturate,
    saturate_rabinowitsch,
    spoly,
)
from eckardt.groebner.zerodim import is_zero_dimensional

QXY = PolyRing(QQ, ("x", "y"))
QXYZ = PolyRing(QQ, ("x", "y", "z"))


def P(text, R=QXY):
    return poly_parse(text, R)


def basis_text(G):
    return sorted(str(g) for g in G.polys)


# ---- small known bases ------------------------------------------------------


def test_textbook_basis():
    G = buchberger(Ideal([P("x^3 - 2*x*y"), P("x^2*y - 2*y^2 + x")]))
    assert basis_text(G) == ["x*y", "x^2", "y^2 - 1/2*x"]
    assert certify(G)


def test_inconsistent_system_gives_one():
    G = buchberger(Ideal([P("x*y - 1"), P("x"), P("y + 2")]))
    assert G.contains_one
    assert basis_text(G) == ["1"]


def test_zero_ideal_and_membership():
    G = buchberger(Ideal([P("x^2 - y"), P("y^2 - 1")]))
    assert G.contains(P("x^4 - 1"))
    assert not G.contains(P("x - 1"))
    assert normal_form(P("x^4 + x"), G) == P("x + 1")


def test_spoly_cancels_leading_terms():
    f, g = P("x^2*y + 1"), P("x*y^2 + x")
    s = spoly(f, g)
    assert s == P("y - x^2")


def test_certify_detects_non_basis():
    from eckardt.groebner import GroebnerBasis

    fake = GroebnerBasis(QXY, (P("x^2 - y"), P("x*y - 1")), None)
    assert not certify(fake)


def test_resource_caps():
    I = Ideal([P("x^3 - 2*x*y"), P("x^2*y - 2*y^2 + x")])
    with pytest.raises(GroebnerResourceError):
        buchberger(I, max_basis=2)
    with resource_caps(max_degree=2):
        with pytest.raises(GroebnerResourceError):
            buchberger(I)
    assert len(buchberger(I).polys) == 3


def test_basis_is_order_dependent_but_ideal_is_not():
    I = Ideal([P("x^2 + y^2 - 1"), P("x - y")])
    L = PolyRing(QQ, ("x", "y"), LEX)
    G1 = buchberger(I)
    G2 = buchberger(I.with_ring(L))
    assert basis_text(G2) == ["x - y", "y^2 - 1/2"]
    for g in G2.polys:
        assert G1.contains(g.change_ring(QXY))


# ---- ideal operations -------------------------------------------------------


def test_elimination_of_twisted_cubic_parameter():
    R = PolyRing(QQ, ("t", "x", "y"))
    I = Ideal([P("x - t^2", R), P("y - t^3", R)])
    E = eliminate(I, 1)
    assert [str(g) for g in E.gens] == ["x^3 - y^2"]


def test_intersection_and_quotient():
    I, J = Ideal([P("x")]), Ideal([P("y")])
    assert [str(g) for g in intersection(I, J).gens] == ["x*y"]
    Q = ideal_quotient(Ideal([P("x*y"), P("x^2")]), P("x"))
    assert basis_text(buchberger(Q)) == ["x", "y"]


def test_saturation_removes_embedded_component():
    I = Ideal([P("x*y", QXYZ), P("x*z", QXYZ)])
    S = saturate(I, P("x", QXYZ))
    assert basis_text(buchberger(S)) == ["y", "z"]
    S2 = saturate_rabinowitsch(I, P("x", QXYZ))
    assert buchberger(S).same_ideal(buchberger(S2))


def test_saturation_by_ideal():
    I = Ideal([P("x^2*y"), P("x*y^2")])  # the axes with an embedded point at the origin
    S = saturate(I, Ideal([P("x"), P("y")]))
    assert buchberger(S).contains_one is False
    assert basis_text(buchberger(S)) == ["x*y"]


def _affine_linear(rng, R):
    F = R.field
    out = R.const(rng.randrange(F.p))
    for i in range(R.nvars):
        out = out + R.gen(i).scale(rng.randrange(F.p))
    return out


@given(seeds)
@settings(max_examples=40)
def test_saturation_stability(seed):
    rng = random.Random(seed)
    R = fp_ring(rng.choice([5, 7, 11]), 3)
    gens = []
    for _ in range(rng.randint(2, 3)):
        g = R.one
        for _ in range(rng.randint(1, 3)):
            g = g * _affine_linear(rng, R)
        gens.append(g)
    I = Ideal(gens, R)
    J = _affine_linear(rng, R)
    if not J:
        return
    S = saturate(I, J)
    SS = saturate(S, J)
    assert buchberger(S).same_ideal(buchberger(SS))
    assert buchberger(S).same_ideal(buchberger(saturate_rabinowitsch(I, J)))
    GS = buchberger(S)
    assert all(GS.contains(g) for g in gens)


@given(seeds)
@settings(max_examples=60)
def test_random_bases_certify(seed):
    rng = random.Random(seed)
    R = fp_ring(rng.choice([5, 7, 32003]), rng.randint(2, 4))
    gens = [random_poly(rng, R, terms=rng.randint(2, 4), degree=3) for _ in range(rng.randint(1, 4))]
    G = buchberger(Ideal(gens, R))
    assert certify(G)
    assert all(G.contains(g) for g in gens)


# ---- zero-dimensional solving -----------------------------------------------


def test_distinct_count_and_multiplicity():
    R = fp_ring(32003, 2)
    x, y = R.gens
    sol = distinct_point_count(Ideal([x ** 3 - x, y ** 2 - R.one], R))
    assert (sol.distinct_count, sol.quotient_dimension) == (6, 6)
    sol = distinct_point_count(Ideal([x ** 2, y], R))
    assert (sol.distinct_count, sol.quotient_dimension) == (1, 2)
    sol = distinct_point_count(Ideal([R.one], R))
    assert (sol.distinct_count, sol.quotient_dimension) == (0, 0)


def test_not_zero_dimensional():
    R = fp_ring(7, 2)
    with pytest.raises(NotZeroDimensional):
        distinct_point_count(Ideal([R.gen(0)], R))


def test_multiplication_matrices_commute():
    R = fp_ring(101, 2)
    x, y = R.gens
    G = buchberger(Ideal([x ** 2 - y - R.one, y ** 2 - x * y + R.const(3)], R))
    Mx = np.array(multiplication_matrix(G, x), dtype=np.int64)
    My = np.array(multiplication_matrix(G, y), dtype=np.int64)
    assert ((Mx @ My - My @ Mx) % 101 == 0).all()
    mp = minimal_polynomial(G, x)
    assert len(mp) - 1 <= quotient_dimension(G)


def test_rational_points_over_rationals():
    pts = rational_points_zero_dim(Ideal([P("x^2 - 1"), P("y - 2*x")]))
    assert pts == [(Fraction(-1), Fraction(-2)), (Fraction(1), Fraction(2))]
    assert rational_points_zero_dim(Ideal([P("x^2 + 1"), P("y")])) == []
    pts = rational_points_zero_dim(Ideal([P("4*x^2 - 1"), P("y^2 - x - 1/2")]))
    half = Fraction(1, 2)
    assert pts == [(-half, Fraction(0)), (half, Fraction(-1)), (half, Fraction(1))]


def test_rational_points_mod_p():
    R = fp_ring(13, 2)
    x, y = R.gens
    pts = rational_points_zero_dim(Ideal([x ** 2 - R.const(4), y ** 2 - R.const(2)], R))
    assert pts == []  # 2 is not a square mod 13
    pts = rational_points_zero_dim(Ideal([x ** 2 - R.const(4), y - x], R))
    assert pts == [(2, 2), (11, 11)]


# ---- brute-force oracle over GF(p^k) ---------------------------------------


class TableField:
    """GF(p^k) as integers 0..p^k-1 with precomputed tables (independent of the package)."""

    def __init__(self, p: int, k: int) -> None:
        self.p, self.k, self.q = p, k, p ** k
        self.modulus = self._irreducible() if k > 1 else None
        elems = list(product(range(p), repeat=k))  # little-endian coefficient tuples
        index = {e: i for i, e in enumerate(elems)}
        self.add = np.zeros((self.q, self.q), dtype=np.int64)
        self.mul = np.zeros((self.q, self.q), dtype=np.int64)
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                self.add[i, j] = index[tuple((x + y) % p for x, y in zip(a, b))]
                self.mul[i, j] = index[self._mulpoly(a, b)]
        self.const = [index[(c,) + (0,) * (k - 1)] for c in range(p)]

    def _irreducible(self):
        # degree 2 and 3 polynomials are irreducible iff they have no root
        for tail in product(range(self.p), repeat=self.k):
            m = list(tail) + [1]
            if all(sum(c * x ** i for i, c in enumerate(m)) % self.p for x in range(self.p)):
                return m
        raise AssertionError("no irreducible polynomial found")

    def _mulpoly(self, a, b):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        for d in range(len(prod) - 1, k - 1, -1):
            c = prod[d]
            if c:
                for i in range(k + 1):
                    prod[d - k + i] = (prod[d - k + i] - c * self.modulus[i]) % p
        return tuple(prod[:k])


def _eval_factor(T: TableField, factor, pts):
    """Evaluate a factor at all points (``pts`` is an (N, n) array of element indices)."""
    kind, data = factor
    if kind == "linear":
        c0, coeffs = data
        val = np.full(len(pts), T.const[c0], dtype=np.int64)
        for i, c in enumerate(coeffs):
            val = T.add[val, T.mul[T.const[c], pts[:, i]]]
        return val
    var, coeffs = data  # univariate, low degree first
    val = np.full(len(pts), T.const[coeffs[-1]], dtype=np.int64)
    for c in reversed(coeffs[:-1]):
        val = T.add[T.mul[val, pts[:, var]], T.const[c]]
    return val


def brute_force_count(p, n, gens, k):
    """Number of common zeros with coordinates in GF(p^k)."""
    T = TableField(p, k)
    pts = np.array(list(product(range(T.q), repeat=n)), dtype=np.int64)
    alive = np.ones(len(pts), dtype=bool)
    zero = T.const[0]
    for g in gens:
        val = np.full(len(pts), T.const[1], dtype=np.int64)
        for factor in g:
            val = T.mul[val, _eval_factor(T, factor, pts)]
        alive &= val == zero
    return int(alive.sum())


def _irreducible_univariate(rng, p, d):
    while True:
        coeffs = [rng.randrange(p) for _ in range(d)] + [1]
        if all(sum(c * x ** i for i, c in enumerate(coeffs)) % p for x in range(p)):
            return coeffs


def _to_poly(R, gens):
    out = []
    for g in gens:
        f = R.one
        for kind, data in g:
            if kind == "linear":
                c0, coeffs = data
                h = R.const(c0)
                for i, c in enumerate(coeffs):
                    h = h + R.gen(i).scale(c)
            else:
                var, coeffs = data
                h = R.zero
                for e, c in enumerate(coeffs):
                    h = h + R.gen(var) ** e * R.const(c)
            f = f * h
        out.append(f)
    return out


def random_instance(rng):
    """Products of at most three affine linear forms, plus at most one irreducible factor."""
    p = rng.choice([5, 7])
    n = rng.randint(1, 3)
    gens = []
    for _ in range(n + rng.randint(0, 1)):
        factors = []
        for _ in range(rng.randint(1, 3)):
            factors.append(("linear", (rng.randrange(p), [rng.randrange(p) for _ in range(n)])))
        gens.append(factors)
    d = 1
    if rng.random() < 0.5:
        d = 2 if n == 3 else rng.choice([2, 3])
        g = rng.randrange(len(gens))
        gens[g][0] = ("univariate", (rng.randrange(n), _irreducible_univariate(rng, p, d)))
    return p, n, gens, d


def _oracle_count(p, n, gens, d):
    """Geometric points, as a sum over Frobenius orbits by minimal field of definition."""
    n1 = brute_force_count(p, n, gens, 1)
    orbits = {1: n1}
    for k in sorted({2, d} - {1}):
        assert p ** (k * n) <= 200000, "instance too large to enumerate"
        nk = brute_force_count(p, n, gens, k)
        assert (nk - n1) % k == 0
        orbits[k] = (nk - n1) // k
    # every point is defined over GF(p^d); other degrees must contribute nothing
    for k, m in orbits.items():
        if k != 1 and k != d:
            assert m == 0
    return sum(k * m for k, m in orbits.items())


@given(seeds)
@settings(max_examples=60)
def test_distinct_count_matches_brute_force(seed):
    rng = random.Random(seed)
    while True:
        p, n, gens, d = random_instance(rng)
        R = PolyRing(PrimeField(p), ("x", "y", "z")[:n])
        G = buchberger(Ideal(_to_poly(R, gens), R))
        if is_zero_dimensional(G):
            break
    sol = distinct_point_count(G, trials=8, seed=seed)
    assert sol.distinct_count <= sol.quotient_dimension
    assert sol.distinct_count == _oracle_count(p, n, gens, d)


def test_brute_force_oracle_sanity():
    # x^2 + 1 has two roots in GF(49), none in GF(7)
    gens = [[("univariate", (0, [1, 0, 1]))]]
    assert brute_force_count(7, 1, gens, 1) == 0
    assert brute_force_count(7, 1, gens, 2) == 2
    assert _oracle_count(7, 1, gens, 2) == 2


@given(seeds)
@settings(max_examples=40)
def test_quotient_dimension_order_independent(seed):
    rng = random.Random(seed)
    while True:
        p, n, gens, _ = random_instance(rng)
        R = PolyRing(PrimeField(p), ("x", "y", "z")[:n])
        I = Ideal(_to_poly(R, gens), R)
        G = buchberger(I)
        if is_zero_dimensional(G):
            break
    L = PolyRing(R.field, R.names, LEX)
    GL = buchberger(I.with_ring(L), max_degree=500)  # lex passes through high degrees
    assert quotient_dimension(G) == quotient_dimension(GL)


def test_small_field_falls_back_to_radical():
    # all 25 points of GF(5)^2: a linear form over GF(5) takes at most 5 values on them
    R = fp_ring(5, 2)
    x, y = R.gens
    sol = distinct_point_count(Ideal([x ** 5 - x, y ** 5 - y], R))
    assert max(sol.trial_counts) <= 5
    assert (sol.distinct_count, sol.method) == (25, "radical")
    # a fat point stays one point
    sol = distinct_point_count(Ideal([x ** 3, y ** 2], R))
    assert (sol.distinct_count, sol.quotient_dimension) == (1, 6)


def test_radical_point_count_matches_separating_forms_at_large_p():
    from eckardt.groebner import radical_point_count

    R = fp_ring(32003, 3)
    x, y, z = R.gens
    G = buchberger(Ideal([x ** 2 * (x - R.one), y ** 2 - x, z ** 3 - y * z], R))
    sol = distinct_point_count(G)
    assert sol.method == "separating-form"
    assert sol.distinct_count == radical_point_count(G)
