import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eckardt.algebra import QQ, PolyRing, PrimeField, linalg
from eckardt.algebra.fields import Field
from eckardt.cubic import WITNESS_LINE, CubicError, CubicThreefold, builtin, generate_family
from eckardt.fano import (
    CHART01,
    cell_of,
    cells,
    fano_ideal,
    line_type,
    main_component_model,
    plucker,
    plucker_relations,
    second_type_system,
    triple_line_count,
    triple_line_system,
)
from eckardt.fano.systems import triple_line_conditions
from eckardt.groebner import buchberger, rational_points_zero_dim


class TinyField(Field):
    """GF(2) or GF(3), only for enumerating the Grassmannian by brute force."""

    kind = "prime-field"

    def __init__(self, q):
        self.q = self.characteristic = q
        self.zero, self.one = 0, 1

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def neg(self, a):
        return -a % self.q

    def mul(self, a, b):
        return a * b % self.q

    def inv(self, a):
        return pow(a, -1, self.q)

    def from_int(self, n):
        return n % self.q


def _span(F, v0, v1):
    return frozenset(
        tuple(F.add(F.mul(s, a), F.mul(t, b)) for a, b in zip(v0, v1))
        for s in range(F.q)
        for t in range(F.q)
    )


# ---- Schubert cells ---------------------------------------------------------


@pytest.mark.parametrize("q, n_lines", [(2, 155), (3, 1210)])
def test_cells_partition_the_grassmannian(q, n_lines):
    F = TinyField(q)
    vectors = [v for v in product(range(q), repeat=5) if any(v)]
    label_of = {}
    for v0 in vectors:
        for v1 in vectors:
            S = _span(F, v0, v1)
            if len(S) != q * q:
                continue
            cell, coords = cell_of(v0, v1, F)
            label = (cell.pivots, tuple(coords))
            assert label_of.setdefault(S, label) == label
    assert len(label_of) == n_lines
    assert len(set(label_of.values())) == n_lines
    per_cell = {}
    for pivots, _ in label_of.values():
        per_cell[pivots] = per_cell.get(pivots, 0) + 1
    assert per_cell == {c.pivots: q ** c.dimension for c in cells()}


def test_cell_dimensions():
    dims = {c.pivots: c.dimension for c in cells()}
    assert len(dims) == 10
    assert dims[(0, 1)] == 6 and dims[(3, 4)] == 0
    assert sum(1 for d in dims.values() if d == 6) == 1
    assert CHART01.coordinate_names == ("a", "b", "c", "d", "e", "g")


@pytest.mark.parametrize("cell", cells(), ids=str)
def test_plucker_relations_vanish_on_cells(cell):
    R = PolyRing(QQ, cell.coordinate_names)
    v0, v1 = cell.rows(R)
    p = plucker(v0, v1)
    assert p[cell.pivots] == R.one
    assert all(r.is_zero() for r in plucker_relations(p))


@given(st.lists(st.integers(-5, 5), min_size=10, max_size=10))
def test_plucker_relations_vanish_on_random_lines(vals):
    F = PrimeField(101)
    v0, v1 = vals[:5], vals[5:]
    p = plucker(v0, v1, F)
    assert all(x % 101 == 0 for x in plucker_relations(p))


# ---- line types -------------------------------------------------------------


def test_line_types():
    X = builtin("fermat")
    assert line_type(X, [1, -1, 0, 0, 0], [0, 0, 1, -1, 0]) == "triple"
    assert line_type(X, [1, 0, 0, 0, 0], [0, 1, 0, 0, 0]) == "not-on-X"
    assert line_type(builtin("x5"), *WITNESS_LINE) == "triple"
    assert line_type(builtin("x8"), *WITNESS_LINE) == "second"
    F = PrimeField(101)
    X1 = builtin("x1")
    assert line_type(X1, [1, 0, 12, 62, 29], [0, 1, 4, 82, 88], F) == "first"
    assert line_type(X1, [1, 0, 12, 62, 29], [0, 1, 8, 45, 58], F) == "second"


def test_line_type_rejects_singular_line():
    # every point of x2 = x3 = x4 = 0 is singular
    X = CubicThreefold("x0*x2^2 + x1*x3^2 + x4^3 + x2*x3*x4")
    with pytest.raises(CubicError):
        line_type(X, *WITNESS_LINE)


@given(st.lists(st.integers(-3, 3), min_size=12, max_size=12), st.integers(1, 3))
@settings(max_examples=25)
def test_witness_line_is_triple_on_family(coeffs, k):
    monos = ["x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4"]
    q0 = " + ".join(f"({c})*{m}" for c, m in zip(coeffs[:5], monos))
    q1 = " + ".join(f"({c})*{m}" for c, m in zip(coeffs[5:10], monos))
    if all(c == 0 for c in coeffs[:10]):
        return
    X = generate_family(q0, q1, k)
    vals = triple_line_conditions(X, CHART01, [0] * 6, [0, 0, 1], QQ)
    assert all(v == 0 for v in vals)


# ---- triple-line systems ----------------------------------------------------


def _chart_solutions(X, p):
    out = []
    for s in range(3):
        T = triple_line_system(X, CHART01, s, p)
        for sol in rational_points_zero_dim(T.ideal):
            alpha = [0] * s + [1] + list(sol[6:])
            out.append((list(sol[:6]), alpha))
    return out


@pytest.mark.parametrize("name", ["x1", "x2"])
def test_alpha_is_unique_at_triple_lines(name):
    X = builtin(name)
    p = 32003
    F = PrimeField(p)
    S = second_type_system(X, CHART01, p)
    sols = _chart_solutions(X, p)
    assert sols
    for coords, alpha in sols:
        D = [[e.evaluate(coords) for e in row] for row in S.D]
        assert linalg.rank(F, D) == 2
        (k,) = linalg.kernel(F, D)
        # alpha spans the kernel
        assert linalg.rank(F, [k, alpha]) == 1
        assert all(v == 0 for v in triple_line_conditions(X, CHART01, coords, alpha, F))


def test_triple_lines_are_singular_points_of_second_type_curve():
    X = builtin("x1")
    p = 32003
    F = PrimeField(p)
    gens = list(second_type_system(X, CHART01, p).m_ideal().gens)
    sols = _chart_solutions(X, p)
    assert len(sols) == 3
    for coords, _ in sols:
        J = [[g.diff(i).evaluate(coords) for i in range(6)] for g in gens]
        assert linalg.rank(F, J) <= 4


def test_fano_ideal_is_proper_in_chart():
    # a smooth cubic threefold has a surface of lines, so the chart ideal is not zero-dimensional
    G = buchberger(fano_ideal(builtin("x1"), CHART01, 32003))
    assert not G.contains_one


def test_witness_tangent_direction_is_specific():
    rng = random.Random(3)
    p = 101
    F = PrimeField(p)
    X = builtin("x6")
    assert all(F.is_zero(v) for v in triple_line_conditions(X, CHART01, [0] * 6, [0, 0, 1], F))
    alpha = [rng.randrange(1, p) for _ in range(3)]
    vals = triple_line_conditions(X, CHART01, [0] * 6, alpha, F)
    assert any(not F.is_zero(v) for v in vals)


# ---- counts -----------------------------------------------------------------


FAST_TRIPLE = {"x1": 9, "x2": 33, "x5": 27, "x6": 9, "x7": 2, "x8": 1, "klein": 0}


@pytest.mark.parametrize("name", sorted(FAST_TRIPLE))
def test_triple_line_counts(name):
    r = triple_line_count(builtin(name))
    assert r.total == FAST_TRIPLE[name]
    assert r.total == sum(r.per_cell.values())
    assert r.total >= r.chart01
    assert all(sum(r.per_alpha[k]) == v for k, v in r.per_cell.items())


def test_chart_only_matches_full_count_in_chart():
    X = builtin("x5")
    assert triple_line_count(X, chart_only=True).chart01 == triple_line_count(X).chart01


@pytest.mark.no_certify
def test_main_component_of_x1():
    m = main_component_model(builtin("x1"))
    assert m.n_curves == 1
    assert m.per_curve[0].distinct == 9
    assert m.triple_points == [9]
    assert m.chart_triple_lines == 9
    assert m.stable and m.contains_m and m.complete
    assert m.pairwise_curves == {}
