from itertools import product

import pytest
from hypothesis import given, settings

from mwpflow.matrix import (
    DimensionMismatch,
    PolyMatrix,
    cm_add,
    cm_identity,
    cm_mul,
    cm_star,
    column_replace,
    mat_add,
    mat_eval,
    mat_mul,
    mat_star,
)
from mwpflow.polynomial import ZERO_POLY, ChoiceDomains, Polynomial, delta
from mwpflow.semiring import ALL, INF, M, P, W, ZERO

from strategies import matrices

V2 = ("X1", "X2")
DOM = ChoiceDomains((3, 3, 2, 3))
SAMPLE = list(DOM.assignments())[::5]


def const(rows):
    return PolyMatrix([f"X{i + 1}" for i in range(len(rows))], [[Polynomial.const(c) for c in r] for r in rows])


def test_identity_laws_without_infinity():
    a = PolyMatrix(V2, [[Polynomial([delta(0, 0)]), Polynomial.const(P)], [ZERO_POLY, Polynomial([delta(1, 0, W)])]])
    one = PolyMatrix.identity(V2)
    assert mat_mul(a, one) == a
    assert mat_mul(one, a) == a
    assert mat_mul(PolyMatrix.zero(V2), a) == PolyMatrix.zero(V2)


def test_zero_does_not_annihilate_infinity():
    a = const([[M, INF], [ZERO, M]])
    z = mat_mul(PolyMatrix.zero(V2), a)
    assert z != PolyMatrix.zero(V2)
    assert mat_eval(z, ()) == ((ZERO, INF), (ZERO, INF))


def test_star_examples():
    a = const([[ZERO, M], [ZERO, ZERO]])
    assert mat_eval(mat_star(a), ()) == ((M, M), (ZERO, M))
    growth = const([[M, P], [ZERO, M]])
    assert mat_eval(mat_star(growth), ()) == ((M, P), (ZERO, M))
    assert mat_star(PolyMatrix.zero(V2)) == PolyMatrix.identity(V2)


def test_column_replace_and_errors():
    one = PolyMatrix.identity(V2)
    v = (Polynomial.const(P), Polynomial.const(M))
    assert mat_eval(column_replace(one, 1, v), ()) == ((M, P), (ZERO, M))
    with pytest.raises(IndexError):
        column_replace(one, 2, v)
    with pytest.raises(DimensionMismatch):
        column_replace(one, 0, v[:1])
    with pytest.raises(DimensionMismatch):
        mat_add(one, PolyMatrix.identity(("X1", "X3")))


def test_text_and_json():
    a = const([[M, W], [ZERO, INF]])
    assert str(a).splitlines() == ["    X1  X2", "X1  m   w", "X2  0   i"]
    assert PolyMatrix.from_json(a.to_json()) == a
    assert a.has_infinity()


@settings(max_examples=300, deadline=None)
@given(matrices(), matrices())
def test_evaluation_is_a_homomorphism(a, b):
    s, prod = mat_add(a, b), mat_mul(a, b)
    for x in SAMPLE:
        ea, eb = mat_eval(a, x), mat_eval(b, x)
        assert mat_eval(s, x) == cm_add(ea, eb)
        assert mat_eval(prod, x) == cm_mul(ea, eb)


@settings(max_examples=150, deadline=None)
@given(matrices(max_size=2))
def test_star_evaluates_pointwise(a):
    star = mat_star(a)
    for x in SAMPLE:
        assert mat_eval(star, x) == cm_star(mat_eval(a, x))


@settings(max_examples=150, deadline=None)
@given(matrices(max_size=2))
def test_star_fixpoint_and_idempotence(a):
    star = mat_star(a)
    one = PolyMatrix.identity(a.vars)
    again = mat_star(star)
    step = mat_add(one, mat_mul(a, star))
    for x in SAMPLE:
        assert mat_eval(step, x) == mat_eval(star, x)
        assert mat_eval(again, x) == mat_eval(star, x)
        assert all(mat_eval(star, x)[i][i] >= M for i in range(a.dim))


def test_coefficient_star_idempotent_exhaustive_2x2():
    for cells in product(ALL, repeat=4):
        a = (cells[:2], cells[2:])
        s = cm_star(a)
        assert cm_star(s) == s
        assert cm_add(cm_identity(2), cm_mul(a, s)) == s
