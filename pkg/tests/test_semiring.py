import itertools

import pytest

from mwpflow.semiring import ALL, FINITE, INF, M, P, W, ZERO, Coeff, coeff_add, coeff_mul, coeff_sum

TRIPLES = list(itertools.product(ALL, repeat=3))


def test_order_is_total_and_fixed():
    assert ZERO < M < W < P < INF
    assert sorted(reversed(ALL)) == list(ALL)


@pytest.mark.parametrize("a,b,expected", [(M, W, W), (ZERO, ZERO, ZERO), (P, INF, INF)])
def test_add_examples(a, b, expected):
    assert coeff_add(a, b) is expected


@pytest.mark.parametrize("a,b,expected", [(W, P, P), (ZERO, P, ZERO), (INF, ZERO, INF), (ZERO, INF, INF)])
def test_mul_examples(a, b, expected):
    assert coeff_mul(a, b) is expected


def test_add_is_commutative_idempotent_monoid():
    for a, b, c in TRIPLES:
        assert coeff_add(a, coeff_add(b, c)) == coeff_add(coeff_add(a, b), c)
        assert coeff_add(a, b) == coeff_add(b, a)
    for a in ALL:
        assert coeff_add(a, ZERO) == a
        assert coeff_add(a, a) == a


def test_mul_is_monoid_with_unit_m():
    for a, b, c in TRIPLES:
        assert coeff_mul(a, coeff_mul(b, c)) == coeff_mul(coeff_mul(a, b), c)
    for a in ALL:
        assert coeff_mul(a, M) == a == coeff_mul(M, a)


def test_distributivity_all_125_triples():
    assert len(TRIPLES) == 125
    for a, b, c in TRIPLES:
        assert coeff_mul(a, coeff_add(b, c)) == coeff_add(coeff_mul(a, b), coeff_mul(a, c))
        assert coeff_mul(coeff_add(b, c), a) == coeff_add(coeff_mul(b, a), coeff_mul(c, a))


def test_strong_on_finite_part_only():
    for a in FINITE:
        assert coeff_mul(ZERO, a) is ZERO
        assert coeff_mul(a, ZERO) is ZERO
    assert coeff_mul(INF, ZERO) is INF


def test_operators_and_text():
    assert M + W is W
    assert W * ZERO is ZERO
    assert [str(c) for c in ALL] == ["0", "m", "w", "p", "i"]
    for c in ALL:
        assert Coeff.parse(str(c)) is c
    assert Coeff.parse("inf") is INF
    with pytest.raises(ValueError):
        Coeff.parse("q")
    assert coeff_sum([M, P, W]) is P
    assert coeff_sum([]) is ZERO
