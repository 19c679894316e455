import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qvanish.dsl import parse
from qvanish.errors import NotInvertibleError
from qvanish.qproducts import Factor, ProductExpr, eta_like, expand, pochhammer
from qvanish.series import Series

from oracles import dense, distinct_partition_counts, finite_product, pentagonal, pochhammer_terms


def test_pochhammer_pentagonal():
    # frozen from (1-q)...(1-q^15) multiplied naively
    assert dense(finite_product(pochhammer_terms(1, 1, 1, 16), 16), 16) == [
        1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1
    ]
    assert pochhammer(1, 1, 1, 16).to_list() == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]


def test_pochhammer_distinct_parts():
    assert distinct_partition_counts(5) == [1, 1, 1, 2, 2, 3]
    assert pochhammer(-1, 1, 1, 6).to_list() == [1, 1, 1, 2, 2, 3]


@pytest.mark.parametrize("sign", [1, -1])
def test_pochhammer_beyond_truncation(sign):
    assert pochhammer(sign, 9, 4, 9) == Series.one(9)


def test_pochhammer_zero_offset():
    assert pochhammer(1, 0, 3, 10).is_zero()
    assert pochhammer(-1, 0, 3, 10).to_list() == [2 * c for c in pochhammer(-1, 3, 3, 10).to_list()]


@pytest.mark.parametrize(
    "sign,offset,modulus", [(1, 1, 1), (-1, 1, 1), (1, 3, 7), (-1, 2, 5), (1, 4, 10), (-1, 0, 4)]
)
def test_pochhammer_matches_naive(sign, offset, modulus):
    order = 60
    naive = finite_product(pochhammer_terms(sign, offset, modulus, order), order)
    assert pochhammer(sign, offset, modulus, order).to_list() == dense(naive, order)


def test_a_series_low_order():
    # (1+q)(1-q)^3 = 1 - 2q mod q^2
    assert expand(parse("(-q,-q^4;q^5)(q,q^9;q^10)^3"), 2).to_list() == [1, -2]


def test_d_series_low_order():
    assert expand(parse("(-q^2,-q^3;q^5)^3(q,q^9;q^10)"), 2).to_list() == [1, -1]


def test_empty_product():
    assert expand(ProductExpr(), 12) == Series.one(12)


def test_eta_like():
    assert eta_like(1, 16) == pochhammer(1, 1, 1, 16)
    assert eta_like(5, 6).to_list() == [1, 0, 0, 0, 0, -1]
    assert eta_like(10, 10) == Series.one(10)


def test_pentagonal_number_theorem():
    assert eta_like(1, 500).to_list() == pentagonal(500)


def test_euler_distinct_odd():
    for order in (1, 7, 64, 300):
        prod = pochhammer(-1, 1, 1, order) * pochhammer(1, 1, 2, order)
        assert prod == Series.one(order)


def test_reciprocal_of_minus_one_rejected():
    with pytest.raises(NotInvertibleError):
        expand(ProductExpr((Factor(-1, 0, 3, -1),)), 10)


def test_minus_one_allowed_in_numerator():
    assert expand(ProductExpr((Factor(-1, 0, 3, 1),)), 10).coeff(0) == 2


def test_factor_validation():
    with pytest.raises(ValueError):
        Factor(2, 1, 1)
    with pytest.raises(ValueError):
        Factor(1, -1, 1)
    with pytest.raises(ValueError):
        Factor(1, 1, 0)
    with pytest.raises(ValueError):
        Factor(1, 1, 1, 0)


def test_normalize_merges():
    e = parse("(q;q^5)(q;q^5)")
    assert e.normalize() == parse("(q;q^5)^2").normalize()
    assert e.normalize().factors == (Factor(1, 1, 5, 2),)
    assert parse("(q;q)/(q;q)").normalize() == ProductExpr()


def test_sign_convention_rewrite():
    # (-q,-q^4;q^5) = (q^2,q^8;q^10)/(q,q^4;q^5)
    lhs = expand(parse("(-q,-q^4;q^5)"), 300)
    rhs = expand(parse("(q^2,q^8;q^10)/(q,q^4;q^5)"), 300)
    assert lhs == rhs


factors = st.builds(
    Factor,
    sign=st.sampled_from([1, -1]),
    offset=st.integers(1, 12),
    modulus=st.integers(1, 12),
    multiplicity=st.integers(-3, 3).filter(bool),
)


@settings(max_examples=40, deadline=None)
@given(st.lists(factors, max_size=6), st.lists(factors, max_size=6))
def test_expand_is_multiplicative(p, q):
    P, Q = ProductExpr(tuple(p)), ProductExpr(tuple(q))
    assert expand(P * Q, 80) == expand(P, 80) * expand(Q, 80)


@settings(max_examples=40, deadline=None)
@given(factors)
def test_multiplicity_cancels(f):
    up = ProductExpr((Factor(f.sign, f.offset, f.modulus, abs(f.multiplicity)),))
    assert expand(up, 90) * expand(up**-1, 90) == Series.one(90)
