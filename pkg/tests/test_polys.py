from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hurwitz_strata.polys import SparsePoly

coef = st.fractions(max_denominator=5).filter(lambda f: abs(f) < 10)
terms3 = st.dictionaries(st.tuples(*(st.integers(0, 3),) * 3), coef, max_size=5)
point3 = st.tuples(coef, coef, coef)


def test_zero_coefficients_dropped():
    p = SparsePoly(2, {(1, 0): 0, (0, 1): 2})
    assert p.terms == {(0, 1): Fraction(2)}
    assert (p - p).is_zero()


def test_binomial_square():
    x, y = SparsePoly.var(2, 0), SparsePoly.var(2, 1)
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert ((x + y) ** 2).coefficient((1, 1)) == 2


def test_linear_and_monomial():
    p = SparsePoly.linear(3, {0: 1, 2: Fraction(1, 2)}, const=4)
    assert p([2, 5, 2]) == 7
    assert SparsePoly.monomial(3, (1, 2, 0), 3)([2, 1, 9]) == 6


def test_arity_mismatch():
    with pytest.raises(ValueError):
        SparsePoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        SparsePoly.var(2, 0) + SparsePoly.var(3, 0)


@given(terms3, terms3, point3)
def test_evaluation_is_a_ring_map(a, b, pt):
    p, q = SparsePoly(3, a), SparsePoly(3, b)
    assert (p + q)(pt) == p(pt) + q(pt)
    assert (p * q)(pt) == p(pt) * q(pt)
    assert (p - q)(pt) == p(pt) - q(pt)


@given(terms3, st.integers(0, 3), point3)
def test_power(a, k, pt):
    p = SparsePoly(3, a)
    assert (p**k)(pt) == p(pt) ** k
