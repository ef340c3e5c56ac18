from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hurwitz_strata.errors import DomainError
from hurwitz_strata.exactnum import as_text, binomial, factorial, ipow, multinomial


def _product(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _pascal(n, k):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k] if 0 <= k <= n else 0


@pytest.mark.parametrize("n,expected", [(0, 1), (5, 120), (20, _product(20))])
def test_factorial(n, expected):
    assert factorial(n) == expected
    assert factorial(20) == 2432902008176640000


def test_factorial_negative():
    with pytest.raises(DomainError):
        factorial(-1)


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (2, 3, 0), (6, 3, _pascal(6, 3)), (5, -1, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_pascal():
    for n in range(15):
        for k in range(-2, n + 3):
            assert binomial(n, k) == _pascal(n, k)


def test_binomial_negative_upper():
    with pytest.raises(DomainError):
        binomial(-1, 0)


@pytest.mark.parametrize("total,parts,expected", [(2, [1, 1, 0], 2), (0, [0, 0, 0], 1), (3, [1, 1, 1], 6)])
def test_multinomial(total, parts, expected):
    assert multinomial(total, parts) == expected


def test_multinomial_mismatch():
    with pytest.raises(DomainError):
        multinomial(3, [1, 1])


def _compositions(t, k):
    if k == 1:
        yield [t]
        return
    for a in range(t + 1):
        for rest in _compositions(t - a, k - 1):
            yield [a] + rest


def test_multinomial_is_product_of_factorial_ratio():
    for t in range(11):
        for k in (1, 2, 3):
            for parts in _compositions(t, k):
                den = 1
                for p in parts:
                    den *= _product(p)
                assert multinomial(t, parts) == _product(t) // den


@pytest.mark.parametrize("b,e,expected", [(4, -2, Fraction(1, 16)), (3, 0, 1), (5, 3, 125)])
def test_ipow(b, e, expected):
    assert ipow(b, e) == expected
    assert isinstance(ipow(b, e), Fraction)


def test_ipow_zero_negative():
    with pytest.raises(DomainError):
        ipow(0, -1)


@given(st.integers(-50, 50).filter(bool), st.integers(-8, 8))
def test_ipow_inverse(b, e):
    assert ipow(b, e) * ipow(b, -e) == 1


def test_as_text():
    assert as_text(Fraction(3, 6)) == "1/2"
    assert as_text(Fraction(-4, 2)) == "-2"
    assert as_text(7) == "7"
