"""Exact integer and rational primitives.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator, so equality is canonical-form equality.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .errors import DomainError

__all__ = ["Fraction", "factorial", "binomial", "multinomial", "ipow", "as_text"]


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero when k < 0 or k > n.

    Negative `n` is rejected rather than extended to the generalized
    binomial.
    """
    if n < 0:
        raise DomainError(f"binomial with negative upper index {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(total: int, parts: Iterable[int]) -> int:
    """``total! / prod(p! for p in parts)``; the parts must sum to `total`."""
    parts = list(parts)
    if total < 0 or any(p < 0 for p in parts):
        raise DomainError("multinomial arguments must be nonnegative")
    if sum(parts) != total:
        raise DomainError(f"parts {parts} do not sum to {total}")
    out = 1
    remaining = total
    for p in parts:
        out *= math.comb(remaining, p)
        remaining -= p
    return out


def ipow(base: int | Fraction, exponent: int) -> Fraction:
    """Exact power allowing negative exponents (``0**-k`` is an error)."""
    if exponent < 0 and base == 0:
        raise DomainError("zero raised to a negative power")
    return Fraction(base) ** exponent


def as_text(value: int | Fraction) -> str:
    """Serialize an exact value as ``"p/q"``, or ``"p"`` when q == 1."""
    return str(Fraction(value))
