"""Degrees of the basic classes on genus-0 Hurwitz spaces.

Covers genus-0 psi-class integrals, the Segre-weighted integral that
pushes a class down to the moduli space, the closed forms for the
push-forwards of zeta and psi powers, and two independent evaluations of
the node class delta_{0,0}.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DomainError
from .exactnum import binomial, ipow, multinomial
from .partitions import Partition, aut_order, ordered_splits, prod_weight

__all__ = [
    "psi_integral",
    "psi_integral_or_zero",
    "exponent_vectors",
    "segre_degree",
    "deg_pzeta",
    "deg_ppsi",
    "delta00_closed",
    "delta00_split_sum",
]


def psi_integral(l: Sequence[int]) -> int:
    """Integral of ``psi_1^l_1 ... psi_m^l_m`` over the moduli space of
    genus-0 curves with m marked points.

    Equals the multinomial coefficient ``(m-3; l_1, ..., l_m)``. The
    exponents must fill the dimension exactly (sum == m - 3); a mismatch
    is treated as a caller bug.

    >>> psi_integral([1, 1, 0, 0, 0])
    2
    """
    l = list(l)
    m = len(l)
    if m < 3:
        raise DomainError(f"moduli space needs at least 3 marked points, got {m}")
    if any(x < 0 for x in l):
        raise DomainError(f"negative psi exponent in {l}")
    if sum(l) != m - 3:
        raise DomainError(f"psi exponents {l} sum to {sum(l)}, dimension is {m - 3}")
    return multinomial(m - 3, l)


def psi_integral_or_zero(l: Sequence[int]) -> int:
    """Total variant of :func:`psi_integral` for series expansion: returns
    0 when the degree does not match the dimension."""
    if len(l) >= 3 and sum(l) != len(l) - 3:
        return 0
    return psi_integral(l)


def exponent_vectors(slots: int, total: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of `total` into `slots` nonnegative parts."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in exponent_vectors(slots - 1, total - first):
            yield (first,) + rest


def segre_degree(kappa: Partition, k: int) -> Fraction:
    """Evaluate the pushforward integral of ``psi_{m+1}^k`` directly.

    Expands ``1/prod(1 - k_i psi_i)`` as a geometric series on the moduli
    space with m + 1 points and sums the psi integrals term by term, then
    applies the pole weight.
    """
    m = kappa.length
    if m < 2:
        raise DomainError("direct integral needs at least two poles")
    if k < 0:
        raise DomainError(f"negative psi power {k}")
    dim = m - 2
    if k > dim:
        return Fraction(0)
    total = 0
    for ls in exponent_vectors(m, dim - k):
        term = psi_integral(ls + (k,))
        for ki, li in zip(kappa.parts, ls):
            term *= ki**li
        total += term
    return prod_weight(kappa) * total


def deg_pzeta(kappa: Partition) -> Fraction:
    """Closed form ``n^(m-2) * prod k^k/k!``, independent of the zeta power."""
    return ipow(kappa.size, kappa.length - 2) * prod_weight(kappa)


def deg_ppsi(kappa: Partition, k: int) -> Fraction:
    m, n = kappa.length, kappa.size
    if k < 0:
        raise DomainError(f"negative psi power {k}")
    c = binomial(m - 2, k) if m >= 2 else 0
    if c == 0:
        return Fraction(0)
    return c * ipow(n, m - 2 - k) * prod_weight(kappa)


def _reciprocal_sum(kappa: Partition) -> Fraction:
    return sum((Fraction(1, k) for k in kappa.parts), Fraction(0))


def delta00_closed(kappa: Partition) -> Fraction:
    """Closed form of the node-class degree."""
    m, n = kappa.length, kappa.size
    bracket = n * _reciprocal_sum(kappa) - Fraction((m - 2) * (m - 3), 2)
    return bracket * ipow(n, m - 4) * prod_weight(kappa)


def delta00_split_sum(kappa: Partition) -> Fraction:
    """Node-class degree as a sum over the ways the poles distribute
    between the two components of a nodal fiber.

    Every ordered pair of nonempty sub-diagrams contributes once per
    orientation; the symmetric overcount is removed by the factor 1/2.
    """
    if kappa.length < 2:
        raise DomainError("split sum needs at least two poles")
    total = Fraction(0)
    for sp in ordered_splits(kappa, proper=True):
        lam, mu = sp.left, sp.right
        total += (ipow(lam.size, lam.length - 2) / aut_order(lam)) * (
            ipow(mu.size, mu.length - 2) / aut_order(mu)
        )
    return total * aut_order(kappa) * prod_weight(kappa) / 2
