"""Exact verification of the combinatorial identities behind the node-class
degree: the split-sum identity over ordered set splits, its dependence on
the total sum only, Abel set polynomials and the classical Abel identity.

Checks are exact: either by expanding both sides as :class:`SparsePoly`
after clearing denominators, or by evaluating at rational points drawn
from a seeded generator.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DomainError, ResourceError
from .exactnum import binomial, ipow
from .polys import SparsePoly

__all__ = [
    "set_splits",
    "kazarian_lhs",
    "kazarian_rhs",
    "kazarian_difference",
    "kazarian_cleared_polys",
    "kazarian_cleared_check",
    "kazarian_random_check",
    "l42_sum_dependence_check",
    "l42_shift_check",
    "abel_set_poly",
    "abel_set_binomial_check",
    "abel_set_binomial_symbolic",
    "abel_classical_polys",
    "abel_classical_check",
    "split_coefficient_identity",
    "random_point",
    "CheckOutcome",
]

MAX_M_SYMBOLIC = 7
MAX_M_ABEL_SYMBOLIC = 6
MAX_N_ABEL_CLASSICAL = 12


@dataclass(frozen=True)
class CheckOutcome:
    passed: bool
    checked: int
    counterexample: dict | None = None


def set_splits(m: int, proper: bool = True) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Ordered splits ``I ⊔ J = {0..m-1}``, as index tuples."""
    full = (1 << m) - 1
    for mask in range(full + 1):
        if proper and (mask == 0 or mask == full):
            continue
        I = tuple(i for i in range(m) if mask >> i & 1)
        J = tuple(i for i in range(m) if not mask >> i & 1)
        yield I, J


def _as_point(t: Sequence) -> list[Fraction]:
    return [Fraction(x) for x in t]


def _require_nonzero(t: Sequence[Fraction]) -> None:
    if any(x == 0 for x in t):
        raise DomainError(f"variables must be nonzero: {t}")


def kazarian_lhs(t: Sequence) -> Fraction:
    """Sum over ordered proper splits of ``t_I^(|I|-2) t_J^(|J|-2)``."""
    t = _as_point(t)
    if len(t) < 2:
        raise DomainError("need at least two variables")
    _require_nonzero(t)
    total = Fraction(0)
    for I, J in set_splits(len(t)):
        tI = sum((t[i] for i in I), Fraction(0))
        tJ = sum((t[j] for j in J), Fraction(0))
        total += ipow(tI, len(I) - 2) * ipow(tJ, len(J) - 2)
    return total


def kazarian_rhs(t: Sequence) -> Fraction:
    """``t_M^(m-4) (2 t_M sum(1/t_i) - (m-2)(m-3))``."""
    t = _as_point(t)
    m = len(t)
    if m < 2:
        raise DomainError("need at least two variables")
    _require_nonzero(t)
    tM = sum(t, Fraction(0))
    if tM == 0 and m < 4:
        raise DomainError("total must be nonzero when fewer than four variables")
    recip = sum((1 / x for x in t), Fraction(0))
    return ipow(tM, m - 4) * (2 * tM * recip - (m - 2) * (m - 3))


def kazarian_difference(t: Sequence) -> Fraction:
    """Split sum minus ``2 t_M^(m-3) sum(1/t_i)``; a polynomial in t_M only."""
    t = _as_point(t)
    m = len(t)
    tM = sum(t, Fraction(0))
    if tM == 0 and m < 3:
        raise DomainError("total must be nonzero when fewer than three variables")
    recip = sum((1 / x for x in t), Fraction(0))
    return kazarian_lhs(t) - 2 * ipow(tM, m - 3) * recip


# symbolic ------------------------------------------------------------------


def kazarian_cleared_polys(m: int) -> tuple[SparsePoly, SparsePoly]:
    """Both sides of the split-sum identity multiplied by ``prod t_i`` and,
    when m < 4, by ``t_M^(4-m)``, expanded in variables t_0..t_{m-1}."""
    if not 2 <= m <= MAX_M_SYMBOLIC:
        raise ResourceError(f"symbolic expansion supports 2 <= m <= {MAX_M_SYMBOLIC}, got {m}")
    extra = max(0, 4 - m)

    @lru_cache(maxsize=None)
    def power(mask: int, e: int) -> SparsePoly:
        # (sum of t_i over mask) ** e, memoized per call
        if e == 0:
            return SparsePoly.constant(m, 1)
        lin = SparsePoly.linear(m, {i: 1 for i in range(m) if mask >> i & 1})
        return power(mask, e - 1) * lin

    full = (1 << m) - 1
    lhs = SparsePoly(m)
    for mask in range(1, full):
        rest = full ^ mask
        exps = [1] * m
        factor = SparsePoly.constant(m, 1)
        for sub in (mask, rest):
            size = bin(sub).count("1")
            if size == 1:
                exps[sub.bit_length() - 1] -= 1
            else:
                factor = factor * power(sub, size - 2)
        lhs = lhs + SparsePoly.monomial(m, exps) * factor * power(full, extra)

    cofactors = SparsePoly(m)
    for i in range(m):
        exps = [1] * m
        exps[i] = 0
        cofactors = cofactors + SparsePoly.monomial(m, exps)
    prod_all = SparsePoly.monomial(m, [1] * m)
    rhs = power(full, m - 4 + extra) * (
        2 * power(full, 1) * cofactors - (m - 2) * (m - 3) * prod_all
    )
    return lhs, rhs


def kazarian_cleared_check(m: int) -> bool:
    lhs, rhs = kazarian_cleared_polys(m)
    return lhs == rhs


def random_point(rng: random.Random, m: int, span: int = 9) -> list[Fraction]:
    """Nonzero rationals with numerators and denominators bounded by `span`."""
    out = []
    while len(out) < m:
        num = rng.randint(-span, span)
        if num:
            out.append(Fraction(num, rng.randint(1, span)))
    return out


def kazarian_random_check(m: int, count: int = 200, seed: int = 0) -> CheckOutcome:
    rng = random.Random(f"kazarian:{m}:{seed}")
    checked = 0
    while checked < count:
        t = random_point(rng, m)
        if sum(t) == 0:
            continue
        lhs, rhs = kazarian_lhs(t), kazarian_rhs(t)
        checked += 1
        if lhs != rhs:
            return CheckOutcome(False, checked, {"t": t, "lhs": lhs, "rhs": rhs})
    return CheckOutcome(True, checked)


def l42_sum_dependence_check(samples: Sequence[tuple[Sequence, Sequence]]) -> bool:
    """The difference expression agrees on each pair of points sharing
    length and total."""
    for a, b in samples:
        a, b = _as_point(a), _as_point(b)
        if len(a) != len(b) or sum(a) != sum(b):
            raise DomainError(f"pair {a}, {b} differs in length or total")
        if kazarian_difference(a) != kazarian_difference(b):
            return False
    return True


def l42_shift_check(t: Sequence, h, i: int, j: int) -> bool:
    """Shifting t_i by h or t_j by h changes the difference equally."""
    t = _as_point(t)
    ti, tj = list(t), list(t)
    ti[i] += h
    tj[j] += h
    return kazarian_difference(ti) == kazarian_difference(tj)


# Abel polynomials -----------------------------------------------------------


def abel_set_poly(size: int, t_sum, x) -> Fraction:
    """``x (x + t_M)^(|M|-1)``; the empty set gives 1."""
    x = Fraction(x)
    if size < 0:
        raise DomainError(f"negative set size {size}")
    if size == 0:
        if x == 0:
            raise DomainError("empty-set Abel polynomial needs x != 0")
        return Fraction(1)
    return x * (x + Fraction(t_sum)) ** (size - 1)


def abel_set_binomial_check(m: int, t: Sequence, x, y) -> bool:
    """Evaluate ``sum (P_I(x)/x)(P_J(y)/y) == P_M(x+y)/(xy)`` over all
    ordered splits of M = {0..m-1}, empty parts allowed."""
    t = _as_point(t)
    if m != len(t):
        raise DomainError(f"expected {m} values, got {len(t)}")
    x, y = Fraction(x), Fraction(y)
    if x == 0 or y == 0 or x + y == 0:
        raise DomainError("x, y and x + y must be nonzero")
    lhs = Fraction(0)
    for I, J in set_splits(len(t), proper=False):
        tI = sum((t[i] for i in I), Fraction(0))
        tJ = sum((t[j] for j in J), Fraction(0))
        lhs += abel_set_poly(len(I), tI, x) / x * abel_set_poly(len(J), tJ, y) / y
    rhs = abel_set_poly(len(t), sum(t, Fraction(0)), x + y) / (x * y)
    return lhs == rhs


def abel_set_binomial_symbolic(m: int) -> bool:
    """Same identity multiplied by xy, expanded in t_0..t_{m-1}, x, y."""
    if not 0 <= m <= MAX_M_ABEL_SYMBOLIC:
        raise ResourceError(f"symbolic Abel check supports m <= {MAX_M_ABEL_SYMBOLIC}, got {m}")
    nv = m + 2
    X = SparsePoly.var(nv, m)
    Y = SparsePoly.var(nv, m + 1)

    def P(indices: Sequence[int], arg: SparsePoly) -> SparsePoly:
        if not indices:
            return SparsePoly.constant(nv, 1)
        tI = SparsePoly.linear(nv, {i: 1 for i in indices})
        return arg * (arg + tI) ** (len(indices) - 1)

    lhs = SparsePoly(nv)
    for I, J in set_splits(m, proper=False):
        lhs = lhs + P(I, X) * P(J, Y)
    return lhs == P(tuple(range(m)), X + Y)


def abel_classical_polys(n: int) -> tuple[SparsePoly, SparsePoly]:
    """Both sides of the classical Abel binomial identity in x, y."""
    if not 1 <= n <= MAX_N_ABEL_CLASSICAL:
        raise ResourceError(f"classical Abel check supports 1 <= n <= {MAX_N_ABEL_CLASSICAL}, got {n}")
    X, Y = SparsePoly.var(2, 0), SparsePoly.var(2, 1)

    def A(arg: SparsePoly, k: int) -> SparsePoly:
        # arg (arg + k)^(k-1), with A_0 = 1
        if k == 0:
            return SparsePoly.constant(2, 1)
        return arg * (arg + k) ** (k - 1)

    lhs = A(X + Y, n)
    rhs = SparsePoly(2)
    for i in range(n + 1):
        rhs = rhs + binomial(n, i) * A(X, i) * A(Y, n - i)
    return lhs, rhs


def abel_classical_check(n: int) -> bool:
    lhs, rhs = abel_classical_polys(n)
    return lhs == rhs


def split_coefficient_identity(m: int) -> tuple[Fraction, Fraction]:
    """``sum_{i+j=m, i,j>=1} C(m,i) i^(i-2) j^(j-2)`` and
    ``m^(m-4) (m^2 + 5m - 6)``, computed independently."""
    if m < 2:
        raise DomainError(f"need m >= 2, got {m}")
    lhs = sum(
        (binomial(m, i) * ipow(i, i - 2) * ipow(m - i, m - i - 2) for i in range(1, m)),
        Fraction(0),
    )
    rhs = ipow(m, m - 4) * (m * m + 5 * m - 6)
    return lhs, rhs
