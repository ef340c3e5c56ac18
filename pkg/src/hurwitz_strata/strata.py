"""Degrees of the codimension-one discriminant strata (caustic and Maxwell)
in genus-0 Hurwitz spaces, the three codimension-two degrees they
specialize to, and a termwise evaluator for the universal class
expressions.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .exactnum import ipow
from .moduli import deg_ppsi, deg_pzeta, delta00_closed
from .partitions import Partition, prod_weight

__all__ = [
    "StratumKind",
    "UniversalCoefficients",
    "DegreeResult",
    "PRINTED_CAUSTIC",
    "RECONCILED_CAUSTIC",
    "PRINTED_MAXWELL",
    "caustic_degree",
    "maxwell_degree",
    "stratum_degree",
    "kl_codim2",
    "universal_degree",
    "xi0sq_implied",
    "specialization_report",
]


class StratumKind(enum.Enum):
    CAUSTIC = "caustic"
    MAXWELL = "maxwell"

    def profile(self, n: int) -> Partition:
        """Ramification profile over the degenerate critical value."""
        if self is StratumKind.CAUSTIC:
            if n < 3:
                raise DomainError(f"caustic profile 1^(n-3)3 needs n >= 3, got {n}")
            return Partition([3] + [1] * (n - 3))
        if n < 4:
            raise DomainError(f"Maxwell profile 1^(n-4)2^2 needs n >= 4, got {n}")
        return Partition([2, 2] + [1] * (n - 4))


@dataclass(frozen=True)
class UniversalCoefficients:
    """Coefficients of p_*zeta, p_*psi, p_*psi^2, delta_{0,0} and xi_0^2."""

    c_zeta: Fraction
    c_psi1: Fraction
    c_psi2: Fraction
    c_delta: Fraction
    c_xi0sq: Fraction

    def __post_init__(self):
        for name in ("c_zeta", "c_psi1", "c_psi2", "c_delta", "c_xi0sq"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


# Caustic expression with the signs as printed next to the universal formula.
PRINTED_CAUSTIC = UniversalCoefficients(-1, 3, 2, -1, 0)
# Sign of p_*zeta flipped; this is the reading that reproduces the closed
# caustic formula (and the enumeration oracle).
RECONCILED_CAUSTIC = UniversalCoefficients(1, 3, 2, -1, 0)
PRINTED_MAXWELL = UniversalCoefficients(-2, -5, -3, 1, Fraction(1, 2))


@dataclass(frozen=True)
class DegreeResult:
    value: Fraction
    formula: str
    kappa: Partition
    warnings: tuple[str, ...] = field(default=())


def _recip(kappa: Partition) -> Fraction:
    return sum((Fraction(1, k) for k in kappa.parts), Fraction(0))


def caustic_degree(kappa: Partition) -> Fraction:
    """Degree of the stratum with a triple critical point."""
    n, m = kappa.size, kappa.length
    if n < 3:
        raise DomainError(f"caustic stratum needs n >= 3, got n = {n}")
    bracket = n * n + n * (3 * (m - 2) - _recip(kappa)) + Fraction(3, 2) * (m - 2) * (m - 3)
    return ipow(n, m - 4) * prod_weight(kappa) * bracket


def maxwell_degree(kappa: Partition) -> Fraction:
    """Degree of the stratum with two double points over one value, as printed.

    Known to disagree with direct enumeration; see ``compare``.
    """
    n, m = kappa.size, kappa.length
    if n < 4:
        raise DomainError(f"Maxwell stratum needs n >= 4, got n = {n}")
    bracket = -2 * n * n + n * (m * m - 5 * (m - 2) + _recip(kappa)) - 2 * (m - 2) * (m - 3)
    return ipow(n, m - 4) * prod_weight(kappa) * bracket


def stratum_degree(kind: StratumKind | str, kappa: Partition) -> DegreeResult:
    kind = StratumKind(kind)
    if kind is StratumKind.CAUSTIC:
        value = caustic_degree(kappa)
        formula = "caustic closed form"
    else:
        value = maxwell_degree(kappa)
        formula = "Maxwell closed form (as printed)"
    warnings = ("negative degree: outside plausible validity",) if value < 0 else ()
    return DegreeResult(value, formula, kappa, warnings)


def kl_codim2(which: int, n: int) -> Fraction:
    """Codimension-two stratum degrees for kappa = 1^n.

    ``which`` selects the pair of degenerate profiles: 1 = caustic/caustic,
    2 = caustic/Maxwell, 3 = Maxwell/Maxwell.
    """
    if which not in (1, 2, 3):
        raise DomainError(f"selector must be 1, 2 or 3, got {which!r}")
    if n < 4:
        raise DomainError(f"codimension-two degrees need n >= 4, got {n}")
    p = ipow(n, n - 6)
    if which == 1:
        return Fraction(3, 8) * p * (27 * n * n - 137 * n + 180)
    if which == 2:
        return 3 * p * (n - 3) * (3 * n * n - 15 * n + 20)
    return 4 * p * (2 * n**3 - 16 * n * n + 43 * n - 40)


def xi0sq_implied(kappa: Partition) -> Fraction:
    """Degree of xi_0^2 back-solved so the universal Maxwell expression
    reproduces the printed Maxwell formula: ``2 m^2 n^(m-3) prod k^k/k!``.

    This is an assumption, not an independently derived value.
    """
    m, n = kappa.length, kappa.size
    return 2 * m * m * ipow(n, m - 3) * prod_weight(kappa)


def universal_degree(
    kappa: Partition, coeffs: UniversalCoefficients, xi0sq_degree: Fraction | int = 0
) -> Fraction:
    """Linear combination of the basic class degrees with the given
    coefficients. The xi_0^2 degree has to be supplied by the caller."""
    return (
        coeffs.c_zeta * deg_pzeta(kappa)
        + coeffs.c_psi1 * deg_ppsi(kappa, 1)
        + coeffs.c_psi2 * deg_ppsi(kappa, 2)
        + coeffs.c_delta * delta00_closed(kappa)
        + coeffs.c_xi0sq * Fraction(xi0sq_degree)
    )


def specialization_report(n_lo: int, n_hi: int) -> list[dict]:
    """Substitute the codimension-one formulas at profiles making kappa a
    degenerate value and compare with the codimension-two degrees.

    Only the caustic check (caustic at kappa = 1^(n-3)3 equals twice the
    first codimension-two degree) is expected to hold; the other rows are
    recorded without being asserted.
    """
    if n_lo < 4 or n_hi < n_lo:
        raise DomainError(f"range must satisfy 4 <= lo <= hi, got {n_lo}..{n_hi}")
    rows = []
    for n in range(n_lo, n_hi + 1):
        c3 = StratumKind.CAUSTIC.profile(n)
        m22 = StratumKind.MAXWELL.profile(n)
        checks = [
            ("caustic", "caustic_degree(1^(n-3)3)", caustic_degree(c3), "2*kl1", 2 * kl_codim2(1, n)),
            ("maxwell", "maxwell_degree(1^(n-4)2^2)", maxwell_degree(m22), "2*kl3", 2 * kl_codim2(3, n)),
            ("cross_caustic_at_maxwell", "caustic_degree(1^(n-4)2^2)", caustic_degree(m22), "kl2", kl_codim2(2, n)),
            ("cross_maxwell_at_caustic", "maxwell_degree(1^(n-3)3)", maxwell_degree(c3), "kl2", kl_codim2(2, n)),
        ]
        for name, lhs_label, lhs, rhs_label, rhs in checks:
            rows.append(
                {
                    "n": n,
                    "check": name,
                    "lhs": lhs_label,
                    "lhs_value": lhs,
                    "rhs": rhs_label,
                    "rhs_value": rhs,
                    "pass": lhs == rhs,
                    "expected": name == "caustic",
                }
            )
    return rows
