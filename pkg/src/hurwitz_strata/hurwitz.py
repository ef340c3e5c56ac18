"""Closed-form genus-0 double Hurwitz numbers obtained from stratum degrees.

Two conversions from a degree to a Hurwitz number are offered:

``printed``
    ``|Aut(kappa, mu)| * r! / n! * deg``, where ``|Aut(kappa, mu)|`` counts
    coinciding profiles in the list.
``calibrated``
    ``r! * deg / |Aut(kappa)|``; this is the variant that agrees with the
    factorization count whenever kappa has repeated parts other than 1^n.

The two agree when kappa = 1^n and mu != 1^n.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from .errors import DomainError
from .exactnum import ipow
from .partitions import Partition, aut_order, prod_weight
from .strata import StratumKind, caustic_degree, maxwell_degree

__all__ = [
    "CoveringSpec",
    "HurwitzResult",
    "MODES",
    "simple_count",
    "aut_of_list",
    "degree_to_hurwitz",
    "corollary_caustic",
    "corollary_maxwell",
    "closed_hurwitz",
    "elsv_reference",
    "oracle_classes",
]

MODES = ("printed", "calibrated")


def simple_count(kappa: Partition, mu: Partition) -> int:
    """Number of simple branch points of a genus-0 cover (Riemann-Hurwitz)."""
    if kappa.size != mu.size:
        raise DomainError(f"profiles {kappa} and {mu} have different degrees")
    r = kappa.length + mu.length - 2
    if r < 0:
        raise DomainError(f"negative simple-branch count for {kappa}, {mu}")
    return r


@dataclass(frozen=True)
class CoveringSpec:
    kappa: Partition
    mu: Partition
    r: int

    @classmethod
    def genus0(cls, kappa: Partition, mu: Partition) -> CoveringSpec:
        return cls(kappa, mu, simple_count(kappa, mu))

    def __post_init__(self):
        if self.kappa.size != self.mu.size:
            raise DomainError(f"profiles {self.kappa} and {self.mu} have different degrees")
        if self.r < 0:
            raise DomainError(f"negative simple-branch count {self.r}")

    @property
    def n(self) -> int:
        return self.kappa.size


@dataclass(frozen=True)
class HurwitzResult:
    value: Fraction
    mode: str
    family: str
    spec: CoveringSpec
    degree: Fraction
    warnings: tuple[str, ...] = field(default=())


def aut_of_list(partitions: Sequence[Partition]) -> int:
    """Product of factorials of the numbers of coinciding partitions."""
    return prod(factorial(c) for c in Counter(partitions).values())


def degree_to_hurwitz(deg: Fraction, spec: CoveringSpec, mode: str = "printed") -> Fraction:
    deg = Fraction(deg)
    if mode == "printed":
        return aut_of_list([spec.kappa, spec.mu]) * factorial(spec.r) * deg / factorial(spec.n)
    if mode == "calibrated":
        return factorial(spec.r) * deg / aut_order(spec.kappa)
    raise DomainError(f"unknown conversion mode {mode!r}")


def closed_hurwitz(family: StratumKind | str, kappa: Partition, mode: str = "printed") -> HurwitzResult:
    """Hurwitz number with poles `kappa` and one caustic or Maxwell value."""
    family = StratumKind(family)
    mu = family.profile(kappa.size)
    deg = caustic_degree(kappa) if family is StratumKind.CAUSTIC else maxwell_degree(kappa)
    spec = CoveringSpec.genus0(kappa, mu)
    value = degree_to_hurwitz(deg, spec, mode)
    warnings = ("negative value: outside plausible validity",) if value < 0 else ()
    return HurwitzResult(value, mode, family.value, spec, deg, warnings)


def corollary_caustic(kappa: Partition) -> Fraction:
    return closed_hurwitz(StratumKind.CAUSTIC, kappa, "printed").value


def corollary_maxwell(kappa: Partition) -> Fraction:
    return closed_hurwitz(StratumKind.MAXWELL, kappa, "printed").value


def elsv_reference(mu: Partition, labeled: bool = False) -> Fraction:
    """Genus-0 single Hurwitz number with one arbitrary profile `mu`.

    ``(n + l - 2)! n^(l-3) prod(m^m / m!)``, divided by ``|Aut mu|`` unless
    the parts of `mu` are labeled.
    """
    n, ell = mu.size, mu.length
    if n < 1:
        raise DomainError("profile must be nonempty")
    h = factorial(n + ell - 2) * ipow(n, ell - 3) * prod_weight(mu)
    return h if labeled else h / aut_order(mu)


def oracle_classes(kappa: Partition, mu: Partition) -> list[Partition]:
    """Branch profiles of the genus-0 covers counted by the closed formulas:
    kappa over infinity, mu over one point, transpositions elsewhere."""
    r = simple_count(kappa, mu)
    transposition = Partition([2] + [1] * (kappa.size - 2))
    return [kappa, mu] + [transposition] * r
