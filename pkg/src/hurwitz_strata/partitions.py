"""Partitions (Young diagrams) and the diagram operations used by the
degree formulas: automorphism orders, diagram sums and splits.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import DomainError, ParseError

__all__ = [
    "Partition",
    "SplitPair",
    "parse",
    "aut_order",
    "prod_weight",
    "class_size",
    "diagram_sum",
    "ordered_splits",
    "split_multiplicity",
    "enumerate_partitions",
    "submultisets",
]


@dataclass(frozen=True, order=True)
class Partition:
    """A multiset of positive integers, stored non-increasing.

    The empty partition is allowed; it shows up as one side of an
    improper split.
    """

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p < 1 for p in parts):
            raise DomainError(f"partition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> Partition:
        return cls(p for p, c in mult.items() for _ in range(c))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def to_json(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True)
class SplitPair:
    left: Partition
    right: Partition
    multiplicity: int


_EXP_TOKEN = re.compile(r"^(\d+)\^(\d+)$")


def parse(text: str) -> Partition:
    """Read ``"3,1,1"`` or the exponent form ``"1^2 3^1"``.

    Exponent-form tokens may be separated by spaces or commas; a bare
    integer token counts once.

    >>> parse("1^2 3^1")
    Partition((3, 1, 1))
    """
    if not isinstance(text, str) or not text.strip():
        raise ParseError(f"empty partition text {text!r}")
    s = text.strip()
    parts: list[int] = []
    if "^" in s:
        for tok in re.split(r"[\s,]+", s):
            if not tok:
                continue
            m = _EXP_TOKEN.match(tok)
            if m:
                part, count = int(m.group(1)), int(m.group(2))
            elif tok.isdigit():
                part, count = int(tok), 1
            else:
                raise ParseError(f"bad token {tok!r} in {text!r}")
            if part < 1:
                raise ParseError(f"zero part in {text!r}")
            parts.extend([part] * count)
    else:
        for tok in s.split(","):
            tok = tok.strip()
            if not re.fullmatch(r"-?\d+", tok):
                raise ParseError(f"bad token {tok!r} in {text!r}")
            if int(tok) < 1:
                raise ParseError(f"non-positive part {tok} in {text!r}")
            parts.append(int(tok))
    if not parts:
        raise ParseError(f"no parts in {text!r}")
    return Partition(parts)


def aut_order(p: Partition) -> int:
    """Product over distinct part values of (multiplicity)!."""
    return prod(factorial(c) for c in Counter(p.parts).values())


def prod_weight(p: Partition) -> Fraction:
    """The pole weight ``prod(k**k / k!)`` over the parts."""
    return prod((Fraction(k**k, factorial(k)) for k in p.parts), start=Fraction(1))


def class_size(p: Partition) -> int:
    """Size of the conjugacy class of cycle type `p` in the symmetric group."""
    z = prod(p.parts) * aut_order(p)
    return factorial(p.size) // z


def diagram_sum(a: Partition, b: Partition) -> Partition:
    """Union of the part multisets."""
    return Partition(a.parts + b.parts)


def submultisets(p: Partition) -> Iterator[Partition]:
    """Every sub-multiset of the parts, each distinct diagram once."""
    items = sorted(Counter(p.parts).items(), reverse=True)
    for counts in product(*(range(c + 1) for _, c in items)):
        yield Partition(v for (v, _), c in zip(items, counts) for _ in range(c))


def split_multiplicity(tau: Partition, mu: Partition, lam: Partition) -> int:
    """Number of labeled set splits ``I ⊔ J`` of the parts of `tau` with
    parts(I) = `mu` and parts(J) = `lam`."""
    if diagram_sum(mu, lam) != tau:
        raise DomainError(f"{mu} ⊕ {lam} != {tau}")
    return aut_order(tau) // (aut_order(mu) * aut_order(lam))


def _complement(p: Partition, sub: Partition) -> Partition:
    rest = Counter(p.parts)
    rest.subtract(sub.parts)
    return Partition(rest.elements())


def ordered_splits(p: Partition, proper: bool = True) -> list[SplitPair]:
    """All ordered diagram pairs ``(mu, lam)`` with ``mu ⊕ lam = p``.

    Each distinct pair is listed once per orientation, so a symmetric pair
    such as ((1),(1)) for (1,1) appears once. The attached multiplicity
    counts the labeled set splits realizing the pair.
    """
    return list(_ordered_splits(p, proper))


@lru_cache(maxsize=4096)
def _ordered_splits(p: Partition, proper: bool) -> tuple[SplitPair, ...]:
    out = []
    for mu in submultisets(p):
        lam = _complement(p, mu)
        if proper and (not mu or not lam):
            continue
        out.append(SplitPair(mu, lam, split_multiplicity(p, mu, lam)))
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of `n` in reverse lexicographic order."""
    if n < 1:
        raise DomainError(f"enumerate_partitions needs n >= 1, got {n}")
    return [Partition(parts) for parts in _partitions_bounded(n, n)]


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest
