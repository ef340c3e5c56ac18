"""Counting permutation factorizations: the ground truth for Hurwitz numbers.

A Hurwitz number is the number of transitive tuples ``(g_1, ..., g_s)`` of
permutations with prescribed cycle types and ``g_1 ... g_s = 1``, divided
by n!. Two independent counters are provided:

* ``sieve``: Frobenius character formula for all tuples, then removal of
  the intransitive ones by conditioning on the orbit of the point 1.
* ``dfs``: exhaustive enumeration over group elements, merging search
  states that share the same partial product and orbit partition.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import comb, factorial, prod
from typing import Iterable, Sequence

from .errors import ConsistencyError, DomainError, ParseError, ResourceError
from .partitions import Partition, class_size, enumerate_partitions, ordered_splits, parse

__all__ = [
    "ClassTuple",
    "CharacterTable",
    "MAX_N",
    "MAX_N_DFS",
    "character",
    "character_table",
    "product_count",
    "transitive_count",
    "dfs_product_count",
    "hurwitz_oracle",
    "riemann_hurwitz_genus",
    "parse_classes",
]

MAX_N = 12
MAX_N_DFS = 6


@dataclass(frozen=True)
class ClassTuple:
    """Ordered list of cycle types, all partitions of the same n."""

    classes: tuple[Partition, ...]

    def __init__(self, classes: Iterable[Partition]):
        classes = tuple(classes)
        if not classes:
            raise DomainError("class tuple must be nonempty")
        sizes = {c.size for c in classes}
        if len(sizes) != 1:
            raise DomainError(f"classes partition different n: {sorted(sizes)}")
        object.__setattr__(self, "classes", classes)

    @property
    def n(self) -> int:
        return self.classes[0].size

    def __len__(self) -> int:
        return len(self.classes)


def parse_classes(text: str) -> ClassTuple:
    """``"3,1;2,1,1;2,1,1"`` -> ClassTuple. Each item uses partition syntax."""
    items = [s for s in text.split(";") if s.strip()]
    if not items:
        raise ParseError(f"no classes in {text!r}")
    return ClassTuple(parse(s) for s in items)


# ---------------------------------------------------------------------------
# characters


def _beta_set(lam: tuple[int, ...]) -> tuple[int, ...]:
    L = len(lam)
    return tuple(lam[i] + (L - 1 - i) for i in range(L))


def _from_beta(beta: Iterable[int]) -> tuple[int, ...]:
    b = sorted(beta, reverse=True)
    L = len(b)
    return tuple(p for p in (b[i] - (L - 1 - i) for i in range(L)) if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    # Murnaghan-Nakayama: strip rim hooks of length rho[0] via beta-numbers.
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    beta = _beta_set(lam)
    members = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in members:
            continue
        height = sum(1 for c in beta if t < c < b)
        new = _from_beta((members - {b}) | {t})
        total += (-1) ** height * _mn(new, rest)
    return total


def character(irrep: Partition, cls: Partition) -> int:
    """Irreducible character of the symmetric group at a cycle type."""
    if irrep.size != cls.size:
        raise DomainError(f"{irrep} and {cls} are partitions of different n")
    return _mn(irrep.parts, cls.parts)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    values: dict  # (irrep, class) -> int

    def __call__(self, irrep: Partition, cls: Partition) -> int:
        return self.values[(irrep, cls)]

    def dimension(self, irrep: Partition) -> int:
        return self.values[(irrep, Partition([1] * self.n))]


@lru_cache(maxsize=None)
def character_table(n: int, bound: int = MAX_N) -> CharacterTable:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > bound:
        raise ResourceError(f"character table for n = {n} exceeds bound {bound}")
    parts = tuple(enumerate_partitions(n))
    values = {(lam, mu): _mn(lam.parts, mu.parts) for lam in parts for mu in parts}
    return CharacterTable(n, parts, values)


# ---------------------------------------------------------------------------
# counting


def _canon(classes: Sequence[Partition]) -> tuple[Partition, ...]:
    return tuple(sorted(classes, reverse=True))


def product_count(t: ClassTuple, bound: int = MAX_N) -> int:
    """Number of tuples g_i in class C_i with product equal to the identity."""
    return _product_count(_canon(t.classes), bound)


@lru_cache(maxsize=None)
def _product_count(classes: tuple[Partition, ...], bound: int) -> int:
    n = classes[0].size
    table = character_table(n, bound)
    s = len(classes)
    total = Fraction(0)
    for lam in table.partitions:
        dim = table.dimension(lam)
        term = Fraction(prod(table(lam, c) for c in classes))
        total += term / Fraction(dim) ** (s - 2)
    total *= Fraction(prod(class_size(c) for c in classes), factorial(n))
    if total.denominator != 1:
        raise ConsistencyError(f"non-integral Frobenius count {total} for {classes}")
    return int(total)


def transitive_count(t: ClassTuple, method: str = "sieve", bound: int = MAX_N) -> int:
    """Number of product-one tuples generating a transitive subgroup."""
    n = t.n
    if method == "dfs":
        if n > MAX_N_DFS:
            raise ResourceError(f"dfs is limited to n <= {MAX_N_DFS}, got {n}")
        return _dfs_count(tuple(t.classes))[1]
    if method == "sieve":
        if n > bound:
            raise ResourceError(f"sieve is limited to n <= {bound}, got {n}")
        return _transitive_sieve(_canon(t.classes), bound)
    raise DomainError(f"unknown method {method!r}")


def _split_options(c: Partition, k: int) -> list[tuple[Partition, Partition]]:
    return [(sp.left, sp.right) for sp in ordered_splits(c, proper=True) if sp.left.size == k]


@lru_cache(maxsize=None)
def _transitive_sieve(classes: tuple[Partition, ...], bound: int) -> int:
    n = classes[0].size
    total = _product_count(classes, bound)
    if n == 1:
        return total
    groups = sorted(Counter(classes).items(), reverse=True)
    for k in range(1, n):
        # Orbit O of the point 1 has size k; the tuple restricts to a
        # transitive tuple on O and an arbitrary tuple on the complement.
        per_group = []
        for cls, count in groups:
            opts = _split_options(cls, k)
            if not opts:
                break
            choices = []
            for combo in combinations_with_replacement(range(len(opts)), count):
                weight = factorial(count)
                for v in Counter(combo).values():
                    weight //= factorial(v)
                choices.append((weight, [opts[i] for i in combo]))
            per_group.append(choices)
        else:
            inner = 0
            for picks in product(*per_group):
                weight = prod(w for w, _ in picks)
                inside = _canon([a for _, pairs in picks for a, _ in pairs])
                outside = _canon([b for _, pairs in picks for _, b in pairs])
                inner += weight * _transitive_sieve(inside, bound) * _product_count(outside, bound)
            total -= comb(n - 1, k - 1) * inner
    if total < 0:
        raise ConsistencyError(f"negative transitive count for {classes}")
    return total


# exhaustive enumeration ----------------------------------------------------


@lru_cache(maxsize=None)
def _group(n: int):
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (a*b)(x) = a(b(x)): apply b first
    mul = [[index[tuple(a[b[x]] for x in range(n))] for b in perms] for a in perms]
    inv = [index[tuple(sorted(range(n), key=lambda x: p[x]))] for p in perms]
    ctype = [Partition(_cycle_lengths(p)) for p in perms]
    labels = [_orbit_labels(p) for p in perms]
    by_class = defaultdict(list)
    for i, c in enumerate(ctype):
        by_class[c].append(i)
    return perms, mul, inv, ctype, labels, dict(by_class)


def _cycle_lengths(p: tuple[int, ...]) -> list[int]:
    seen, out = set(), []
    for s in range(len(p)):
        if s in seen:
            continue
        length, x = 0, s
        while x not in seen:
            seen.add(x)
            x = p[x]
            length += 1
        out.append(length)
    return out


def _orbit_labels(p: tuple[int, ...]) -> tuple[int, ...]:
    # each point is labeled by the minimum of its cycle
    out = list(range(len(p)))
    for s in range(len(p)):
        x, m = p[s], s
        while x != s:
            m = min(m, x)
            x = p[x]
        out[s] = m
    return tuple(out)


@lru_cache(maxsize=None)
def _join(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    parent = list(range(len(a)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lab in (a, b):
        for x, r in enumerate(lab):
            rx, rr = find(x), find(r)
            if rx != rr:
                parent[max(rx, rr)] = min(rx, rr)
    return tuple(find(x) for x in range(len(a)))


@lru_cache(maxsize=None)
def _states(prefix: tuple[Partition, ...]) -> dict:
    """Map (partial product, orbit labels) -> number of prefixes reaching it."""
    n = prefix[0].size if prefix else None
    if len(prefix) == 0:
        raise DomainError("empty prefix")
    _, mul, _, _, labels, by_class = _group(n)
    if len(prefix) == 1:
        out: dict = defaultdict(int)
        for g in by_class.get(prefix[0], []):
            out[(g, labels[g])] += 1
        return dict(out)
    out = defaultdict(int)
    for (g, lab), cnt in _states(prefix[:-1]).items():
        for h in by_class.get(prefix[-1], []):
            out[(mul[g][h], _join(lab, labels[h]))] += cnt
    return dict(out)


def _dfs_count(classes: tuple[Partition, ...]) -> tuple[int, int]:
    """(all, transitive) product-one tuple counts by exhaustive search."""
    n = classes[0].size
    _, _, inv, ctype, labels, _ = _group(n)
    connected = tuple([0] * n)
    if len(classes) == 1:
        identity = Partition([1] * n)
        count = int(classes[0] == identity)
        return count, count if n == 1 else 0
    every = transitive = 0
    last = classes[-1]
    for (g, lab), cnt in _states(classes[:-1]).items():
        # the last element is forced to be the inverse of the prefix product
        if ctype[inv[g]] != last:
            continue
        every += cnt
        if _join(lab, labels[inv[g]]) == connected:
            transitive += cnt
    return every, transitive


def dfs_product_count(t: ClassTuple) -> int:
    """Exhaustive count of all product-one tuples (no transitivity)."""
    if t.n > MAX_N_DFS:
        raise ResourceError(f"dfs is limited to n <= {MAX_N_DFS}, got {t.n}")
    return _dfs_count(tuple(t.classes))[0]


def riemann_hurwitz_genus(t: ClassTuple) -> int | None:
    """Genus of a connected cover with these branch profiles, or None when
    the total branching is odd (no such cover exists)."""
    n = t.n
    branching = sum(n - c.length for c in t.classes)
    chi2 = 2 * n - branching  # equals 2 - 2g
    if chi2 % 2:
        return None
    return (2 - chi2) // 2


def hurwitz_oracle(t: ClassTuple, method: str = "sieve") -> tuple[Fraction, int | None]:
    """Hurwitz number (weighted count of connected covers) and genus."""
    g = riemann_hurwitz_genus(t)
    if g is None or g < 0:
        return Fraction(0), g
    return Fraction(transitive_count(t, method), factorial(t.n)), g
