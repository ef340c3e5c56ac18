"""Exact sparse multivariate polynomials over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = ["SparsePoly"]

Monomial = tuple[int, ...]


class SparsePoly:
    """Polynomial in a fixed number of variables.

    Terms map exponent vectors to nonzero Fraction coefficients. Instances
    are treated as immutable once built.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction | int] | None = None):
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong arity for {nvars} variables")
            if c:
                clean[tuple(mono)] = Fraction(c)
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c: Fraction | int) -> SparsePoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> SparsePoly:
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, {tuple(mono): 1})

    @classmethod
    def linear(cls, nvars: int, coeffs: Mapping[int, Fraction | int], const: Fraction | int = 0) -> SparsePoly:
        """``const + sum(c_i * x_i)``."""
        terms: dict[Monomial, Fraction | int] = {(0,) * nvars: const}
        for i, c in coeffs.items():
            mono = [0] * nvars
            mono[i] = 1
            terms[tuple(mono)] = c
        return cls(nvars, terms)

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], c: Fraction | int = 1) -> SparsePoly:
        return cls(nvars, {tuple(exps): c})

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> SparsePoly:
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return SparsePoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> SparsePoly:
        return (-self) + other

    def __mul__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return SparsePoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SparsePoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = SparsePoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison / evaluation -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def __call__(self, point: Sequence[Fraction | int]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for x, e in zip(point, mono):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    def items(self) -> Iterable[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono, c in sorted(self.terms.items(), reverse=True):
            vars_ = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(mono) if e)
            out.append(f"{c}*{vars_}" if vars_ else str(c))
        return " + ".join(out)
