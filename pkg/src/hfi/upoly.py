"""Polynomials in a single variable U over GF(2).

A polynomial is stored as the (frozen) set of exponents with coefficient 1;
addition is symmetric difference, multiplication distributes exponent sums
with parity bookkeeping.  U has degree -2 in every chain complex that uses
these coefficients, but the degree convention lives in the complex, not here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


@dataclass(frozen=True)
class UPoly:
    exps: frozenset[int]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError("U-polynomial with negative exponent")

    @staticmethod
    def zero() -> "UPoly":
        return _ZERO

    @staticmethod
    def one() -> "UPoly":
        return _ONE

    @staticmethod
    def monomial(k: int) -> "UPoly":
        return UPoly(frozenset([k]))

    @staticmethod
    def of(*exps: int) -> "UPoly":
        p = frozenset()
        for e in exps:
            p = p ^ frozenset([e])
        return UPoly(p)

    def __add__(self, other: "UPoly") -> "UPoly":
        return UPoly(self.exps ^ other.exps)

    def __mul__(self, other: "UPoly") -> "UPoly":
        acc: set[int] = set()
        for a, b in product(self.exps, other.exps):
            acc ^= {a + b}
        return UPoly(frozenset(acc))

    def shift(self, k: int) -> "UPoly":
        """Multiply by U^k."""
        return UPoly(frozenset(e + k for e in self.exps))

    def truncate(self, n: int) -> "UPoly":
        """Reduce mod U^n."""
        return UPoly(frozenset(e for e in self.exps if e < n))

    def __bool__(self) -> bool:
        return bool(self.exps)

    def __iter__(self):
        return iter(sorted(self.exps))

    def __str__(self) -> str:
        if not self.exps:
            return "0"
        return " + ".join("1" if e == 0 else f"U^{e}" for e in sorted(self.exps))


_ZERO = UPoly(frozenset())
_ONE = UPoly(frozenset([0]))
