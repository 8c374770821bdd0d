"""Truncated power series with exact rational coefficients.

A series is a dense coefficient list c[0..order] over Fraction; every
operation truncates at the shared order.  Two jobs drive the design:
coefficient extraction from rational generating functions (the Euler
characteristic of the Milnor fiber, the lattice count behind the geometric
genus) and coefficientwise dominance between exponential generating
functions, which is how the bound-coefficient monotonicity is certified.
No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class TruncatedSeries:
    """A power series modulo x^(order+1) over the rationals."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Scalar], order: int):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = cs

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise ValueError(f"coefficient {k} is outside truncation order {self.order}")
        return self.coeffs[k]

    def _aligned(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")
        return other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs!r}, order={self.order})"

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        other = self._aligned(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        other = self._aligned(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([a * other for a in self.coeffs], self.order)
        other = self._aligned(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out, self.order)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "TruncatedSeries":
        return TruncatedSeries([a / scalar for a in self.coeffs], self.order)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if not self.coeffs[0]:
            raise ValueError("series with zero constant term has no inverse")
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * self.order
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc += self.coeffs[i] * out[k - i]
            out[k] = -inv0 * acc
        return TruncatedSeries(out, self.order)

    def __pow__(self, e: int) -> "TruncatedSeries":
        if not isinstance(e, int):
            raise TypeError("series powers must be integers")
        if e < 0:
            return self.inverse() ** (-e)
        result = one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def dominates(self, other: "TruncatedSeries") -> bool:
        """True when every coefficient of self is >= the one of other."""
        other = self._aligned(other)
        return all(a >= b for a, b in zip(self.coeffs, other.coeffs))


def poly(coeffs: Iterable[Scalar], order: int) -> TruncatedSeries:
    """Series from a coefficient list; excess coefficients are truncated away."""
    return TruncatedSeries(coeffs, order)


def one(order: int) -> TruncatedSeries:
    return TruncatedSeries([1], order)


def exp_series(scale: Scalar, order: int) -> TruncatedSeries:
    """exp(scale * x) truncated: coefficients scale^k / k!."""
    s = Fraction(scale)
    return TruncatedSeries([s**k / factorial(k) for k in range(order + 1)], order)
