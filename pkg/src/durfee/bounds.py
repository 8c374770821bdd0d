"""Bound coefficients for Durfee-type inequalities, with their certificates.

The central object is the exact rational

    C(n, r) = binomial(n+r-1, n) / S(n, r),
    S(n, r) = sum over weak compositions (k_1..k_r) of n of prod 1/(k_i+1)!,

the limiting value of mu / p_g along equal degrees p -> infinity.  S(n, r)
collapses to stirling2(n+r, r) * r! / (n+r)!, which gives the closed form

    C(n, r) = binomial(n+r-1, n) * (n+r)! / (stirling2(n+r, r) * r!).

C(n, 1) = (n+1)! recovers the classical strong Durfee coefficient; for
fixed n the sequence is non-increasing in r and approaches 2^n from above.
The monotonicity certificate lives here too: a growth inequality between
neighbouring Stirling numbers, itself certified by coefficientwise
dominance of exponential generating functions ((e^x - 1) dominates
x e^(x/2), and (e^x - 1)^2 dominates x^2 e^x).

The module also carries the two auxiliary composition sums used to compare
mu against p_g termwise: a power sum prod (p_i - 1)^(k_i) on the mu side
and a falling-factorial sum prod (p_i-1)(p_i-2)..(p_i-k_i) on the genus
side, together with their recursion and comparison checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .exactmath import (
    CrossCheckError,
    binomial,
    compositions,
    falling_factorial,
    stirling2,
)
from .series import TruncatedSeries, exp_series, one, poly


def composition_factorial_sum(n: int, r: int) -> Fraction:
    """S(n, r): the weak-composition sum of prod 1/(k_i + 1)!.

    Evaluated as the x^n coefficient of ((e^x - 1)/x)^r, which is the same
    sum reorganized as an r-fold convolution; literal enumeration has
    C(n+r-1, n) terms and is hopeless already around n + r = 30.  The
    Stirling closed form below is the independent route.
    """
    if n < 0 or r < 0:
        raise ValueError("expected n >= 0 and r >= 0")
    base = TruncatedSeries([Fraction(1, factorial(k + 1)) for k in range(n + 1)], n)
    return (base**r).coefficient(n)


def stirling_factorial_sum(n: int, r: int) -> Fraction:
    """S(n, r) via the closed form stirling2(n+r, r) * r! / (n+r)!."""
    if n < 0 or r < 0:
        raise ValueError("expected n >= 0 and r >= 0")
    return Fraction(stirling2(n + r, r) * factorial(r), factorial(n + r))


@dataclass(frozen=True)
class BoundCoefficient:
    """One exact bound coefficient C(n, r) with its floor invariants."""

    n: int
    r: int
    value: Fraction

    def __post_init__(self):
        if self.value <= 0:
            raise CrossCheckError(f"bound coefficient C({self.n},{self.r}) not positive")
        if self.value < 2**self.n:
            raise CrossCheckError(
                f"bound coefficient C({self.n},{self.r}) = {self.value} below floor 2^{self.n}"
            )


def bound_coefficient(n: int, r: int) -> Fraction:
    """C(n, r) as an exact rational, by the Stirling closed form."""
    if n < 1 or r < 1:
        raise ValueError("expected n >= 1 and r >= 1")
    return Fraction(
        binomial(n + r - 1, n) * factorial(n + r), stirling2(n + r, r) * factorial(r)
    )


def asymptotic_ratio(n: int, r: int) -> Fraction:
    """Exact limit of mu / p_g along equal degrees p -> infinity.

    For n = 2 and n = 3 the limit has elementary closed forms,
    4(r+1)/(r + 1/3) and 8(r+2)/r; both coincide with C(n, r), so this is
    one more independent route to the same rational.
    """
    if n < 1 or r < 1:
        raise ValueError("expected n >= 1 and r >= 1")
    if n == 2:
        return Fraction(12 * (r + 1), 3 * r + 1)
    if n == 3:
        return Fraction(8 * (r + 2), r)
    return bound_coefficient(n, r)


def monotone_scan(n: int, r_max: int) -> list[BoundCoefficient]:
    """C(n, 1..r_max), asserting the chain is non-increasing with floor 2^n."""
    if n < 1 or r_max < 1:
        raise ValueError("expected n >= 1 and r_max >= 1")
    out: list[BoundCoefficient] = []
    previous = None
    for r in range(1, r_max + 1):
        coeff = BoundCoefficient(n, r, bound_coefficient(n, r))
        if previous is not None and coeff.value > previous:
            raise CrossCheckError(
                f"C({n},{r}) = {coeff.value} exceeds C({n},{r-1}) = {previous}"
            )
        previous = coeff.value
        out.append(coeff)
    return out


def multinomial_recursion_check(n: int, r: int) -> bool:
    """Check r^(n+r)/(n+r)! = sum_j binomial(r, j) S(n+j, r-j).

    The left side is the n+r coefficient sum of the multinomial expansion
    of (x_1 + .. + x_r)^(n+r)/(n+r)! with every x_i = 1, the right side
    groups terms by how many parts are zero; S(m, 0) is 1 for m = 0 and 0
    otherwise, matching the empty composition.
    """
    if n < 0 or r < 1:
        raise ValueError("expected n >= 0 and r >= 1")
    lhs = Fraction(r ** (n + r), factorial(n + r))
    rhs = sum(
        binomial(r, j) * composition_factorial_sum(n + j, r - j) for j in range(r + 1)
    )
    return lhs == rhs


def stirling_growth_inequality(n: int, r: int) -> bool:
    """stirling2(n+r+1, r+1) r (r+1) >= stirling2(n+r, r) (n+r) (n+r+1).

    This is exactly what C(n, r) >= C(n, r+1) unwinds to after clearing
    factorials, so it certifies the monotone scan from the Stirling side.
    """
    if n < 1 or r < 1:
        raise ValueError("expected n >= 1 and r >= 1")
    lhs = stirling2(n + r + 1, r + 1) * r * (r + 1)
    rhs = stirling2(n + r, r) * (n + r) * (n + r + 1)
    return lhs >= rhs


def dominance_inequality_checks(order: int = 64, nr_max: int = 8) -> bool:
    """Certify the generating-function dominances and the Stirling growth.

    Checks coefficientwise, through the given truncation order, that
    e^x - 1 dominates x e^(x/2) and that (e^x - 1)^2 dominates x^2 e^x,
    then re-derives the Stirling growth inequality for all n, r <= nr_max
    by direct evaluation.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    e1 = exp_series(1, order) - one(order)
    half = poly([0, 1], order) * exp_series(Fraction(1, 2), order)
    if not e1.dominates(half):
        return False
    if not (e1 * e1).dominates(poly([0, 0, 1], order) * exp_series(1, order)):
        return False
    return all(
        stirling_growth_inequality(n, r)
        for n in range(1, nr_max + 1)
        for r in range(1, nr_max + 1)
    )


def min_product_bound(n: int, r: int) -> int:
    """min over weak compositions (k_i) of n of prod (k_i + 1)!, enumerated."""
    if n < 2 or r < 1:
        raise ValueError("expected n >= 2 and r >= 1")
    return min(
        prod(factorial(k + 1) for k in comp) for comp in compositions(n, r)
    )


def balanced_min_product(n: int, r: int) -> int:
    """Closed form of the minimum: parts as equal as possible.

    With n = a r + b, 0 <= b < r, the balanced composition gives
    ((a+1)!)^(r-b) ((a+2)!)^b.
    """
    if n < 1 or r < 1:
        raise ValueError("expected n >= 1 and r >= 1")
    a, b = divmod(n, r)
    return factorial(a + 1) ** (r - b) * factorial(a + 2) ** b


def power_composition_sum(m: int, degrees: tuple[int, ...]) -> int:
    """Sum over weak compositions (k_i) of m of prod (p_i - 1)^(k_i)."""
    if m < 0:
        raise ValueError("expected m >= 0")
    return sum(
        prod((p - 1) ** k for p, k in zip(degrees, comp))
        for comp in compositions(m, len(degrees))
    )


def falling_composition_sum(m: int, degrees: tuple[int, ...]) -> int:
    """Sum over weak compositions (k_i) of m of prod (p_i-1)(p_i-2)..(p_i-k_i).

    An empty degree list is allowed and follows the empty-composition
    convention: 1 for m = 0, else 0.  Termwise this sum is dominated by the
    power sum above, which is what makes the product bound on mu work.
    """
    if m < 0:
        raise ValueError("expected m >= 0")
    return sum(
        prod(falling_factorial(p - 1, k) for p, k in zip(degrees, comp))
        for comp in compositions(m, len(degrees))
    )


def falling_sum_recursion_check(n: int, degrees: tuple[int, ...]) -> bool:
    """Peeling the last degree out of the falling sum is exact.

    Checks D_n(p_1..p_r) - D_n(p_1..p_(r-1)) = (p_r - 1) D_(n-1)(p_1..p_(r-1), p_r - 1)
    where D is falling_composition_sum.
    """
    degrees = tuple(degrees)
    if n < 1 or not degrees:
        raise ValueError("expected n >= 1 and at least one degree")
    prefix, last = degrees[:-1], degrees[-1]
    lhs = falling_composition_sum(n, degrees) - falling_composition_sum(n, prefix)
    rhs = (last - 1) * falling_composition_sum(n - 1, prefix + (last - 1,))
    return lhs == rhs


def composition_sum_inequality(n: int, degrees: tuple[int, ...]) -> bool:
    """Power sum >= falling sum at n plus falling sum at n-1, termwise-driven.

    Holds from n = 2 on, which is all the product bound needs; at n = 1
    the two sides compare the other way and the check honestly reports
    False.
    """
    degrees = tuple(degrees)
    if n < 1 or not degrees:
        raise ValueError("expected n >= 1 and at least one degree")
    lhs = power_composition_sum(n, degrees)
    rhs = falling_composition_sum(n, degrees) + falling_composition_sum(n - 1, degrees)
    return lhs >= rhs
