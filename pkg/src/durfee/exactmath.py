"""Exact integer building blocks: binomials, Stirling numbers, compositions.

Everything downstream (invariants, bound coefficients, verdicts) reduces to
integer arithmetic on binomial coefficients, factorials, Stirling numbers of
the second kind and weak compositions.  Python integers are arbitrary
precision and fractions.Fraction keeps rationals in lowest terms with a
positive denominator, so nothing here can overflow or round.
"""

from __future__ import annotations

import math
from typing import Iterator

Composition = tuple[int, ...]


class CrossCheckError(RuntimeError):
    """An internal exactness or consistency check failed.

    Raised when two routes to the same quantity disagree, or when an
    integer division that must be exact is not.  Always indicates a bug in
    the arithmetic, never bad user input; the CLI maps it to exit code 3.
    """


def binomial(m: int, k: int) -> int:
    """C(m, k), with C(m, k) = 0 whenever k > m >= 0."""
    if m < 0 or k < 0:
        raise ValueError("binomial expects non-negative arguments")
    return math.comb(m, k)


def falling_factorial(p: int, k: int) -> int:
    """p (p-1) ... (p-k+1), which is 0 as soon as k exceeds p."""
    if p < 0 or k < 0:
        raise ValueError("falling_factorial expects non-negative arguments")
    return math.perm(p, k)


def stirling2(m: int, r: int) -> int:
    """Stirling number of the second kind, by the alternating binomial sum.

    Computed as sum_j (-1)^j C(r, j) (r - j)^m divided by r!, with the
    divisibility asserted on every call so the defining formula is itself
    under permanent test.  The triangle recurrence stays out of the library
    on purpose; it is the independent oracle in the test suite.
    """
    if m < 0 or r < 0:
        raise ValueError("stirling2 expects non-negative arguments")
    total = sum((-1) ** j * math.comb(r, j) * (r - j) ** m for j in range(r + 1))
    quotient, remainder = divmod(total, math.factorial(r))
    if remainder:
        raise CrossCheckError(
            f"alternating sum for stirling2({m}, {r}) is not divisible by {r}!"
        )
    return quotient


def compositions(n: int, r: int) -> Iterator[Composition]:
    """Yield all weak compositions of n into r ordered parts, lexicographically.

    There are C(n+r-1, n) of them.  Lazy because the verifier walks many
    composition sets and almost never needs one materialized.  r = 0 is
    allowed (the empty composition exists exactly when n = 0); the sum
    recursions rely on that convention.
    """
    if n < 0 or r < 0:
        raise ValueError("compositions expects non-negative arguments")
    if r == 0:
        if n == 0:
            yield ()
        return
    if r == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for tail in compositions(n - head, r - 1):
            yield (head,) + tail
