"""Milnor number and geometric genus of cones over complete intersections.

The germ is the affine cone over a smooth projective complete intersection
of r generic hypersurfaces of degrees p_1..p_r in P^(N-1), where N = n + r
and n is the dimension of the singularity.  Both invariants admit several
genuinely different exact computations:

  * the Milnor number from an alternating sum of composition products of
    (p_i - 1) powers, or from the x^n coefficient of the rational function
    (1+x)^N / prod_i (1 + p_i x), which carries the Euler characteristic of
    the Milnor fiber;
  * the geometric genus from a composition sum of binomials, from an
    inclusion-exclusion count of lattice points, from a z-series
    coefficient of prod_i (1 - z^(p_i)) / (1-z)^(N+1), or from a reduced
    composition sum whose divisions are exact.

Each route is implemented independently so any one can certify another;
disagreement raises CrossCheckError rather than returning anything.

A degree equal to 1 is a hyperplane and does not change the germ, only the
ambient dimension; every formula here is invariant under dropping such
entries, and reduce() makes the normalization explicit.  A spec whose
degrees are all 1 is a smooth germ and is reported as such, not computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .exactmath import CrossCheckError, binomial, compositions
from .series import poly

MILNOR_METHODS = ("closed_sum", "series", "equal_degree")
GENUS_METHODS = ("compositions", "inclusion_exclusion", "series_coeff", "reduced_sum")

SMOOTHNESS_NOTE = (
    "values assume a smooth generic complete intersection of the given degrees"
)


class SmoothGermError(ValueError):
    """All degrees equal 1: the cone is a smooth germ, nothing to compute."""


@dataclass(frozen=True)
class DegreeSpec:
    """A singularity dimension n together with the hypersurface degrees."""

    n: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("dimension n must be an integer >= 1")
        if not self.degrees:
            raise ValueError("at least one degree is required")
        for p in self.degrees:
            if not isinstance(p, int) or p < 1:
                raise ValueError("degrees must be integers >= 1")

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def ambient_dim(self) -> int:
        return self.n + self.r

    @property
    def degree_product(self) -> int:
        return prod(self.degrees)

    @property
    def is_reduced(self) -> bool:
        return all(p >= 2 for p in self.degrees)

    def reduced(self) -> "DegreeSpec":
        """Drop degree-1 entries (hyperplanes); same germ, smaller codimension."""
        kept = tuple(p for p in self.degrees if p >= 2)
        if not kept:
            raise SmoothGermError(
                "all degrees equal 1: smooth germ, invariants are not computed"
            )
        if len(kept) == len(self.degrees):
            return self
        return DegreeSpec(self.n, kept)

    def sorted(self) -> "DegreeSpec":
        return DegreeSpec(self.n, tuple(sorted(self.degrees)))


def _require_singular(spec: DegreeSpec) -> None:
    if all(p == 1 for p in spec.degrees):
        raise SmoothGermError(
            "all degrees equal 1: smooth germ, invariants are not computed"
        )


def _power_sum(m: int, degrees: tuple[int, ...]) -> int:
    # sum over weak compositions (k_i) of m of prod (p_i - 1)^(k_i)
    return sum(
        prod((p - 1) ** k for p, k in zip(degrees, comp))
        for comp in compositions(m, len(degrees))
    )


def _milnor_closed_sum(spec: DegreeSpec) -> int:
    n = spec.n
    alternating = sum((-1) ** j * _power_sum(n - j, spec.degrees) for j in range(n + 1))
    return spec.degree_product * alternating - (-1) ** n


def _chi_series(spec: DegreeSpec) -> int:
    """Euler characteristic of the Milnor fiber via coefficient extraction."""
    n = spec.n
    num = poly([1, 1], n) ** spec.ambient_dim
    den = poly([1], n)
    for p in spec.degrees:
        den = den * poly([1, p], n)
    c = (num * den.inverse()).coefficient(n)
    if c.denominator != 1:
        raise CrossCheckError(f"chi coefficient for {spec} is not an integer: {c}")
    return spec.degree_product * c.numerator


def _milnor_series(spec: DegreeSpec) -> int:
    chi = _chi_series(spec)
    return chi - 1 if spec.n % 2 == 0 else 1 - chi


def _milnor_equal_degree(spec: DegreeSpec) -> int:
    spec = spec.reduced()
    if len(set(spec.degrees)) != 1:
        raise ValueError("equal_degree method requires all degrees equal")
    p, r, n = spec.degrees[0], spec.r, spec.n
    s = sum((1 - p) ** j * binomial(j + r - 1, j) for j in range(n + 1))
    value = p**r * s - 1
    return value if n % 2 == 0 else -value


def milnor_number(spec: DegreeSpec, method: str = "closed_sum") -> int:
    """Milnor number of the cone singularity, by the chosen route."""
    _require_singular(spec)
    if method == "closed_sum":
        return _milnor_closed_sum(spec)
    if method == "series":
        return _milnor_series(spec)
    if method == "equal_degree":
        return _milnor_equal_degree(spec)
    raise ValueError(f"unknown milnor method {method!r}; choose from {MILNOR_METHODS}")


def milnor_fiber_euler(spec: DegreeSpec) -> int:
    """Euler characteristic of the Milnor fiber; equals (-1)^n mu + 1."""
    _require_singular(spec)
    return _chi_series(spec)


def _genus_compositions(spec: DegreeSpec) -> int:
    return sum(
        prod(binomial(p, k + 1) for p, k in zip(spec.degrees, comp))
        for comp in compositions(spec.n, spec.r)
    )


def _genus_inclusion_exclusion(spec: DegreeSpec) -> int:
    # signed count of monomials of degree sum(p) - N in N variables, with
    # exponents capped by inclusion-exclusion over the degrees
    from itertools import combinations

    N = spec.ambient_dim
    total_degree = sum(spec.degrees)
    acc = 0
    for size in range(spec.r + 1):
        sign = (-1) ** size
        for subset in combinations(spec.degrees, size):
            acc += sign * binomial(total_degree - sum(subset), N)
    return acc


def _genus_series(spec: DegreeSpec) -> int:
    target = sum(spec.degrees) - spec.ambient_dim
    if target < 0:
        return 0
    num = poly([1], target)
    for p in spec.degrees:
        num = num * poly([1] + [0] * (p - 1) + [-1], target)
    c = (num * poly([1, -1], target) ** -(spec.ambient_dim + 1)).coefficient(target)
    if c.denominator != 1:
        raise CrossCheckError(f"genus coefficient for {spec} is not an integer: {c}")
    return c.numerator


def _genus_reduced_sum(spec: DegreeSpec) -> int:
    total = Fraction(0)
    for comp in compositions(spec.n, spec.r):
        term = Fraction(1)
        for p, k in zip(spec.degrees, comp):
            term *= Fraction(binomial(p - 1, k), k + 1)
        total += term
    value = spec.degree_product * total
    if value.denominator != 1:
        raise CrossCheckError(f"reduced genus sum for {spec} is not an integer: {value}")
    return value.numerator


def geometric_genus(spec: DegreeSpec, method: str = "compositions") -> int:
    """Geometric genus of the cone singularity (delta invariant when n = 1)."""
    _require_singular(spec)
    if method == "compositions":
        return _genus_compositions(spec)
    if method == "inclusion_exclusion":
        return _genus_inclusion_exclusion(spec)
    if method == "series_coeff":
        return _genus_series(spec)
    if method == "reduced_sum":
        return _genus_reduced_sum(spec)
    raise ValueError(f"unknown genus method {method!r}; choose from {GENUS_METHODS}")


def equal_degree_genus(n: int, r: int, p: int) -> int:
    """Closed form of the genus at equal degrees, for n in {1, 2, 3}.

    The divisions are exact only because the closed forms are; integrality
    is asserted, not assumed.
    """
    if r < 1 or p < 1:
        raise ValueError("need r >= 1 and p >= 1")
    lead = Fraction(r * (p - 1) * p**r, factorial(n) * 2**n)
    if n == 1:
        value = lead
    elif n == 2:
        value = lead * (r * (p - 1) + Fraction(p - 5, 3))
    elif n == 3:
        value = lead * (p * r - 2 - r) * (p * r - 3 + p - r)
    else:
        raise ValueError("closed genus form is only available for n in {1, 2, 3}")
    if value.denominator != 1:
        raise CrossCheckError(
            f"equal-degree genus form gave a non-integer for n={n}, r={r}, p={p}: {value}"
        )
    return value.numerator


@dataclass(frozen=True)
class InvariantReport:
    """All invariant values for one spec, with every applicable route run."""

    spec: DegreeSpec
    mu: int
    pg: int
    chi: int
    mu_by_method: dict[str, int]
    pg_by_method: dict[str, int]


def invariant_report(spec: DegreeSpec) -> InvariantReport:
    """Compute mu and p_g by every applicable method and enforce agreement."""
    _require_singular(spec)
    mu_methods = ["closed_sum", "series"]
    if len(set(spec.reduced().degrees)) == 1:
        mu_methods.append("equal_degree")
    mu_values = {m: milnor_number(spec, m) for m in mu_methods}
    pg_values = {m: geometric_genus(spec, m) for m in GENUS_METHODS}
    if len(set(mu_values.values())) != 1:
        raise CrossCheckError(f"milnor methods disagree for {spec}: {mu_values}")
    if len(set(pg_values.values())) != 1:
        raise CrossCheckError(f"genus methods disagree for {spec}: {pg_values}")
    mu = mu_values["closed_sum"]
    chi = milnor_fiber_euler(spec)
    if chi != (-1) ** spec.n * mu + 1:
        raise CrossCheckError(f"euler characteristic inconsistent for {spec}")
    return InvariantReport(
        spec=spec,
        mu=mu,
        pg=pg_values["compositions"],
        chi=chi,
        mu_by_method=mu_values,
        pg_by_method=pg_values,
    )
