from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

import pytest

from durfee import (
    CrossCheckError,
    BoundCoefficient,
    asymptotic_ratio,
    balanced_min_product,
    bound_coefficient,
    composition_factorial_sum,
    composition_sum_inequality,
    dominance_inequality_checks,
    falling_composition_sum,
    falling_sum_recursion_check,
    min_product_bound,
    monotone_scan,
    multinomial_recursion_check,
    power_composition_sum,
    stirling_factorial_sum,
    stirling_growth_inequality,
)

from _oracles import factorial_sum_brute


class TestFactorialSum:
    def test_small_values(self):
        assert composition_factorial_sum(0, 0) == 1
        assert composition_factorial_sum(0, 3) == 1
        assert composition_factorial_sum(3, 0) == 0
        assert composition_factorial_sum(2, 1) == Fraction(1, 6)
        assert composition_factorial_sum(2, 2) == Fraction(7, 12)
        assert composition_factorial_sum(1, 1) == Fraction(1, 2)

    def test_matches_brute_enumeration(self):
        for n in range(0, 7):
            for r in range(0, 5):
                assert composition_factorial_sum(n, r) == factorial_sum_brute(n, r)

    def test_two_routes_agree(self):
        for total in range(1, 19):
            for r in range(1, total + 1):
                n = total - r
                assert composition_factorial_sum(n, r) == stirling_factorial_sum(n, r)

    def test_two_routes_agree_at_large_index(self):
        # single deep spot check; full sweep up to n + r = 30 is in selftest
        assert composition_factorial_sum(15, 15) == stirling_factorial_sum(15, 15)

    def test_rejects_negative(self):
        for fn in (composition_factorial_sum, stirling_factorial_sum):
            with pytest.raises(ValueError):
                fn(-1, 2)
            with pytest.raises(ValueError):
                fn(2, -1)


class TestBoundCoefficient:
    def test_codimension_one_is_factorial(self):
        for n in range(1, 11):
            assert bound_coefficient(n, 1) == factorial(n + 1)

    def test_codimension_two_closed_form(self):
        for n in range(1, 11):
            expected = Fraction(factorial(n + 2) * (n + 1), 2 ** (n + 2) - 2)
            assert bound_coefficient(n, 2) == expected

    def test_frozen_values(self):
        assert bound_coefficient(1, 1) == 2
        assert bound_coefficient(2, 2) == Fraction(36, 7)
        assert bound_coefficient(2, 3) == Fraction(24, 5)
        assert bound_coefficient(3, 2) == 16
        assert bound_coefficient(3, 4) == 12
        assert bound_coefficient(2, 100) == Fraction(1212, 301)

    def test_surface_hyperbola(self):
        # C(2, r) = 12(r+1)/(3r+1), approaching 4 from above
        for r in range(1, 60):
            assert bound_coefficient(2, r) == Fraction(12 * (r + 1), 3 * r + 1)
        assert bound_coefficient(2, 100) - 4 < Fraction(1, 30)

    def test_asymptotic_ratio_routes(self):
        for r in range(1, 13):
            assert asymptotic_ratio(2, r) == bound_coefficient(2, r)
            assert asymptotic_ratio(3, r) == bound_coefficient(3, r)
        assert asymptotic_ratio(4, 3) == bound_coefficient(4, 3)
        assert asymptotic_ratio(1, 5) == bound_coefficient(1, 5)

    def test_ratio_definition(self):
        # C(n, r) = binomial(n+r-1, n) / S(n, r), straight from the defining sum
        from durfee import binomial

        for n in range(1, 6):
            for r in range(1, 6):
                assert bound_coefficient(n, r) == Fraction(
                    binomial(n + r - 1, n)
                ) / composition_factorial_sum(n, r)

    def test_rejects_out_of_range(self):
        for fn in (bound_coefficient, asymptotic_ratio):
            with pytest.raises(ValueError):
                fn(0, 1)
            with pytest.raises(ValueError):
                fn(1, 0)

    def test_floor_guard(self):
        BoundCoefficient(2, 2, Fraction(36, 7))
        with pytest.raises(CrossCheckError):
            BoundCoefficient(2, 1, Fraction(3))
        with pytest.raises(CrossCheckError):
            BoundCoefficient(1, 1, Fraction(-2))


class TestMonotoneScan:
    def test_chain_shape(self):
        chain = monotone_scan(3, 12)
        values = [c.value for c in chain]
        assert len(values) == 12
        assert values[0] == 24
        assert all(a >= b for a, b in zip(values, values[1:]))
        assert all(v >= 8 for v in values)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            monotone_scan(0, 5)
        with pytest.raises(ValueError):
            monotone_scan(2, 0)

    def test_growth_inequality(self):
        for n in range(1, 9):
            for r in range(1, 9):
                assert stirling_growth_inequality(n, r)

    def test_growth_inequality_range(self):
        with pytest.raises(ValueError):
            stirling_growth_inequality(0, 1)


class TestRecursionAndDominance:
    def test_multinomial_recursion(self):
        for n in range(0, 9):
            for r in range(1, 9):
                assert multinomial_recursion_check(n, r)

    def test_multinomial_recursion_range(self):
        with pytest.raises(ValueError):
            multinomial_recursion_check(-1, 2)
        with pytest.raises(ValueError):
            multinomial_recursion_check(2, 0)

    def test_dominance_chain_small_order(self):
        assert dominance_inequality_checks(order=16, nr_max=4)

    def test_dominance_order_range(self):
        with pytest.raises(ValueError):
            dominance_inequality_checks(order=0)


class TestProductBounds:
    def test_min_product_values(self):
        assert min_product_bound(2, 1) == 6
        assert min_product_bound(2, 2) == 4
        assert min_product_bound(3, 2) == 12
        assert min_product_bound(4, 2) == 36
        assert min_product_bound(5, 2) == 144

    def test_balanced_closed_form_matches_enumeration(self):
        # balanced composition is optimal for every n, r, not only n > r
        for n in range(2, 8):
            for r in range(1, 6):
                assert balanced_min_product(n, r) == min_product_bound(n, r)

    def test_min_product_range(self):
        with pytest.raises(ValueError):
            min_product_bound(1, 2)
        with pytest.raises(ValueError):
            balanced_min_product(2, 0)

    def test_composition_sum_values(self):
        assert power_composition_sum(2, (3, 3)) == 12
        assert power_composition_sum(0, (3, 3)) == 1
        assert falling_composition_sum(2, (4,)) == 6
        assert falling_composition_sum(0, ()) == 1
        assert falling_composition_sum(1, ()) == 0
        # parts longer than p - 1 die inside the falling factorial
        assert falling_composition_sum(3, (2,)) == 0

    def test_composition_sum_range(self):
        with pytest.raises(ValueError):
            power_composition_sum(-1, (3,))
        with pytest.raises(ValueError):
            falling_composition_sum(-1, (3,))

    def test_falling_recursion(self):
        for r in range(1, 4):
            for degrees in combinations_with_replacement(range(2, 7), r):
                for n in range(1, 5):
                    assert falling_sum_recursion_check(n, degrees)

    def test_falling_recursion_range(self):
        with pytest.raises(ValueError):
            falling_sum_recursion_check(0, (3,))
        with pytest.raises(ValueError):
            falling_sum_recursion_check(2, ())

    def test_power_dominates_falling(self):
        for r in range(1, 4):
            for degrees in combinations_with_replacement(range(2, 7), r):
                for n in range(2, 5):
                    assert composition_sum_inequality(n, degrees)

    def test_power_falling_comparison_flips_for_curves(self):
        # at n = 1 the right side carries the extra D_0 = 1 and wins;
        # the product bound never consults this range
        assert not composition_sum_inequality(1, (2,))
        assert not composition_sum_inequality(1, (5, 5))

    def test_power_dominates_falling_range(self):
        with pytest.raises(ValueError):
            composition_sum_inequality(0, (3,))
        with pytest.raises(ValueError):
            composition_sum_inequality(2, ())
