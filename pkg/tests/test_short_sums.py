from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msi.arith import (
    FunctionTable,
    dirichlet_convolve_unit,
    preset_table,
    random_rational_table,
    sieve_divisor_count,
    sieve_mobius,
)
from msi.short_sums import (
    FejerWindow,
    PrefixSums,
    averaged_double_sum,
    chi_tilde_direct,
    fejer_short_sum,
    mean_value,
)


def literal_short_sum(f, x, h):
    """Weight-by-weight oracle, clamped to n >= 1."""
    return sum(
        (1 - Fraction(abs(n - x), h)) * f[n]
        for n in range(max(1, x - h), min(f.max_n, x + h) + 1)
    )


class TestFejerWindow:
    def test_odd_h_rejected(self):
        with pytest.raises(ValueError):
            FejerWindow(3)
        with pytest.raises(ValueError):
            FejerWindow(0)

    def test_weights(self):
        w = FejerWindow(4)
        assert w.weight(0) == 1
        assert w.weight(4) == 0 == w.weight(-4)
        assert w.weight(1) == Fraction(3, 4)
        assert w.weight(9) == 0


class TestFejerShortSum:
    def test_constant_one_gives_h(self):
        f = FunctionTable([1] * 60)
        for h in (2, 4, 10):
            assert fejer_short_sum(f, 30, FejerWindow(h)) == h

    def test_delta_convolved_gives_h(self):
        f = dirichlet_convolve_unit(preset_table("delta1", 40), 40)
        w = FejerWindow(4)
        for x in range(5, 36):
            assert fejer_short_sum(f, x, w) == 4
            assert fejer_short_sum(f, x, w) - mean_value(preset_table("delta1", 40), x, w) == 0

    def test_divisor_table_hand_sum(self):
        d = sieve_divisor_count(30)
        w = FejerWindow(4)
        nine_terms = sum((1 - Fraction(abs(n - 12), 4)) * d[n] for n in range(8, 17))
        assert fejer_short_sum(d, 12, w) == nine_terms

    def test_left_clamp(self):
        f = random_rational_table(40, seed=2)
        w = FejerWindow(8)
        for x in range(1, 12):
            assert fejer_short_sum(f, x, w) == literal_short_sum(f, x, 8)

    def test_range_error(self):
        f = FunctionTable([1] * 10)
        with pytest.raises(ValueError):
            fejer_short_sum(f, 9, FejerWindow(2))

    def test_prefix_sums_reuse_matches(self):
        f = random_rational_table(50, seed=9)
        w = FejerWindow(6)
        sums = PrefixSums(f)
        for x in range(3, 44):
            assert fejer_short_sum(f, x, w, sums) == fejer_short_sum(f, x, w)


class TestAveragedDoubleSum:
    def test_h2_expansion(self):
        f = random_rational_table(30, seed=4)
        w = FejerWindow(2)
        for x in range(2, 28):
            expect = f[x] + (f[x - 1] + f[x + 1]) / Fraction(2)
            assert averaged_double_sum(f, x, w) == expect

    def test_constant_one(self):
        f = FunctionTable([1] * 50)
        assert averaged_double_sum(f, 25, FejerWindow(6)) == 6

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10_000), st.sampled_from([2, 4, 6, 8]), st.integers(1, 80))
    def test_two_forms_identity(self, seed, h, x):
        f = random_rational_table(100, seed=seed)
        if x + h > f.max_n:
            x = f.max_n - h
        w = FejerWindow(h)
        assert fejer_short_sum(f, x, w) == averaged_double_sum(f, x, w)


class TestMeanValue:
    def test_delta_gives_h(self):
        g = preset_table("delta1", 10)
        assert mean_value(g, 5, FejerWindow(6)) == 6

    def test_unit_four_terms(self):
        g = preset_table("unit", 4)
        assert mean_value(g, 10, FejerWindow(2)) == Fraction(25, 6)

    def test_mobius_brute_force(self):
        # brute oracle: sum mu(d)/d over the support, via trial factorization
        def mu(n):
            val, m, p = 1, n, 2
            while p * p <= m:
                if m % p == 0:
                    m //= p
                    if m % p == 0:
                        return 0
                    val = -val
                p += 1
            return -val if m > 1 else val

        for q in (10, 37, 100):
            g = sieve_mobius(q)
            w = FejerWindow(2)
            got = mean_value(g, q + 50, w)
            assert got == 2 * sum(Fraction(mu(d), d) for d in range(1, q + 1))

    def test_truncates_at_x_plus_h(self):
        g = preset_table("unit", 10)
        w = FejerWindow(2)
        assert mean_value(g, 3, w) == 2 * sum(Fraction(1, d) for d in range(1, 6))


class TestChiTildeDirect:
    def test_q_one_vanishes(self):
        w = FejerWindow(4)
        for x in range(5, 40):
            assert chi_tilde_direct(1, x, w) == 0

    def test_q_two_vanishes_for_even_h(self):
        w = FejerWindow(6)
        for x in range(7, 30):
            assert chi_tilde_direct(2, x, w) == 0

    def test_q_three_values(self):
        w = FejerWindow(2)
        assert chi_tilde_direct(3, 30, w) == Fraction(1, 3)
        assert chi_tilde_direct(3, 31, w) == Fraction(-1, 6)
        assert chi_tilde_direct(3, 32, w) == Fraction(-1, 6)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            chi_tilde_direct(0, 5, FejerWindow(2))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 40), st.sampled_from([2, 4, 8]), st.integers(1, 120))
    def test_periodicity_beyond_h(self, q, h, xoff):
        w = FejerWindow(h)
        x = h + xoff
        assert chi_tilde_direct(q, x, w) == chi_tilde_direct(q, x + q, w)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(0, 10_000),
    st.integers(0, 10_000),
    st.fractions(min_value=-5, max_value=5),
    st.fractions(min_value=-5, max_value=5),
    st.sampled_from([2, 4]),
    st.integers(1, 56),
)
def test_linearity(seed1, seed2, a, b, h, x):
    f1 = random_rational_table(60, seed=seed1)
    f2 = random_rational_table(60, seed=seed2)
    combo = FunctionTable([a * u + b * v for u, v in zip(f1.values, f2.values)])
    w = FejerWindow(h)
    if x + h > 60:
        x = 60 - h
    assert fejer_short_sum(combo, x, w) == a * fejer_short_sum(f1, x, w) + b * fejer_short_sum(f2, x, w)


def test_expansion_bridge_exact():
    """short sum - mean value = sum_q g(q) chi_tilde_q(x), exact for Q <= x."""
    q_max = 9
    g = random_rational_table(q_max, seed=5)
    for h in (2, 4):
        w = FejerWindow(h)
        f = dirichlet_convolve_unit(g, 120 + h)
        for x in range(max(h + 1, q_max), 120 - h):
            lhs = fejer_short_sum(f, x, w) - mean_value(g, x, w)
            rhs = sum(g[q] * chi_tilde_direct(q, x, w) for q in range(1, q_max + 1))
            assert lhs == rhs
