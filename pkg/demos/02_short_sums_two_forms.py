#!/usr/bin/env python3
"""Triangular short sums, their double-average form, and centered counts.

The weighted sum over |n - x| <= h of (1 - |n-x|/h) f(n) has a second life
as (1/h) sum_{m<=h} sum_{|n-x|<m} f(n); both are computed exactly and agree
term for term. Subtracting the expected value h*sum g(d)/d leaves exactly
the weighted multiple counts chi_tilde.
"""

from msi import (
    FejerWindow,
    PrefixSums,
    averaged_double_sum,
    chi_tilde_direct,
    dirichlet_convolve_unit,
    fejer_short_sum,
    mean_value,
    sieve_divisor_count,
    sieve_mobius,
)

w = FejerWindow(4)
d = sieve_divisor_count(60)

# O(1) per center after one prefix-sum pass
sums = PrefixSums(d)
for x in (12, 30, 47):
    tri = fejer_short_sum(d, x, w, sums)
    dbl = averaged_double_sum(d, x, w)
    assert tri == dbl
    print(f"x={x:2d}: short sum = {tri} = {float(tri):.4f}, double-average form agrees")

# Expected value of the short sum of f = g*1 around x
g = sieve_mobius(8)
print("mean value h*sum g(d)/d:", mean_value(g, 40, w))

# chi_tilde_q(x): weighted count of multiples of q in the window minus h/q.
# It vanishes for q = 1 and (h even) q = 2, and is q-periodic once x > h.
for q in (1, 2, 3, 5):
    vals = [chi_tilde_direct(q, x, w) for x in range(9, 9 + q)]
    print(f"chi_tilde_{q} over one period:", vals)
    assert chi_tilde_direct(q, 9, w) == chi_tilde_direct(q, 9 + q, w)

# The bridge: short sum minus mean value is exactly sum_q g(q) chi_tilde_q(x)
f = dirichlet_convolve_unit(g, 80)
for x in (20, 33):
    lhs = fejer_short_sum(f, x, w) - mean_value(g, x, w)
    rhs = sum(g[q] * chi_tilde_direct(q, x, w) for q in range(1, 9))
    assert lhs == rhs
    print(f"x={x}: centered short sum = {lhs} (bridge exact)")

# Two-forms equality holds under left clamping as well (x <= h)
tiny = dirichlet_convolve_unit(sieve_mobius(3), 20)
assert fejer_short_sum(tiny, 2, w) == averaged_double_sum(tiny, 2, w)
print("clamped window at x=2: both forms give", fejer_short_sum(tiny, 2, w))
