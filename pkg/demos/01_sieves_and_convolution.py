#!/usr/bin/env python3
"""Sieved arithmetic functions and exact Dirichlet convolution.

Every experiment downstream consumes a table f = g*1 for some finitely
supported g. This walk-through builds the basic tables, convolves, inverts,
and probes growth.
"""

from fractions import Fraction

from msi import (
    dirichlet_convolve_unit,
    essential_bound_probe,
    mobius_invert,
    preset_table,
    random_rational_table,
    sieve_divisor_count,
    sieve_mobius,
)

# Mobius via the linear sieve: mu(1) = 1, sign flips per prime, 0 on squares
mu = sieve_mobius(30)
print("mu(1..30)  :", list(mu.values))
print("Mertens(30):", sum(mu.values))

# The divisor count comes from the harmonic double loop...
d = sieve_divisor_count(30)
print("d(1..30)   :", list(d.values))

# ...and is exactly the convolution of the constant-one function with itself.
unit = preset_table("unit", 30)
assert dirichlet_convolve_unit(unit, 30) == d

# mu * 1 collapses to the indicator of {1}: the inversion engine.
assert dirichlet_convolve_unit(mu, 30) == preset_table("delta1", 30)

# Round trip on a random rational table: convolve then invert, exactly.
g = random_rational_table(24, seed=42)
f = dirichlet_convolve_unit(g, 24)
assert mobius_invert(f) == g
print("round trip : exact on 24 seeded rationals, e.g. f(12) =", f[12])

# Growth slower than every fixed power cannot be certified from a finite
# table; we can only report the worst |f(n)|/n^eps at a chosen eps.
for eps in (0.25, 0.5):
    print(f"probe d(n)/n^{eps}: max = {essential_bound_probe(sieve_divisor_count(10**5), eps):.3f}")

# Values stay exact rationals; the float view is for the numpy sweeps.
h = Fraction(1, 3)
scaled = g.scale(h)
print("exact scale:", scaled[1], "=", g[1], "* 1/3")
