"""Finite Fourier side of the windowed multiple counts.

The triangular window of half-width h has the nonnegative kernel

    F_h(beta) = (2/h) * sin(pi h beta)**2 / sin(pi beta)**2,

and the centered multiple count chi_tilde_q expands over reduced fractions
j/l with l | q, l > 1 as (l/q) * c_{j,l} * cos(2 pi x j / l), where
c_{j,q} = F_h(j/q) / q. Ramanujan coefficients R_l tie these expansions to
the support values of g; for finitely supported g they are finite exact
rational sums.

Angle arguments are reduced exactly (integers mod q) before any sin/cos, so
coefficient scaling c_{d j, d q} = c_{j,q} / d holds to the last float bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import cos, gcd, pi, sin
from typing import Union

from .arith import FunctionTable, Rational, divisors
from .short_sums import FejerWindow


@dataclass(frozen=True)
class FejerCoefficient:
    """One expansion coefficient c_{j,q} = F_h(j/q)/q >= 0, for 1 <= j <= q/2."""

    j: int
    q: int
    value: float


@dataclass(frozen=True)
class RamanujanTable:
    """R_l for 1 <= l <= Q of f = g*1: R_l = (1/l) sum_{q <= Q/l} g(l q)/q."""

    q_max: int
    values: tuple[Rational, ...]  # values[l - 1] = R_l

    def __getitem__(self, ell: int) -> Rational:
        if not 1 <= ell <= self.q_max:
            raise IndexError(f"ell={ell} outside [1, {self.q_max}]")
        return self.values[ell - 1]


def fejer_kernel_value(beta: Union[float, Fraction], w: FejerWindow) -> float:
    """(2/h) sin(pi h beta)**2 / sin(pi beta)**2, nonnegative.

    Returns exactly 0.0 when h*beta is an integer (the numerator vanishes
    before the quotient is formed). Integer beta is outside the domain.
    """
    h = w.h
    if isinstance(beta, Fraction):
        if beta.denominator == 1:
            raise ValueError("beta must not be an integer")
        top = _frac_mod1(h * beta)
        if top == 0:
            return 0.0
        bot = _frac_mod1(beta)
        return (2.0 / h) * sin(pi * float(top)) ** 2 / sin(pi * float(bot)) ** 2
    if float(beta).is_integer():
        raise ValueError("beta must not be an integer")
    top_f = (h * beta) % 1.0
    if top_f == 0.0:
        return 0.0
    bot_f = beta % 1.0
    return (2.0 / h) * sin(pi * top_f) ** 2 / sin(pi * bot_f) ** 2


def _frac_mod1(a: Fraction) -> Fraction:
    return a - (a.numerator // a.denominator)


@lru_cache(maxsize=None)
def _coefficient_value(j: int, q: int, h: int) -> float:
    # reduce j/q exactly, then reduce the numerator angle mod 1
    d = gcd(j, q)
    jr, qr = j // d, q // d
    r = (jr * h) % qr
    if r == 0:
        return 0.0
    kernel = (2.0 / h) * sin(pi * r / qr) ** 2 / sin(pi * jr / qr) ** 2
    return kernel / q


def fejer_coefficient(j: int, q: int, w: FejerWindow) -> FejerCoefficient:
    """c_{j,q} = F_h(j/q)/q for 1 <= j <= q/2.

    The fraction is reduced before evaluating the kernel, which makes the
    scaling law c_{d j, d q} = c_{j,q}/d exact in floats.
    """
    if j < 1 or 2 * j > q:
        raise ValueError(f"need 1 <= j <= q/2, got j={j}, q={q}")
    return FejerCoefficient(j, q, _coefficient_value(j, q, w.h))


def chi_tilde_expansion(q: int, x: int, w: FejerWindow) -> float:
    """chi_tilde_q(x) via the reduced-fraction expansion over divisors of q.

    sum over l | q, l > 1 of (l/q) * sum over reduced j <= l/2 of
    c_{j,l} cos(2 pi x j / l). Matches the direct windowed count for all
    x > h; exactly q-periodic in x.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    h = w.h
    total = 0.0
    for ell in divisors(q):
        if ell == 1:
            continue
        pref = ell / q
        half = ell // 2
        for j in range(1, half + 1):
            if gcd(j, ell) != 1:
                continue
            c = _coefficient_value(j, ell, h)
            if c == 0.0:
                continue
            total += pref * c * cos(2.0 * pi * ((x * j) % ell) / ell)
    return total


def coefficient_square_sum(q: int, w: FejerWindow, reduced_only: bool = False) -> float:
    """Sum of c_{j,q}**2 over j = 1..q-1, optionally only gcd(j,q) = 1.

    The full-range sum is the Parseval mass of chi_tilde_q over one period
    (up to the factor 4 from cosine pairing) and is bounded by a constant
    times min(1, h/q).
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    h = w.h
    total = 0.0
    for j in range(1, q):
        if reduced_only and gcd(j, q) != 1:
            continue
        # formula extends symmetrically past q/2: c_{q-j,q} = c_{j,q}
        jj = min(j, q - j)
        total += _coefficient_value(jj, q, h) ** 2
    return total


def ramanujan_coefficient(g: FunctionTable, ell: int, q_max: int) -> Rational:
    """R_ell of g*1 for g supported in [1, q_max]: sum of g(m)/m over ell | m.

    Exact rational value; zero once ell exceeds q_max.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    total = Fraction(0)
    for m in range(ell, min(q_max, g.max_n) + 1, ell):
        gm = g[m]
        if gm:
            total += Fraction(gm) / m
    return total


def ramanujan_table(g: FunctionTable, q_max: int) -> RamanujanTable:
    """All R_ell for 1 <= ell <= q_max, exact."""
    return RamanujanTable(
        q_max,
        tuple(ramanujan_coefficient(g, ell, q_max) for ell in range(1, q_max + 1)),
    )
