"""Mean square of the centered short sums over x in (N, 2N], two ways.

The direct route sweeps centers with prefix sums: O(N) after tabulating
f = g*1 up to 2N + h. The spectral route rebuilds the same quantity from
Ramanujan coefficients, window-kernel values at Farey fractions, and
closed-form exponential x-sums, split into diagonal, nearby (separation
<= 1/A) and well-spaced (> 1/A) parts; their total must reconstruct the
direct value.

Float sweeps use numpy (pairwise summation); the exact paths mirror them in
rational arithmetic for oracle-scale configurations. Pure functions over
immutable inputs throughout; parallel callers get identical results because
every reduction has a fixed order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import cos, fsum, log, pi, sin
from typing import Union

import numpy as np

from .arith import FunctionTable, Rational, SupportCutoff, apply_cutoff, dirichlet_convolve_unit
from .farey import FareySequence, delta_key, farey_enumerate, sigma_key, spaced_pair_partition
from .short_sums import FejerWindow, PrefixSums, chi_tilde_direct, fejer_short_sum, mean_value
from .spectral import _coefficient_value, coefficient_square_sum, ramanujan_coefficient

PAIR_BUDGET = 10 ** 7


class ResourceBudgetError(RuntimeError):
    """Raised when a decomposition would enumerate too many fraction pairs."""


@dataclass(frozen=True)
class IntegralConfig:
    """Parameters of one mean-square computation.

    n: sweep range is x in (n, 2n]; h: even window half-width, at most n/4
    (h = 2, the smallest admissible window, is always allowed); cutoff:
    support restriction for g, with fixed Q <= n + h; a: spacing parameter
    separating nearby from well-spaced fraction pairs, default n*log(n).
    The table g is read through the cutoff, never beyond.
    """

    n: int
    h: int
    g: FunctionTable
    cutoff: SupportCutoff
    a: float | None = None
    g_name: str = "custom"

    def __post_init__(self):
        FejerWindow(self.h)  # validates h even, >= 2
        if self.h > 2 and 4 * self.h > self.n:
            raise ValueError(f"h={self.h} too large for n={self.n}: need h <= n/4")
        if self.h == 2 and self.n < 4:
            raise ValueError("n must be at least 4")
        if self.cutoff.mode == "fixed" and self.cutoff.q > self.n + self.h:
            raise ValueError(
                f"fixed cutoff Q={self.cutoff.q} exceeds n + h = {self.n + self.h}"
            )

    @property
    def window(self) -> FejerWindow:
        return FejerWindow(self.h)

    @property
    def a_value(self) -> float:
        return self.a if self.a is not None else self.n * log(self.n)


@dataclass(frozen=True)
class DecompositionReport:
    """Spectral parts of the mean square and their reconstruction check."""

    diagonal: float
    near_delta: float
    near_sigma: float
    far_delta: float
    far_sigma: float
    total: float
    direct: float
    abs_gap: float


@dataclass(frozen=True)
class FarPartReport:
    """Observed well-spaced parts against the A*h yardstick."""

    far_delta: float
    far_sigma: float
    far_abs: float
    a: float
    h: int
    ah: float
    ratio_to_ah: float
    coeff_square_sum: float
    harmonic_factor: float
    ramanujan_scale: float
    lemma_majorant: float


@dataclass(frozen=True)
class MajorantReport:
    """Both mean squares and the ratio j_f / (j_F + n*h)."""

    j_f: float
    j_F: float
    n_h: float
    ratio: float
    meta: dict = field(compare=False)


def exp_sum_closed_form(alpha: Union[float, int, Fraction], n: int) -> complex:
    """sum_{x=n+1}^{2n} e(alpha x) via the geometric closed form.

    Equals e(alpha (3n+1)/2) * sin(pi n alpha) / sin(pi alpha) for
    non-integer alpha, and n for integer alpha. Angles are reduced mod 1
    (exactly for Fraction input) before any sin, so large n*alpha keeps
    full accuracy; magnitude obeys |sum| <= min(n, 1/(2 ||alpha||)).
    """
    if isinstance(alpha, (int, Fraction)):
        alpha = Fraction(alpha)
        if alpha.denominator == 1:
            return complex(n)
        s_num = _sin_pi_rational(n * alpha)
        s_den = _sin_pi_rational(alpha)
        w = _mod1_rational(alpha * (3 * n + 1) / 2)
        angle = 2.0 * pi * float(w)
        return complex(cos(angle), sin(angle)) * (s_num / s_den)
    if float(alpha).is_integer():
        return complex(n)
    s_num = _sin_pi_float(n * alpha)
    s_den = _sin_pi_float(alpha)
    w = (alpha * (3 * n + 1) / 2.0) % 1.0
    angle = 2.0 * pi * w
    return complex(cos(angle), sin(angle)) * (s_num / s_den)


def _mod1_rational(a: Fraction) -> Fraction:
    return a - (a.numerator // a.denominator)


def _sin_pi_rational(a: Fraction) -> float:
    k = a.numerator // a.denominator
    u = a - k
    return (-1.0 if k % 2 else 1.0) * sin(pi * float(u))


def _sin_pi_float(t: float) -> float:
    r = math.fmod(t, 2.0)
    if r < 0.0:
        r += 2.0
    return sin(pi * r)


@lru_cache(maxsize=1 << 20)
def _x_sum(alpha: Fraction, n: int) -> float:
    """Re sum_{x~n} cos(2 pi alpha x), cached across configurations."""
    return exp_sum_closed_form(alpha, n).real


def _big_f(j: int, ell: int, h: int) -> float:
    """Window kernel F_h(j/ell) = ell * c_{j,ell}."""
    return ell * _coefficient_value(j, ell, h)


def _f_float(g: FunctionTable, q_max: int, max_n: int) -> np.ndarray:
    """float64 tabulation of (g restricted to [1, q_max]) * 1 on [0, max_n]."""
    f = np.zeros(max_n + 1)
    gv = g.float_view
    for q in range(1, min(q_max, g.max_n) + 1):
        v = gv[q]
        if v:
            f[q::q] += v
    return f


def _sweep_float(f: np.ndarray, n: int, h: int, mean: float) -> float:
    """sum over x in (n, 2n] of (triangular short sum of f at x - mean)**2."""
    p0 = np.cumsum(f)
    p1 = np.cumsum(f * np.arange(f.size, dtype=np.float64))
    xs = np.arange(n + 1, 2 * n + 1)
    short = (
        (1.0 - xs / h) * (p0[xs] - p0[xs - h - 1])
        + (p1[xs] - p1[xs - h - 1]) / h
        + (1.0 + xs / h) * (p0[xs + h] - p0[xs])
        - (p1[xs + h] - p1[xs]) / h
    )
    dev = short - mean
    return float(np.sum(dev * dev))


def selberg_integral_direct(cfg: IntegralConfig, exact: bool = False) -> Union[float, Rational]:
    """Mean square of (short sum - expected value) over x in (n, 2n].

    Fixed cutoff: one tabulation of f = g*1 up to 2n + h, then an O(n)
    prefix-sum sweep (the expected value is constant across the sweep since
    Q <= n + h < x + h). Power cutoff: g is re-cut per center at
    Q(x + h), evaluated through the centered multiple counts; identical to
    cutting g, retabulating f and subtracting the per-x expected value.

    exact=True runs the whole computation in rational arithmetic (oracle
    scale); the default float path uses numpy with pairwise summation.
    """
    n, h = cfg.n, cfg.h
    w = cfg.window
    if cfg.cutoff.mode == "fixed":
        q_max = cfg.cutoff.q
        if not exact:
            f = _f_float(cfg.g, q_max, 2 * n + h)
            gv = cfg.g.float_view
            mean = h * fsum(
                gv[d] / d for d in range(1, min(q_max, cfg.g.max_n) + 1)
            )
            return _sweep_float(f, n, h, mean)
        g_eff = apply_cutoff(cfg.g, cfg.cutoff, n, h)
        f_exact = dirichlet_convolve_unit(g_eff, 2 * n + h)
        sums = PrefixSums(f_exact)
        total: Rational = Fraction(0)
        for x in range(n + 1, 2 * n + 1):
            dev = fejer_short_sum(f_exact, x, w, sums) - mean_value(g_eff, x, w)
            total += dev * dev
        return total
    # power cutoff: accumulate g(q) * chi_tilde_q(x) over q <= Q(x + h)
    if exact:
        total = Fraction(0)
        for x in range(n + 1, 2 * n + 1):
            qx = cfg.cutoff.limit(x + h)
            dev = Fraction(0)
            for q in range(1, min(qx, cfg.g.max_n) + 1):
                gq = cfg.g[q]
                if gq:
                    dev += gq * chi_tilde_direct(q, x, w)
            total += dev * dev
        return total
    gv = cfg.g.float_view
    acc = 0.0
    for x in range(n + 1, 2 * n + 1):
        qx = cfg.cutoff.limit(x + h)
        dev = 0.0
        for q in range(1, min(qx, cfg.g.max_n) + 1):
            gq = gv[q]
            if gq:
                dev += gq * _chi_float(q, x, h)
        acc += dev * dev
    return acc


def _chi_float(q: int, x: int, h: int) -> float:
    m_lo = max(1, -((-(x - h)) // q))
    m_hi = (x + h) // q
    total = 0.0
    for m in range(m_lo, m_hi + 1):
        total += 1.0 - abs(q * m - x) / h
    return total - h / q


def diagonal_term(cfg: IntegralConfig) -> float:
    """Nonnegative diagonal of the spectral expansion.

    sum over reduced j/l, 1 < l <= Q, of R_l**2 F_h(j/l)**2 times the
    closed-form sum of cos(2 pi x j / l)**2 over x in (n, 2n].
    """
    if cfg.cutoff.mode != "fixed":
        raise ValueError("diagonal_term needs a fixed cutoff")
    q_max = cfg.cutoff.q
    if q_max < 2:
        return 0.0
    n, h = cfg.n, cfg.h
    r_cache: dict[int, float] = {}
    terms = []
    for fr in farey_enumerate(q_max):
        ell = fr.den
        r = r_cache.get(ell)
        if r is None:
            r = float(ramanujan_coefficient(cfg.g, ell, q_max))
            r_cache[ell] = r
        if r == 0.0:
            continue
        big_f = _big_f(fr.num, ell, h)
        if big_f == 0.0:
            continue
        cos_sq = 0.5 * n + 0.5 * _x_sum(Fraction(2 * fr.num, ell), n)
        terms.append(r * r * big_f * big_f * cos_sq)
    return fsum(terms)


def selberg_integral_decomposed(cfg: IntegralConfig, force: bool = False) -> DecompositionReport:
    """Diagonal + nearby + well-spaced parts, reconstructed against the sweep.

    Each oriented fraction pair (u, v), u > v, contributes
    R F(u) * R F(v) * (X(delta) + X(sigma)) with X(alpha) the closed-form
    cosine x-sum; the partition at 1/A routes the delta term to near_delta
    or far_delta and the sigma term to near_sigma or far_sigma.

    Raises:
        ResourceBudgetError: when the oriented pair count exceeds
            PAIR_BUDGET and force is not set.
        ValueError: for power cutoffs; the per-x support restriction has no
            fixed frequency set, use the direct sweep instead.
    """
    if cfg.cutoff.mode != "fixed":
        raise ValueError("decomposition requires a fixed cutoff")
    n, h = cfg.n, cfg.h
    q_max = cfg.cutoff.q
    direct = selberg_integral_direct(cfg)
    diag = diagonal_term(cfg)
    if q_max < 2:
        total = diag
        return DecompositionReport(diag, 0.0, 0.0, 0.0, 0.0, total, direct, abs(total - direct))
    seq = farey_enumerate(q_max)
    m = len(seq)
    pair_count = m * (m - 1) // 2
    if pair_count > PAIR_BUDGET and not force:
        raise ResourceBudgetError(
            f"{pair_count} oriented fraction pairs exceed the budget {PAIR_BUDGET}; "
            "pass force=True to run anyway"
        )
    a_val = cfg.a_value
    part_delta = spaced_pair_partition(seq, seq, a_val, "difference")
    part_sigma = spaced_pair_partition(seq, seq, a_val, "wrapped_sum")
    weights = _pair_weights(cfg, seq)

    def pair_sum(pairs, key_fn) -> float:
        return fsum(
            weights[i] * weights[k] * _x_sum(key_fn(seq[i], seq[k]), n)
            for i, k in pairs
            if weights[i] != 0.0 and weights[k] != 0.0
        )

    near_delta = pair_sum(part_delta.near, delta_key)
    far_delta = pair_sum(part_delta.far, delta_key)
    near_sigma = pair_sum(part_sigma.near, sigma_key)
    far_sigma = pair_sum(part_sigma.far, sigma_key)
    total = diag + near_delta + near_sigma + far_delta + far_sigma
    return DecompositionReport(
        diagonal=diag,
        near_delta=near_delta,
        near_sigma=near_sigma,
        far_delta=far_delta,
        far_sigma=far_sigma,
        total=total,
        direct=direct,
        abs_gap=abs(total - direct),
    )


def _pair_weights(cfg: IntegralConfig, seq: FareySequence) -> list[float]:
    """R_den * F_h(num/den) per fraction, the spectral weight of each frequency."""
    q_max = cfg.cutoff.q
    h = cfg.h
    r_cache: dict[int, float] = {}
    out = []
    for fr in seq:
        r = r_cache.get(fr.den)
        if r is None:
            r = float(ramanujan_coefficient(cfg.g, fr.den, q_max))
            r_cache[fr.den] = r
        out.append(r * _big_f(fr.num, fr.den, h))
    return out


def far_part_bound_check(cfg: IntegralConfig, force: bool = False) -> FarPartReport:
    """Well-spaced parts against A*h, with the chain of majorants alongside.

    Reports |far_delta| + |far_sigma|, its ratio to A*h, and the majorant
    scale * A * (sum over 1 < l <= Q of the reduced coefficient square sum)
    * harmonic factor, where scale is the squared worst l*|R_l| and the
    harmonic factor 2*H(K) counts the K enumerated fractions.
    """
    rep = selberg_integral_decomposed(cfg, force=force)
    far_abs = abs(rep.far_delta) + abs(rep.far_sigma)
    a_val = cfg.a_value
    ah = a_val * cfg.h
    q_max = cfg.cutoff.q
    w = cfg.window
    sq = fsum(coefficient_square_sum(ell, w, reduced_only=True) for ell in range(2, q_max + 1))
    k = len(farey_enumerate(q_max)) if q_max >= 2 else 0
    harmonic = 2.0 * fsum(1.0 / i for i in range(1, k + 1)) if k else 0.0
    scale = max(
        (abs(float(ramanujan_coefficient(cfg.g, ell, q_max))) * ell for ell in range(2, q_max + 1)),
        default=0.0,
    )
    return FarPartReport(
        far_delta=rep.far_delta,
        far_sigma=rep.far_sigma,
        far_abs=far_abs,
        a=a_val,
        h=cfg.h,
        ah=ah,
        ratio_to_ah=far_abs / ah,
        coeff_square_sum=sq,
        harmonic_factor=harmonic,
        ramanujan_scale=scale * scale,
        lemma_majorant=scale * scale * a_val * sq * harmonic,
    )


def majorant_compare(
    cfg: IntegralConfig, g_major: FunctionTable, major_name: str = "custom"
) -> MajorantReport:
    """Both mean squares for g and its pointwise majorant G, plus the ratio.

    Requires |g(n)| <= G(n) wherever both are nonzero within the cutoff
    (checked exactly); the first offending n is reported on violation. The
    ratio j_f / (j_F + n*h) is the quantity whose growth in n stays below
    every fixed power when the majorant relation holds.
    """
    limit = cfg.cutoff.limit(2 * cfg.n + cfg.h)
    top = min(cfg.g.max_n, g_major.max_n, limit)
    for n_ in range(1, top + 1):
        gv, Gv = cfg.g[n_], g_major[n_]
        if gv != 0 and Gv != 0 and abs(gv) > Gv:
            raise ValueError(
                f"majorant violated at n={n_}: |g({n_})| = {abs(gv)} > G({n_}) = {Gv}"
            )
    j_f = selberg_integral_direct(cfg)
    cfg_major = IntegralConfig(
        n=cfg.n, h=cfg.h, g=g_major, cutoff=cfg.cutoff, a=cfg.a, g_name=major_name
    )
    j_big = selberg_integral_direct(cfg_major)
    n_h = float(cfg.n) * cfg.h
    return MajorantReport(
        j_f=j_f,
        j_F=j_big,
        n_h=n_h,
        ratio=j_f / (j_big + n_h),
        meta={
            "n": cfg.n,
            "h": cfg.h,
            "cutoff": _cutoff_label(cfg.cutoff),
            "g": cfg.g_name,
            "G": major_name,
        },
    )


def _cutoff_label(cutoff: SupportCutoff) -> str:
    if cutoff.mode == "fixed":
        return f"fixed:{cutoff.q}"
    return f"power:{cutoff.theta}"
