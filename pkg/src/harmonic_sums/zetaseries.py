"""Error-bounded evaluation of the infinite series built on S(n, m).

The geometric-rate series (arguments of magnitude at most the inverse golden
ratio) are summed exactly as rationals up to a cut N and closed with the
rigorous tail bound of :func:`snm_tail_bound`.  The conditionally convergent
boundary case (argument -1) carries no rigorous tail; it is explored with
pairwise averaging of partial sums and a loose tolerance instead.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .approx import ApproxReal
from .refvalues import (
    inverse_golden_ratio,
    log_inverse_golden_ratio,
    zeta_reference,
)
from .snm import snm_direct

__all__ = [
    "snm_tail_bound",
    "snm_series_sum",
    "zeta_via_sum",
    "zeta_via_weighted_sum",
    "li_value",
    "alternating_point_check",
    "golden_ratio_check",
    "negative_order_check",
]


def snm_tail_bound(m: int, x_abs: Fraction, n_cut: int) -> Fraction:
    """Upper bound on sum_{n > n_cut} S(n, m) x_abs^n for 0 < x_abs < 1.

    Every chain term 1/(r_1 ... r_m) is at most 1, so S(n, m) is at most the
    chain count C(n+m-1, m).  The majorant terms a_n = C(n+m-1, m) x^n then
    satisfy a_{n+1}/a_n = x (n+m)/n <= x (n_cut+1+m)/(n_cut+1) = r for
    n > n_cut, giving the geometric bound a_{n_cut+1} / (1 - r) whenever
    r < 1.  Raises when r >= 1 (cut too early for this x).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not 0 < x_abs < 1:
        raise ValueError("x_abs must lie in (0, 1)")
    if n_cut < 1:
        raise ValueError("n_cut must be at least 1")
    ratio = x_abs * Fraction(n_cut + 1 + m, n_cut + 1)
    if ratio >= 1:
        raise ValueError(
            f"tail ratio {ratio} >= 1 at n_cut={n_cut}; increase the cut"
        )
    first = comb(n_cut + m, m) * x_abs ** (n_cut + 1)
    return first / (1 - ratio)


def _choose_cut(m: int, x_abs: Fraction, target: Fraction) -> int:
    n_cut = max(8, 3 * m + 2)
    while snm_tail_bound(m, x_abs, n_cut) > target:
        n_cut += max(8, n_cut // 4)
    return n_cut


def _snm_row_start(m_max: int) -> list[Fraction]:
    # S(0, 0) = 1 and S(0, j) = 0 for j >= 1 (empty sums).
    return [Fraction(1)] + [Fraction(0)] * m_max


def _snm_row_updates(m_max: int, n: int, row: list[Fraction]) -> None:
    # Advance row of S(n-1, 0..m_max) to S(n, 0..m_max) in place, using
    # S(n, j) = S(n-1, j) + S(n, j-1)/n; ascending j keeps row[j-1] current.
    for j in range(1, m_max + 1):
        row[j] += row[j - 1] / n


def snm_series_sum(
    m: int,
    x: Fraction,
    digits: int,
    *,
    weighted: bool = False,
    n_terms: int | None = None,
) -> ApproxReal:
    """Enclosure of sum_{n>=1} S(n, m) x^n (or x^n / n when weighted).

    Requires rational 0 < |x| <= 1/2.  The partial sum is computed exactly;
    the returned bound is the rounding ulp of the final conversion plus the
    majorant tail, so the enclosure covers the full infinite sum.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if digits < 1:
        raise ValueError("digits must be at least 1")
    x = Fraction(x)
    if x == 0 or abs(x) > Fraction(1, 2):
        raise ValueError("x must satisfy 0 < |x| <= 1/2")
    target = Fraction(1, 2 * 10**digits)
    if n_terms is None:
        n_cut = _choose_cut(m, abs(x), target)
    else:
        if n_terms < 1:
            raise ValueError("n_terms must be at least 1")
        n_cut = n_terms
    tail = snm_tail_bound(m, abs(x), n_cut)
    row = _snm_row_start(m)
    power = Fraction(1)
    partial = Fraction(0)
    for n in range(1, n_cut + 1):
        _snm_row_updates(m, n, row)
        power *= x
        term = row[m] * power
        if weighted:
            term /= n
        partial += term
    return ApproxReal.from_fraction(partial, digits + 6).add_error(tail)


def zeta_via_sum(m: int, digits: int, *, n_terms: int | None = None) -> ApproxReal:
    """zeta(m) = 2^(m-2)/(2^(m-1) - 1) * sum_{n>=1} S(n, m) / 2^n, m >= 2."""
    if m < 2:
        raise ValueError("m must be at least 2")
    core = snm_series_sum(m, Fraction(1, 2), digits + 2, n_terms=n_terms)
    return core.mul_rational(Fraction(2 ** (m - 2), 2 ** (m - 1) - 1))


def zeta_via_weighted_sum(
    m: int, digits: int, *, n_terms: int | None = None
) -> ApproxReal:
    """zeta(m+1) = 2^m/(2^m - 1) * sum_{n>=1} S(n, m) / (n 2^n), m >= 1."""
    if m < 1:
        raise ValueError("m must be at least 1")
    core = snm_series_sum(
        m, Fraction(1, 2), digits + 2, weighted=True, n_terms=n_terms
    )
    return core.mul_rational(Fraction(2**m, 2**m - 1))


def li_value(m: int, x: Fraction, digits: int) -> ApproxReal:
    """Li_m(x) = sum_{k>=1} x^k / k^m for rational |x| <= 1/2.

    The cut K is the smallest index whose geometric tail
    |x|^(K+1) / (1 - |x|) drops below half an output unit; the bound covers
    that tail plus the single final rounding.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if digits < 1:
        raise ValueError("digits must be at least 1")
    x = Fraction(x)
    if abs(x) > Fraction(1, 2):
        raise ValueError("|x| must be at most 1/2")
    if x == 0:
        return ApproxReal.from_int(0, digits)
    target = Fraction(1, 2 * 10**digits)
    x_abs = abs(x)
    geom = 1 - x_abs
    k_cut = 1
    tail_power = x_abs * x_abs
    while tail_power / geom > target:
        k_cut += 1
        tail_power *= x_abs
    partial = Fraction(0)
    power = Fraction(1)
    for k in range(1, k_cut + 1):
        power *= x
        partial += power / k**m
    return ApproxReal.from_fraction(partial, digits + 6).add_error(tail_power / geom)


_ALTERNATING_SCALE = 30


def alternating_point_check(
    m: int, terms: int, accel: int = 0
) -> tuple[ApproxReal, ApproxReal]:
    """Partial sums of sum_{n>=1} (-1)^n S(n, m)/n against -Li_{m+1}(1/2).

    The series converges only conditionally (the substituted argument sits on
    the boundary of the generating function's domain), so no rigorous tail is
    claimed: the first element of the returned pair encloses the computed
    accelerated partial sum itself, with ``accel`` pairwise-averaging passes
    applied to the trailing partial sums.  The second element is the
    reference enclosure of -Li_{m+1}(1/2).
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if terms < 10:
        raise ValueError("terms must be at least 10")
    if accel < 0:
        raise ValueError("accel must be nonnegative")
    if accel + 1 > terms:
        raise ValueError("accel too large for the number of terms")
    scale = _ALTERNATING_SCALE
    row = [ApproxReal.from_int(1, scale)] + [
        ApproxReal.from_int(0, scale) for _ in range(m)
    ]
    partial = ApproxReal.from_int(0, scale)
    window: list[ApproxReal] = []
    for n in range(1, terms + 1):
        inv_n = Fraction(1, n)
        for j in range(1, m + 1):
            row[j] = row[j] + row[j - 1].mul_rational(inv_n)
        sign = inv_n if n % 2 == 0 else -inv_n
        partial = partial + row[m].mul_rational(sign)
        window.append(partial)
        if len(window) > accel + 1:
            window.pop(0)
    half = Fraction(1, 2)
    while len(window) > 1:
        window = [
            (window[i] + window[i + 1]).mul_rational(half)
            for i in range(len(window) - 1)
        ]
    reference = -li_value(m + 1, Fraction(1, 2), scale - 2)
    return window[0], reference


def golden_ratio_check(m: int, digits: int) -> tuple[ApproxReal, ApproxReal]:
    """Series at argument -rho (rho the inverse golden ratio) vs closed forms.

    m = 2:  sum_{n>=1} (H_n^2 + H_n^(2)) (-rho)^n / n     [= 2 S(n,2) terms]
            =  -(8/5) zeta(3) - (8/5) zeta(2) log rho + (4/3) log^3 rho
    m = 3:  sum_{n>=1} (H_n^3 + 3 H_n H_n^(2) + 2 H_n^(3)) (-rho)^(n-1)
            =  (24/5) zeta(3) + (24/5) zeta(2) log rho - 4 log^3 rho
            [= 6 S(n,3) terms]

    Both closed forms rest on Li_3(rho^2) = (4/5) zeta(3)
    + (4/5) zeta(2) log rho - (2/3) log^3 rho, where rho^2 = 1 - rho is the
    substituted argument.  The left sides are summed directly at geometric
    rate rho with the majorant tail evaluated at a rational upper bound of
    rho taken from its own enclosure.
    """
    if m not in (2, 3):
        raise ValueError("m must be 2 or 3")
    if digits < 10:
        raise ValueError("digits must be at least 10")
    work = digits + 10
    rho = inverse_golden_ratio(work)
    log_rho = log_inverse_golden_ratio(work + 2)
    z2 = zeta_reference(2, work + 2)
    z3 = zeta_reference(3, work + 2)
    rho_up = rho.abs_upper()
    rho_lo = rho.lower
    target = Fraction(1, 10 ** (digits + 4))

    if m == 2:
        n_cut = max(8, 3 * m + 2)
        while 2 * snm_tail_bound(2, rho_up, n_cut) > target:
            n_cut += 16
        tail = 2 * snm_tail_bound(2, rho_up, n_cut)
        row = _snm_row_start(2)
        power = ApproxReal.from_int(1, work)
        acc = ApproxReal.from_int(0, work)
        neg_rho = -rho
        for n in range(1, n_cut + 1):
            _snm_row_updates(2, n, row)
            power = power * neg_rho
            acc = acc + power.mul_rational(2 * row[2] / n)
        lhs = acc.add_error(tail)
        rhs = (
            z3.mul_rational(Fraction(-8, 5))
            + (z2 * log_rho).mul_rational(Fraction(-8, 5))
            + log_rho.pow_int(3).mul_rational(Fraction(4, 3))
        )
        return lhs, rhs

    n_cut = max(8, 3 * m + 2)
    while 6 * snm_tail_bound(3, rho_up, n_cut) / rho_lo > target:
        n_cut += 16
    tail = 6 * snm_tail_bound(3, rho_up, n_cut) / rho_lo
    row = _snm_row_start(3)
    power = ApproxReal.from_int(1, work)  # (-rho)^(n-1), so 1 at n = 1
    acc = ApproxReal.from_int(0, work)
    neg_rho = -rho
    for n in range(1, n_cut + 1):
        _snm_row_updates(3, n, row)
        acc = acc + power.mul_rational(6 * row[3])
        power = power * neg_rho
    lhs = acc.add_error(tail)
    rhs = (
        z3.mul_rational(Fraction(24, 5))
        + (z2 * log_rho).mul_rational(Fraction(24, 5))
        + log_rho.pow_int(3).mul_rational(Fraction(-4, 1))
    )
    return lhs, rhs


def negative_order_check(
    m: int, x: Fraction, digits: int
) -> tuple[ApproxReal, ApproxReal]:
    """Finite negative-order sum against its weighted geometric counterpart.

    For integer m >= 1 and rational -1 < x < 1/2:

        sum_{n=1..m} S(n, -m) x^n  =  1/(x-1) * sum_{k>=1} k^m y^k,

    with y = -x/(1-x) (so |y| < 1 on the stated domain).  The left side is a
    finite exact sum because S(n, -m) vanishes for n > m; the right side is
    evaluated with a ratio-test geometric tail bound.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if digits < 1:
        raise ValueError("digits must be at least 1")
    x = Fraction(x)
    if not -1 < x < Fraction(1, 2):
        raise ValueError("x must lie in (-1, 1/2)")
    scale = digits + 6
    lhs_exact = sum(
        (snm_direct(n, -m) * x**n for n in range(1, m + 1)), Fraction(0)
    )
    lhs = ApproxReal.from_fraction(lhs_exact, scale)
    if x == 0:
        return lhs, ApproxReal.from_int(0, scale)

    y = -x / (1 - x)
    y_abs = abs(y)
    factor = Fraction(1, x - 1)
    target = Fraction(1, 2 * 10**digits) / abs(factor)
    k_cut = max(8, 3 * m + 2)

    def tail(k: int) -> Fraction:
        ratio = y_abs * Fraction(k + 2, k + 1) ** m
        if ratio >= 1:
            raise ValueError(f"tail ratio {ratio} >= 1 at k_cut={k}")
        return (k + 1) ** m * y_abs ** (k + 1) / (1 - ratio)

    while tail(k_cut) > target:
        k_cut += max(8, k_cut // 4)
    partial = Fraction(0)
    power = Fraction(1)
    for k in range(1, k_cut + 1):
        power *= y
        partial += k**m * power
    rhs = ApproxReal.from_fraction(partial * factor, scale).add_error(
        tail(k_cut) * abs(factor)
    )
    return lhs, rhs
