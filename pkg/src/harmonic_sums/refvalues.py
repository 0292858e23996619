"""Independently derived reference constants with rigorous enclosures.

The series evaluations elsewhere in the package are checked against
references that share none of their code paths: zeta values come from
Euler-Maclaurin summation with the classic first-omitted-term remainder
bound, logarithms from inverse-hyperbolic-tangent series with geometric
tails, and square roots from exact integer square roots with a one-ulp
bracket.  All intermediate quantities are exact rationals or
:class:`~harmonic_sums.approx.ApproxReal` enclosures; no constant is ever
pasted in from outside.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, isqrt

from .approx import ApproxReal

__all__ = [
    "bernoulli_even_list",
    "zeta_reference",
    "artanh_reference",
    "log2_reference",
    "sqrt5_reference",
    "inverse_golden_ratio",
    "log_inverse_golden_ratio",
]


def bernoulli_even_list(count: int) -> list[Fraction]:
    """[B_0, B_2, ..., B_{2(count-1)}] exactly, via the binomial recurrence.

    Odd-index Bernoulli numbers vanish from B_3 on, so the recurrence
    sum_{r=0}^{m} C(m+1, r) B_r = 0 is walked over even indices only, with
    the single B_1 = -1/2 term added explicitly.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    out = [Fraction(1)]
    for m in range(1, count):
        n = 2 * m
        s = sum((comb(n + 1, 2 * j) * out[j] for j in range(m)), Fraction(0))
        s += Fraction(-(n + 1), 2)  # the B_1 contribution
        out.append(-s / (n + 1))
    return out


def zeta_reference(s: int, digits: int) -> ApproxReal:
    """zeta(s) for integer s >= 2 by Euler-Maclaurin summation.

    zeta(s) = sum_{n<M} n^-s  +  M^(1-s)/(s-1)  +  M^-s/2
              + sum_{j=1..J} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * M^(-s-2j+1)
              + R,
    with |R| bounded by the magnitude of the first omitted correction term
    (the derivatives of x^-s have constant sign, so the remainder alternates).
    Every term is an exact rational; M doubles until the remainder bound
    meets the target.
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    if digits < 1:
        raise ValueError("digits must be at least 1")
    target = Fraction(1, 10 ** (digits + 2))
    j_terms = max(4, digits)
    bern = bernoulli_even_list(j_terms + 2)

    def correction(j: int, m_pivot: int) -> Fraction:
        rising = 1
        for i in range(2 * j - 1):
            rising *= s + i
        return bern[j] * Fraction(rising, factorial(2 * j) * m_pivot ** (s + 2 * j - 1))

    m_pivot = max(8, s, digits)
    while True:
        bound = abs(correction(j_terms + 1, m_pivot))
        if bound <= target:
            break
        m_pivot *= 2
    value = sum((Fraction(1, n**s) for n in range(1, m_pivot)), Fraction(0))
    value += Fraction(1, (s - 1) * m_pivot ** (s - 1)) + Fraction(1, 2 * m_pivot**s)
    for j in range(1, j_terms + 1):
        value += correction(j, m_pivot)
    return ApproxReal.from_fraction(value, digits + 4).add_error(bound)


def artanh_reference(t: ApproxReal, digits: int) -> ApproxReal:
    """artanh(t) = t + t^3/3 + t^5/5 + ... for an enclosed |t| <= 7/10.

    The truncation tail after the x^(2j+1) term is bounded by
    |t|^(2j+3) / ((2j+3)(1 - t^2)) using the enclosure's own upper bound
    on |t|, so the result is rigorous for any sound input enclosure.
    """
    t_abs = t.abs_upper()
    if t_abs > Fraction(7, 10):
        raise ValueError("argument enclosure must satisfy |t| <= 7/10")
    scale = digits + 8
    target = Fraction(1, 10 ** (digits + 2))
    t = t.with_scale(scale)
    t_sq = t * t
    t_abs_sq = t_abs * t_abs
    geom = 1 - t_abs_sq
    power = t
    total = t
    tail_power = t_abs**3
    j = 1
    while True:
        tail = tail_power / ((2 * j + 1) * geom)
        if tail <= target:
            return total.add_error(tail)
        power = power * t_sq
        total = total + power.mul_rational(Fraction(1, 2 * j + 1))
        tail_power *= t_abs_sq
        j += 1


def log2_reference(digits: int) -> ApproxReal:
    """log 2 = 2 artanh(1/3)."""
    t = ApproxReal.from_fraction(Fraction(1, 3), digits + 10)
    return artanh_reference(t, digits + 2).mul_rational(2)


def sqrt5_reference(digits: int) -> ApproxReal:
    """sqrt(5) bracketed by the exact integer square root.

    With v = isqrt(5 * 10^(2s)) the bracket v <= sqrt(5) 10^s < v + 1 is an
    exact integer statement, giving a one-ulp enclosure.
    """
    if digits < 1:
        raise ValueError("digits must be at least 1")
    scale = digits + 6
    v = isqrt(5 * 10 ** (2 * scale))
    if not v * v <= 5 * 10 ** (2 * scale) < (v + 1) * (v + 1):
        raise AssertionError("integer square root bracket failed")
    return ApproxReal(v, scale, 1)


def inverse_golden_ratio(digits: int) -> ApproxReal:
    """rho = (sqrt(5) - 1)/2, the positive root of rho^2 + rho = 1."""
    s5 = sqrt5_reference(digits + 2)
    one = ApproxReal.from_int(1, s5.scale)
    return (s5 - one).mul_rational(Fraction(1, 2))


def log_inverse_golden_ratio(digits: int) -> ApproxReal:
    """log rho = 2 artanh(2 - sqrt(5)).

    (rho - 1)/(rho + 1) rationalizes to 2 - sqrt(5), which keeps the artanh
    argument small (about -0.236) and the series geometric.
    """
    s5 = sqrt5_reference(digits + 4)
    two = ApproxReal.from_int(2, s5.scale)
    return artanh_reference(two - s5, digits + 2).mul_rational(2)
