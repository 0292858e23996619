"""Truncated formal power series over the rationals.

A series of order N stores exact coefficients c_0..c_N and all arithmetic is
performed mod x^(N+1).  The point of this module is the generating-function
cross-check: the coefficients of -(1/(1-x)) Li_m(-x/(1-x)), produced here by
generic truncated composition, must reproduce the alternating binomial sums
S(n, m) coefficient by coefficient.  Using a generic composition (instead of
a binomial-transform shortcut) keeps that check independent of the identity
it verifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "PowerSeries",
    "ps_polylog",
    "ps_mul",
    "ps_compose",
    "ps_geometric",
    "gf_coefficients",
    "gf_integrated_coefficients",
]


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients c_0..c_N of a series truncated at order N = len - 1."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a power series needs at least the constant coefficient")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1


def _mul_lists(a: list[Fraction] | tuple[Fraction, ...],
               b: list[Fraction] | tuple[Fraction, ...],
               order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(order + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def ps_polylog(m: int, order: int) -> PowerSeries:
    """Series with c_0 = 0 and c_k = 1/k^m: the polylogarithm Li_m truncated."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [Fraction(0)] + [Fraction(1, k**m) for k in range(1, order + 1)]
    return PowerSeries(tuple(coeffs))


def ps_geometric(order: int) -> PowerSeries:
    """1/(1-x) truncated: all coefficients 1."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return PowerSeries((Fraction(1),) * (order + 1))


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Truncated Cauchy product; both factors must share the same order."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    return PowerSeries(tuple(_mul_lists(a.coefficients, b.coefficients, a.order)))


def ps_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """Truncated composition outer(inner), Horner over series.

    Requires inner to have zero constant term (otherwise the truncated
    composition would depend on coefficients beyond the stored order) and
    matching orders.
    """
    if outer.order != inner.order:
        raise ValueError(f"order mismatch: {outer.order} vs {inner.order}")
    if inner.coefficients[0] != 0:
        raise ValueError("composition requires inner constant term zero")
    order = outer.order
    acc = [outer.coefficients[order]] + [Fraction(0)] * order
    for i in range(order - 1, -1, -1):
        acc = _mul_lists(acc, inner.coefficients, order)
        acc[0] += outer.coefficients[i]
    return PowerSeries(tuple(acc))


def _neg_substitution(order: int) -> PowerSeries:
    # -x/(1-x) = -(x + x^2 + x^3 + ...)
    return PowerSeries((Fraction(0),) + (Fraction(-1),) * order)


def gf_coefficients(m: int, order: int) -> list[Fraction]:
    """Coefficients of -(1/(1-x)) Li_m(-x/(1-x)) up to the given order.

    Coefficient n equals S(n, m); the identity suites compare against the
    recurrence table entry by entry.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if order < 1:
        raise ValueError("order must be at least 1")
    comp = ps_compose(ps_polylog(m, order), _neg_substitution(order))
    product = ps_mul(ps_geometric(order), comp)
    return [-c for c in product.coefficients]


def gf_integrated_coefficients(m: int, order: int) -> list[Fraction]:
    """Coefficients of -Li_{m+1}(-x/(1-x)); coefficient n equals S(n, m)/n."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if order < 1:
        raise ValueError("order must be at least 1")
    comp = ps_compose(ps_polylog(m + 1, order), _neg_substitution(order))
    return [-c for c in comp.coefficients]
