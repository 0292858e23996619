"""Exact integer and rational building blocks.

Plain ``int`` (arbitrary precision) and ``fractions.Fraction`` (always
reduced, denominator positive) are the scalar types used throughout the
package.  This module adds binomial coefficients, rational polynomials and
the alternating forward-difference operator that the identity suites are
built on.  Everything here is pure and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

__all__ = [
    "binomial",
    "binomial_row",
    "Polynomial",
    "poly_eval",
    "forward_difference_n",
    "lemma11_lhs",
    "lemma11_rhs",
]

# Accessor convention: sequence arguments are callables index -> Fraction so
# callers can pass table lookups without materializing arrays.
SequenceAccessor = Callable[[int], Fraction]


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def binomial_row(n: int) -> list[int]:
    """Row ``[C(n,0), ..., C(n,n)]`` by the multiplicative recurrence.

    Each step performs one exact integer division (C(n,k) = C(n,k-1)*(n-k+1)/k,
    always divisible), so building the row costs O(n) big-integer operations.
    Hot loops should use this instead of n separate binomial() calls.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for k in range(1, n + 1):
        row.append(row[-1] * (n - k + 1) // k)
    return row


@dataclass(frozen=True)
class Polynomial:
    """Polynomial over the rationals; ``coefficients[i]`` belongs to t**i.

    Trailing zero coefficients are stripped on construction.  The zero
    polynomial has an empty coefficient tuple and ``degree is None``; the
    marker is deliberately not an integer so that accidental arithmetic on
    it fails loudly.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int | None:
        return len(self.coefficients) - 1 if self.coefficients else None

    @property
    def leading_coefficient(self) -> Fraction:
        """Coefficient of the highest power; 0 for the zero polynomial."""
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, x: Fraction | int) -> Fraction:
        return poly_eval(self, x)


def poly_eval(p: Polynomial, x: Fraction | int) -> Fraction:
    """Exact value of ``p`` at ``x`` (Horner's scheme)."""
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def forward_difference_n(a: SequenceAccessor, n: int) -> Fraction:
    """n-th forward difference at 0: sum_{k=0..n} (-1)^(n-k) C(n,k) a(k).

    Applied to a(k) = k**m this vanishes for m < n and equals n! for m = n;
    more generally, for a polynomial a of degree exactly n with leading
    coefficient c it equals n! * c.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = binomial_row(n)
    total = Fraction(0)
    for k in range(n + 1):
        term = row[k] * Fraction(a(k))
        total += term if (n - k) % 2 == 0 else -term
    return total


def lemma11_lhs(a: SequenceAccessor, n: int) -> Fraction:
    """sum_{k=1..n} (1/k) sum_{j=1..k} (-1)^j C(k,j) a(j).

    Equal to :func:`lemma11_rhs` for every sequence; the pair exists so the
    equality can be checked as a property rather than assumed.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    values = [Fraction(0)] + [Fraction(a(j)) for j in range(1, n + 1)]
    total = Fraction(0)
    for k in range(1, n + 1):
        row = binomial_row(k)
        inner = Fraction(0)
        for j in range(1, k + 1):
            term = row[j] * values[j]
            inner += term if j % 2 == 0 else -term
        total += inner / k
    return total


def lemma11_rhs(a: SequenceAccessor, n: int) -> Fraction:
    """sum_{k=1..n} (-1)^k C(n,k) a(k) / k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = binomial_row(n)
    total = Fraction(0)
    for k in range(1, n + 1):
        term = Fraction(row[k], k) * Fraction(a(k))
        total += term if k % 2 == 0 else -term
    return total
