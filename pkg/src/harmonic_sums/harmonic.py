"""Exact generalized harmonic numbers H_n^(r) = sum_{k=1..n} 1/k^r.

Values are produced either one at a time through a growing module-level
cache (:func:`harmonic`) or as an immutable triangular table meant to be
built once and shared by reference (:func:`build_harmonic_table`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["HarmonicTable", "build_harmonic_table", "harmonic"]


@dataclass(frozen=True)
class HarmonicTable:
    """Immutable table of H_k^(r) for 0 <= k <= n_max, 1 <= r <= r_max."""

    n_max: int
    r_max: int
    rows: tuple[tuple[Fraction, ...], ...]

    def value(self, k: int, r: int) -> Fraction:
        if not 0 <= k <= self.n_max:
            raise ValueError(f"k={k} outside table range 0..{self.n_max}")
        if not 1 <= r <= self.r_max:
            raise ValueError(f"r={r} outside table range 1..{self.r_max}")
        return self.rows[r - 1][k]


def build_harmonic_table(n_max: int, r_max: int) -> HarmonicTable:
    """Fill the table by the prefix-sum recurrence H_k^(r) = H_{k-1}^(r) + 1/k^r.

    H_0^(r) = 0 for every r.  Each 1/k^r is formed by an exact integer power
    followed by a single inversion, so entries are born reduced.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    rows = []
    for r in range(1, r_max + 1):
        row = [Fraction(0)]
        for k in range(1, n_max + 1):
            row.append(row[-1] + Fraction(1, k**r))
        rows.append(tuple(row))
    return HarmonicTable(n_max, r_max, tuple(rows))


_cache: dict[int, list[Fraction]] = {}


def harmonic(n: int, r: int) -> Fraction:
    """H_n^(r), memoized through a per-order prefix column."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if r < 1:
        raise ValueError("r must be at least 1")
    col = _cache.setdefault(r, [Fraction(0)])
    while len(col) <= n:
        k = len(col)
        col.append(col[-1] + Fraction(1, k**r))
    return col[n]
