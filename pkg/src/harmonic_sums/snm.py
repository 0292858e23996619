"""Alternating binomial sums over inverse powers, computed five ways.

The central quantity, for n >= 1 and any integer order m, is

    S(n, m) = sum_{k=1..n} C(n,k) (-1)^(k-1) / k^m,

which for m >= 1 also equals the sum of 1/(r_1 * ... * r_m) over all weakly
decreasing chains n >= r_1 >= ... >= r_m >= 1, i.e. the complete homogeneous
symmetric polynomial h_m(1, 1/2, ..., 1/n).

Five independent routes are provided:

* ``build_snm_table``  dynamic program over the recurrence
  S(n, m) = sum_{k<=n} S(k, m-1)/k (the production path, O(n*m) rational ops),
* ``snm_direct``       literal evaluation of the defining sum (any sign of m;
  negative m uses exact integer powers k^|m|),
* ``snm_nested``       literal enumeration of the decreasing chains (oracle,
  guarded because the chain count is C(n+m-1, m)),
* ``snm_bell``         complete Bell polynomial in 0! H_n, 1! H_n^(2), ...,
* ``snm_newton``       Newton's identity for h_m from power sums H_n^(i),

plus the explicit harmonic-number closed forms for m = 1..5 and the Stirling
number bridge S2(n, m) = (-1)^(m-1) S(m, -n) / m!.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial, prod

from .exact import binomial, binomial_row
from .harmonic import harmonic

__all__ = [
    "NESTED_GUARD",
    "SnmTable",
    "build_snm_table",
    "snm_direct",
    "snm_nested",
    "snm_nested_prefix",
    "snm_bell",
    "snm_newton",
    "snm_closed_form",
    "stirling2",
]

# snm_nested refuses n + m beyond this: the number of chains is C(n+m-1, m)
# and enumeration is meant to blow up loudly, not silently truncate.
NESTED_GUARD = 30


@dataclass(frozen=True)
class SnmTable:
    """Immutable table of S(k, j) for 1 <= k <= n_max, 0 <= j <= m_max.

    ``columns[j][k]`` holds S(k, j); index 0 of each column is unused.
    """

    n_max: int
    m_max: int
    columns: tuple[tuple[Fraction, ...], ...]

    def value(self, k: int, j: int) -> Fraction:
        if not 1 <= k <= self.n_max:
            raise ValueError(f"k={k} outside table range 1..{self.n_max}")
        if not 0 <= j <= self.m_max:
            raise ValueError(f"j={j} outside table range 0..{self.m_max}")
        return self.columns[j][k]


def build_snm_table(n_max: int, m_max: int) -> SnmTable:
    """Exact O(n_max * m_max) dynamic program.

    Column 0 is all ones; column j is the running prefix sum of column j-1
    weighted by 1/k.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    columns = [tuple([Fraction(0)] + [Fraction(1)] * n_max)]
    for _ in range(m_max):
        prev = columns[-1]
        col = [Fraction(0)]
        acc = Fraction(0)
        for k in range(1, n_max + 1):
            acc += prev[k] / k
            col.append(acc)
        columns.append(tuple(col))
    return SnmTable(n_max, m_max, tuple(columns))


def snm_direct(n: int, m: int) -> Fraction:
    """Literal alternating sum; m may be any sign.

    For m < 0 the terms are C(n,k) (-1)^(k-1) k^|m|, still exact integers.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    row = binomial_row(n)
    total = Fraction(0)
    for k in range(1, n + 1):
        if m >= 0:
            term = Fraction(row[k], k**m)
        else:
            term = Fraction(row[k] * k ** (-m))
        total += term if k % 2 == 1 else -term
    return total


def _require_nested_size(n: int, m: int) -> None:
    if n + m > NESTED_GUARD:
        raise ValueError(
            f"nested enumeration limited to n + m <= {NESTED_GUARD} "
            f"(got n={n}, m={m}; the chain count C(n+m-1, m) explodes)"
        )


def snm_nested(n: int, m: int) -> Fraction:
    """Chain-enumeration oracle: sum of 1/prod(chain) over weakly decreasing
    chains of length m with entries in 1..n.

    Chains are enumerated as multisets (the product does not depend on the
    order) and grouped by product before the final exact summation.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if m < 0:
        raise ValueError("m must be nonnegative")
    _require_nested_size(n, m)
    if m == 0:
        return Fraction(1)  # the single empty chain
    counts: Counter[int] = Counter()
    for chain in combinations_with_replacement(range(1, n + 1), m):
        counts[prod(chain)] += 1
    return sum((Fraction(c, p) for p, c in sorted(counts.items())), Fraction(0))


def snm_nested_prefix(n_max: int, m: int) -> list[Fraction]:
    """Batch form of :func:`snm_nested`: values for every n = 1..n_max.

    One enumeration at n_max suffices: a chain contributes to S(n, m) exactly
    when n >= max(chain), so grouping chains by their maximum and prefix
    summing yields all n at once.  Index 0 of the returned list is unused.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if m < 0:
        raise ValueError("m must be nonnegative")
    _require_nested_size(n_max, m)
    if m == 0:
        return [Fraction(0)] + [Fraction(1)] * n_max
    per_max: list[Counter[int]] = [Counter() for _ in range(n_max + 1)]
    for chain in combinations_with_replacement(range(1, n_max + 1), m):
        per_max[chain[-1]][prod(chain)] += 1
    out = [Fraction(0)]
    acc = Fraction(0)
    for n in range(1, n_max + 1):
        acc += sum((Fraction(c, p) for p, c in sorted(per_max[n].items())), Fraction(0))
        out.append(acc)
    return out


def snm_bell(n: int, m: int) -> Fraction:
    """S(n, m) = Y_m(0! H_n^(1), 1! H_n^(2), ..., (m-1)! H_n^(m)) / m!

    where Y is the complete Bell polynomial, computed by the recurrence
    Y_{r+1} = sum_{j=0..r} C(r,j) Y_{r-j} x_{j+1} with Y_0 = 1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if m < 0:
        raise ValueError("m must be nonnegative")
    x = [factorial(i) * harmonic(n, i + 1) for i in range(m)]
    y = [Fraction(1)]
    for r in range(m):
        y.append(
            sum(
                (binomial(r, j) * y[r - j] * x[j] for j in range(r + 1)),
                Fraction(0),
            )
        )
    return y[m] / factorial(m)


def snm_newton(n: int, m: int) -> Fraction:
    """S(n, m) as h_m(1, 1/2, ..., 1/n) via Newton's identity.

    With power sums p_i = H_n^(i):  r * h_r = sum_{i=1..r} p_i h_{r-i}, h_0 = 1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if m < 0:
        raise ValueError("m must be nonnegative")
    p = [harmonic(n, i) for i in range(1, m + 1)]
    h = [Fraction(1)]
    for r in range(1, m + 1):
        h.append(
            sum((p[i - 1] * h[r - i] for i in range(1, r + 1)), Fraction(0)) / r
        )
    return h[m]


def snm_closed_form(n: int, m: int) -> Fraction:
    """Explicit harmonic-number polynomials for m = 1..5."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 1 <= m <= 5:
        raise ValueError("closed forms are available for m in 1..5 only")
    h1 = harmonic(n, 1)
    if m == 1:
        return h1
    h2 = harmonic(n, 2)
    if m == 2:
        return (h1**2 + h2) / 2
    h3 = harmonic(n, 3)
    if m == 3:
        return h1**3 / 6 + h1 * h2 / 2 + h3 / 3
    h4 = harmonic(n, 4)
    if m == 4:
        return (h1**4 + 6 * h1**2 * h2 + 8 * h1 * h3 + 3 * h2**2 + 6 * h4) / 24
    h5 = harmonic(n, 5)
    return (
        h1**5
        + 10 * h1**3 * h2
        + 20 * h1**2 * h3
        + 15 * h1 * h2**2
        + 30 * h1 * h4
        + 20 * h2 * h3
        + 24 * h5
    ) / 120


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind by S2(n,m) = m S2(n-1,m) + S2(n-1,m-1).

    Bridges to the alternating sums as
    S2(n, m) = (-1)^(m-1) * snm_direct(m, -n) / m!  for 1 <= m <= n; the sign
    exponent is pinned by the brute-force set-partition count in the tests.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if m > n:
        return 0
    if n == 0:
        return 1
    cur = [1] + [0] * m
    for i in range(1, n + 1):
        nxt = [0] * (m + 1)
        for j in range(1, min(i, m) + 1):
            nxt[j] = j * cur[j] + cur[j - 1]
        cur = nxt
    return cur[m]
