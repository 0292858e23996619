"""Machine verification of the finite identities, with counterexample reports.

Every suite compares exact rationals; there is no tolerance anywhere in this
module (an epsilon would only mask bugs in exact arithmetic).  A failing
comparison stops the suite and lands in the report as the offending inputs
together with both sides rendered as exact fractions.  Suites that draw
random samples take an explicit seed, record it in the report, and are fully
deterministic given that seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import Polynomial, binomial_row, forward_difference_n, poly_eval
from .harmonic import HarmonicTable, build_harmonic_table
from .snm import (
    NESTED_GUARD,
    SnmTable,
    build_snm_table,
    snm_bell,
    snm_closed_form,
    snm_direct,
    snm_nested_prefix,
    snm_newton,
)

__all__ = [
    "DEFAULT_SEED",
    "Counterexample",
    "IdentityReport",
    "SuiteConfig",
    "verify_five_way",
    "verify_dilcher",
    "verify_inversion_pair",
    "verify_bang",
    "verify_boole_gould",
    "verify_harmonic_ladder",
    "verify_cubic_telescoping",
    "run_all_suites",
    "all_pass",
    "report_line",
    "report_text",
    "report_json_dict",
]

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class Counterexample:
    inputs: dict[str, object]
    lhs: Fraction
    rhs: Fraction

    def render(self) -> str:
        ins = " ".join(f"{k}={v}" for k, v in self.inputs.items())
        return f"inputs: {ins}; lhs={self.lhs}; rhs={self.rhs}"


@dataclass(frozen=True)
class IdentityReport:
    identity_name: str
    range_tested: str
    status: str  # "pass" | "fail"
    counterexample: Counterexample | None = None
    seed: int | None = None
    note: str | None = None

    def __post_init__(self) -> None:
        if self.status not in ("pass", "fail"):
            raise ValueError("status must be 'pass' or 'fail'")
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")


def report_line(report: IdentityReport) -> str:
    """One record per line, tab-separated, '-' for absent fields."""
    seed = str(report.seed) if report.seed is not None else "-"
    ce = report.counterexample.render() if report.counterexample else "-"
    return "\t".join(
        [report.identity_name, report.range_tested, report.status, seed, ce]
    )


def report_text(report: IdentityReport) -> str:
    lines = [f"{report.identity_name}: {report.status.upper()}"]
    lines.append(f"  range: {report.range_tested}")
    if report.seed is not None:
        lines.append(f"  seed: {report.seed}")
    if report.note:
        lines.append(f"  note: {report.note}")
    if report.counterexample:
        lines.append(f"  counterexample: {report.counterexample.render()}")
    return "\n".join(lines)


def report_json_dict(report: IdentityReport) -> dict[str, object]:
    ce = None
    if report.counterexample:
        ce = {
            "inputs": dict(report.counterexample.inputs),
            "lhs": str(report.counterexample.lhs),
            "rhs": str(report.counterexample.rhs),
        }
    return {
        "name": report.identity_name,
        "range": report.range_tested,
        "status": report.status,
        "seed": report.seed,
        "note": report.note,
        "counterexample": ce,
    }


def all_pass(reports: list[IdentityReport]) -> bool:
    return all(r.status == "pass" for r in reports)


def _pass(name: str, rng_desc: str, seed: int | None = None,
          note: str | None = None) -> IdentityReport:
    return IdentityReport(name, rng_desc, "pass", None, seed, note)


def _fail(name: str, rng_desc: str, inputs: dict[str, object], lhs: Fraction,
          rhs: Fraction, seed: int | None = None,
          note: str | None = None) -> IdentityReport:
    return IdentityReport(
        name, rng_desc, "fail", Counterexample(inputs, lhs, rhs), seed, note
    )


def _validate_range(n_max: int, m_max: int = 1) -> None:
    if n_max < 0 or m_max < 0:
        raise ValueError("ranges must be nonnegative")


# ----------------------------------------------------------------------
# Route agreement suites
# ----------------------------------------------------------------------


def _route_agreement(
    name: str,
    n_max: int,
    m_max: int,
    nested_guard: int,
    extra_routes: bool,
    snm_table: SnmTable | None,
) -> IdentityReport:
    rng_desc = (
        f"n <= {n_max}, m <= {m_max}; chain enumeration for n + m <= {nested_guard}"
    )
    if n_max < 1 or m_max < 0:
        return _pass(name, "empty range")
    table = snm_table or build_snm_table(n_max, m_max)
    direct = [[Fraction(0)] * (m_max + 1)]  # index n = 0 unused
    direct += [
        [snm_direct(n, m) for m in range(m_max + 1)] for n in range(1, n_max + 1)
    ]

    def mismatch(n: int, m: int, path: str, other: Fraction) -> IdentityReport:
        return _fail(
            name, rng_desc, {"n": n, "m": m, "path": path}, direct[n][m], other
        )

    for n in range(1, n_max + 1):
        for m in range(m_max + 1):
            got = table.value(n, m)
            if got != direct[n][m]:
                return mismatch(n, m, "table", got)
    for m in range(m_max + 1):
        top = min(n_max, nested_guard - m)
        if top < 1:
            continue
        nested = snm_nested_prefix(top, m)
        for n in range(1, top + 1):
            if nested[n] != direct[n][m]:
                return mismatch(n, m, "nested", nested[n])
    if extra_routes:
        for n in range(1, n_max + 1):
            for m in range(m_max + 1):
                got = snm_bell(n, m)
                if got != direct[n][m]:
                    return mismatch(n, m, "bell", got)
                got = snm_newton(n, m)
                if got != direct[n][m]:
                    return mismatch(n, m, "newton", got)
            for m in range(1, min(5, m_max) + 1):
                got = snm_closed_form(n, m)
                if got != direct[n][m]:
                    return mismatch(n, m, "closed-form", got)
    return _pass(name, rng_desc)


def verify_five_way(
    n_max: int,
    m_max: int,
    *,
    nested_guard: int = NESTED_GUARD,
    snm_table: SnmTable | None = None,
) -> IdentityReport:
    """All routes must agree exactly: direct sum, recurrence table, chain
    enumeration (within the guard), Bell polynomials, Newton's identity, and
    the closed forms for m <= 5."""
    _validate_range(n_max, m_max)
    return _route_agreement(
        "five-way", n_max, m_max, nested_guard, True, snm_table
    )


def verify_dilcher(
    n_max: int,
    m_max: int,
    *,
    nested_guard: int = NESTED_GUARD,
    snm_table: SnmTable | None = None,
) -> IdentityReport:
    """Defining sum vs chain enumeration vs recurrence table.

    This is the equivalence of the alternating binomial sum with the nested
    weakly-decreasing-chain sum (Dilcher's identity, proved much earlier by
    Olds), exercised route against route.
    """
    _validate_range(n_max, m_max)
    return _route_agreement(
        "dilcher", n_max, m_max, nested_guard, False, snm_table
    )


# ----------------------------------------------------------------------
# Inversion-based suites
# ----------------------------------------------------------------------


def verify_inversion_pair(
    n_max: int,
    m_max: int,
    *,
    snm_table: SnmTable | None = None,
    harmonic_table: HarmonicTable | None = None,
) -> IdentityReport:
    """The binomial-inversion pair linking S(n, m) and H_n^(m+1):

        sum_{k=1..n} (-1)^(k-1) C(n,k) S(k, m)/k      = H_n^(m+1)
        sum_{k=1..n} (-1)^(k-1) C(n,k) H_k^(m+1)      = S(n, m)/n

    The m = 1 instance of the first line is the weighted-harmonic identity
    sum (-1)^(k-1) C(n,k) H_k/k = H_n^(2) (Sun and Zhao).
    """
    _validate_range(n_max, m_max)
    name = "inversion-pair"
    rng_desc = f"n <= {n_max}, 1 <= m <= {m_max}, both directions"
    if n_max < 1 or m_max < 1:
        return _pass(name, "empty range")
    table = snm_table or build_snm_table(n_max, m_max)
    harm = harmonic_table or build_harmonic_table(n_max, m_max + 1)
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            row = binomial_row(n)
            forward = Fraction(0)
            dual = Fraction(0)
            for k in range(1, n + 1):
                sgn = 1 if k % 2 == 1 else -1
                forward += sgn * Fraction(row[k], k) * table.value(k, m)
                dual += sgn * row[k] * harm.value(k, m + 1)
            want_forward = harm.value(n, m + 1)
            if forward != want_forward:
                return _fail(
                    name, rng_desc,
                    {"n": n, "m": m, "direction": "sum-to-harmonic"},
                    forward, want_forward,
                )
            want_dual = table.value(n, m) / n
            if dual != want_dual:
                return _fail(
                    name, rng_desc,
                    {"n": n, "m": m, "direction": "harmonic-to-sum"},
                    dual, want_dual,
                )
    return _pass(
        name, rng_desc,
        note="m=1 forward direction is the weighted-harmonic identity of Sun and Zhao",
    )


def verify_bang(
    n_max: int, *, harmonic_table: HarmonicTable | None = None
) -> IdentityReport:
    """Bang's double-sum problem:

        sum_{k=1..n} (-1)^(k-1) C(n,k) (1/k) sum_{j=1..k} H_j/j  =  H_n^(3).

    The inner prefix sums equal the order-2 chain sums
    (sum_{j<=k} H_j/j = (H_k^2 + H_k^(2))/2), which is asserted along the
    way; through that equality this is the m = 2 inversion instance.
    """
    _validate_range(n_max)
    name = "bang"
    rng_desc = f"n <= {n_max}"
    if n_max < 1:
        return _pass(name, "empty range")
    harm = harmonic_table or build_harmonic_table(n_max, 3)
    inner = [Fraction(0)] * (n_max + 1)
    acc = Fraction(0)
    for k in range(1, n_max + 1):
        acc += harm.value(k, 1) / k
        inner[k] = acc
        chain2 = (harm.value(k, 1) ** 2 + harm.value(k, 2)) / 2
        if acc != chain2:
            return _fail(
                name, rng_desc, {"k": k, "part": "inner-prefix"}, acc, chain2
            )
    for n in range(1, n_max + 1):
        row = binomial_row(n)
        total = Fraction(0)
        for k in range(1, n + 1):
            sgn = 1 if k % 2 == 1 else -1
            total += sgn * Fraction(row[k], k) * inner[k]
        want = harm.value(n, 3)
        if total != want:
            return _fail(name, rng_desc, {"n": n}, total, want)
    return _pass(name, rng_desc)


# ----------------------------------------------------------------------
# Finite-difference suites
# ----------------------------------------------------------------------


def _random_fraction(rng: random.Random, lo: int = -9, hi: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 9))


def _random_polynomial(rng: random.Random, degree: int) -> Polynomial:
    coeffs = [_random_fraction(rng) for _ in range(degree + 1)]
    coeffs[-1] = Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 9))
    return Polynomial(tuple(coeffs))


def verify_boole_gould(
    n_max: int, trials: int, *, seed: int = DEFAULT_SEED
) -> IdentityReport:
    """The vanishing/n! dichotomy of alternating binomial transforms.

    For each n <= n_max:
      (a) the n-th forward difference of k^m is 0 for m < n and n! for m = n;
      (b) for random rational polynomials f of degree d <= n,
          sum_k (-1)^k C(n,k) f(k) is 0 when d < n and (-1)^n n! times the
          leading coefficient when d = n (Gould's form);
      (c) the shifted-argument specializations: for a polynomial P of degree
          n with leading coefficient c and rationals a, b != 0,
          sum_k (-1)^(n-k) C(n,k) P(a + k b) = c b^n n!  (Phoata), and for
          rationals x != 0, y and 0 <= m <= n,
          sum_k (-1)^k C(n,k) (x k + y)^m follows the same dichotomy with
          value (-1)^n x^n n! at m = n (Katsuura).
    """
    _validate_range(n_max)
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    name = "boole-gould"
    rng_desc = f"n <= {n_max}, {trials} random polynomials per n"
    if n_max < 1:
        return _pass(name, "empty range", seed=seed)
    rng = random.Random(seed)
    spot_trials = max(1, trials // 10)
    for n in range(1, n_max + 1):
        row = binomial_row(n)
        fact_n = factorial(n)
        for m in range(n + 1):
            got = forward_difference_n(lambda k, m=m: Fraction(k**m), n)
            want = Fraction(fact_n if m == n else 0)
            if got != want:
                return _fail(
                    name, rng_desc, {"n": n, "m": m, "form": "power"},
                    got, want, seed=seed,
                )
        for t in range(trials):
            d = rng.randint(0, n)
            p = _random_polynomial(rng, d)
            total = Fraction(0)
            for k in range(n + 1):
                term = row[k] * poly_eval(p, k)
                total += term if k % 2 == 0 else -term
            if d < n:
                want = Fraction(0)
            else:
                want = (-1) ** n * fact_n * p.leading_coefficient
            if total != want:
                return _fail(
                    name, rng_desc,
                    {"n": n, "trial": t, "degree": d, "form": "gould"},
                    total, want, seed=seed,
                )
        for t in range(spot_trials):
            p = _random_polynomial(rng, n)
            a = _random_fraction(rng)
            b = Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 9))
            total = Fraction(0)
            for k in range(n + 1):
                term = row[k] * poly_eval(p, a + k * b)
                total += term if (n - k) % 2 == 0 else -term
            want = p.leading_coefficient * b**n * fact_n
            if total != want:
                return _fail(
                    name, rng_desc, {"n": n, "trial": t, "form": "phoata"},
                    total, want, seed=seed,
                )
            x = Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 9))
            y = _random_fraction(rng)
            m = rng.randint(0, n)
            total = Fraction(0)
            for k in range(n + 1):
                term = row[k] * (x * k + y) ** m
                total += term if k % 2 == 0 else -term
            want = (-1) ** n * x**n * fact_n if m == n else Fraction(0)
            if total != want:
                return _fail(
                    name, rng_desc,
                    {"n": n, "trial": t, "m": m, "form": "katsuura"},
                    total, want, seed=seed,
                )
    return _pass(name, rng_desc, seed=seed)


# ----------------------------------------------------------------------
# Harmonic prefix-sum suites
# ----------------------------------------------------------------------


def verify_harmonic_ladder(
    n_max: int, *, harmonic_table: HarmonicTable | None = None
) -> IdentityReport:
    """The four weighted prefix-sum identities stepping the chain order up:

        sum H_k/k                     = (H^2 + H2)/2
        sum (H_k^2 + H2_k)/k          = (H^3 + 3 H H2 + 2 H3)/3
        sum (H_k^3 + 3 H H2 + 2 H3)/k = (H^4 + 6 H^2 H2 + 8 H H3
                                          + 3 H2^2 + 6 H4)/4
        sum (...)/k                   = the analogous degree-5 form / 5

    (H = H_n, Hr = H_n^(r); all sums run k = 1..n.)  The second line is
    Adamchik's identity.
    """
    _validate_range(n_max)
    name = "harmonic-ladder"
    rng_desc = f"n <= {n_max}, chain orders 2..5"
    if n_max < 1:
        return _pass(name, "empty range")
    harm = harmonic_table or build_harmonic_table(n_max, 5)
    acc = [Fraction(0)] * 4
    for n in range(1, n_max + 1):
        h1 = harm.value(n, 1)
        h2 = harm.value(n, 2)
        h3 = harm.value(n, 3)
        h4 = harm.value(n, 4)
        h5 = harm.value(n, 5)
        deg2 = (h1**2 + h2) / 2
        deg3 = (h1**3 + 3 * h1 * h2 + 2 * h3) / 3
        deg4 = (h1**4 + 6 * h1**2 * h2 + 8 * h1 * h3 + 3 * h2**2 + 6 * h4) / 4
        deg5 = (
            h1**5
            + 10 * h1**3 * h2
            + 20 * h1**2 * h3
            + 15 * h1 * h2**2
            + 30 * h1 * h4
            + 20 * h2 * h3
            + 24 * h5
        ) / 5
        acc[0] += h1 / n
        acc[1] += 2 * deg2 / n
        acc[2] += 3 * deg3 / n
        acc[3] += 4 * deg4 / n
        for rung, (got, want) in enumerate(
            zip(acc, (deg2, deg3, deg4, deg5)), start=2
        ):
            if got != want:
                return _fail(name, rng_desc, {"n": n, "rung": rung}, got, want)
    return _pass(name, rng_desc, note="rung 3 is Adamchik's identity")


def verify_cubic_telescoping(
    n_max: int, *, harmonic_table: HarmonicTable | None = None
) -> IdentityReport:
    """Telescoping of harmonic cubes and its summed consequence:

        H_k^3 - H_{k-1}^3            = 1/k^3 + 3 H_k H_{k-1} / k
        sum_{k=1..n} H_k H_{k-1}/k   = (H_n^3 - H_n^(3)) / 3

    The summed form carries a minus sign on H_n^(3): the plus-sign variant
    fails already at n = 1 (left side 0, right side 2/3), while summing the
    telescoping line forces the minus.  Direct summation at n <= 5 confirms
    it; the suite encodes the confirmed form.
    """
    _validate_range(n_max)
    name = "cubic-telescoping"
    rng_desc = f"n <= {n_max}, telescoping step and summed form"
    note = "summed form uses (H^3 - H3)/3; the +H3 variant fails at n=1"
    if n_max < 1:
        return _pass(name, "empty range", note=note)
    harm = harmonic_table or build_harmonic_table(n_max, 3)
    acc = Fraction(0)
    prev_h = Fraction(0)
    for k in range(1, n_max + 1):
        h = harm.value(k, 1)
        step_lhs = h**3 - prev_h**3
        step_rhs = Fraction(1, k**3) + 3 * h * prev_h / k
        if step_lhs != step_rhs:
            return _fail(
                name, rng_desc, {"k": k, "part": "telescoping"},
                step_lhs, step_rhs, note=note,
            )
        acc += h * prev_h / k
        want = (h**3 - harm.value(k, 3)) / 3
        if acc != want:
            return _fail(
                name, rng_desc, {"n": k, "part": "summed"}, acc, want, note=note
            )
        prev_h = h
    return _pass(name, rng_desc, note=note)


# ----------------------------------------------------------------------
# Aggregate runner
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteConfig:
    """Per-suite ranges; defaults finish in well under a minute."""

    five_way_n_max: int = 60
    five_way_m_max: int = 6
    nested_guard: int = NESTED_GUARD
    dilcher_n_max: int = 25
    dilcher_m_max: int = 5
    inversion_n_max: int = 100
    inversion_m_max: int = 5
    bang_n_max: int = 100
    boole_n_max: int = 20
    boole_trials: int = 200
    ladder_n_max: int = 100
    telescoping_n_max: int = 100
    seed: int = DEFAULT_SEED


def run_all_suites(config: SuiteConfig | None = None) -> list[IdentityReport]:
    """Run every suite in a fixed order; aggregate passes iff all pass."""
    cfg = config or SuiteConfig()
    snm_n = max(cfg.five_way_n_max, cfg.dilcher_n_max, cfg.inversion_n_max)
    snm_m = max(cfg.five_way_m_max, cfg.dilcher_m_max, cfg.inversion_m_max)
    snm_table = build_snm_table(snm_n, snm_m) if snm_n >= 1 else None
    harm_n = max(
        cfg.inversion_n_max, cfg.bang_n_max, cfg.ladder_n_max,
        cfg.telescoping_n_max,
    )
    harm_r = max(cfg.inversion_m_max + 1, 5)
    harm_table = build_harmonic_table(harm_n, harm_r) if harm_n >= 1 else None

    def sub_table(n_max: int) -> SnmTable | None:
        # the shared table is valid for any smaller range
        return snm_table if (snm_table is not None and n_max >= 1) else None

    return [
        verify_five_way(
            cfg.five_way_n_max, cfg.five_way_m_max,
            nested_guard=cfg.nested_guard,
            snm_table=sub_table(cfg.five_way_n_max),
        ),
        verify_dilcher(
            cfg.dilcher_n_max, cfg.dilcher_m_max,
            nested_guard=cfg.nested_guard,
            snm_table=sub_table(cfg.dilcher_n_max),
        ),
        verify_inversion_pair(
            cfg.inversion_n_max, cfg.inversion_m_max,
            snm_table=sub_table(cfg.inversion_n_max),
            harmonic_table=harm_table,
        ),
        verify_bang(cfg.bang_n_max, harmonic_table=harm_table),
        verify_boole_gould(cfg.boole_n_max, cfg.boole_trials, seed=cfg.seed),
        verify_harmonic_ladder(cfg.ladder_n_max, harmonic_table=harm_table),
        verify_cubic_telescoping(
            cfg.telescoping_n_max, harmonic_table=harm_table
        ),
    ]
