"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
are produced (pytest otherwise shows them only for failing tests).
"""

import random
import time
from fractions import Fraction

from harmonic_sums.approx import ApproxReal
from harmonic_sums.exact import binomial_row
from harmonic_sums.harmonic import build_harmonic_table, harmonic
from harmonic_sums.identities import (
    verify_bang,
    verify_boole_gould,
    verify_cubic_telescoping,
    verify_five_way,
    verify_harmonic_ladder,
    verify_inversion_pair,
)
from harmonic_sums.powerseries import gf_coefficients, gf_integrated_coefficients
from harmonic_sums.refvalues import log2_reference, zeta_reference
from harmonic_sums.snm import build_snm_table, snm_direct, stirling2
from harmonic_sums.zetaseries import (
    alternating_point_check,
    golden_ratio_check,
    li_value,
    negative_order_check,
    snm_series_sum,
    zeta_via_sum,
    zeta_via_weighted_sum,
)


def _report(ok: bool, label: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'}: {label}")
    assert ok, label


def _within_digits(a: ApproxReal, b: ApproxReal, digits: int) -> bool:
    diff = abs(a.value_fraction - b.value_fraction)
    combined = a.error_fraction + b.error_fraction
    return diff <= Fraction(1, 10**digits) and diff <= combined


def test_criterion_01_five_way_agreement():
    start = time.perf_counter()
    report = verify_five_way(60, 6, nested_guard=30)
    elapsed = time.perf_counter() - start
    ok = report.status == "pass" and elapsed < 30.0
    _report(ok, f"criterion 1: five-way agreement n<=60 m<=6 "
                f"({elapsed:.1f}s < 30s)")


def test_criterion_02_generating_functions_order_40():
    start = time.perf_counter()
    order = 40
    table = build_snm_table(order, 5)
    ok = True
    for m in range(1, 6):
        plain = gf_coefficients(m, order)
        weighted = gf_integrated_coefficients(m, order)
        for n in range(1, order + 1):
            ok = ok and plain[n] == table.value(n, m)
            ok = ok and weighted[n] == table.value(n, m) / n
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10.0
    _report(ok, f"criterion 2: generating-function coefficients to order 40 "
                f"({elapsed:.1f}s < 10s)")


def test_criterion_03_boole_gould_dichotomy():
    report = verify_boole_gould(20, 200)
    _report(report.status == "pass",
            "criterion 3: finite-difference dichotomy, n<=20, 200 trials/n")


def test_criterion_04_finite_identity_suites():
    harm = build_harmonic_table(100, 6)
    snm = build_snm_table(100, 5)
    parts = {
        "inversion": verify_inversion_pair(
            100, 5, snm_table=snm, harmonic_table=harm
        ).status == "pass",
        "bang": verify_bang(100, harmonic_table=harm).status == "pass",
        "ladder": verify_harmonic_ladder(
            100, harmonic_table=harm
        ).status == "pass",
        "telescoping": verify_cubic_telescoping(
            100, harmonic_table=harm
        ).status == "pass",
    }
    # the weighted single-harmonic identity, spelled out on its own
    sun_zhao = True
    for n in range(1, 101):
        row = binomial_row(n)
        total = Fraction(0)
        for k in range(1, n + 1):
            sgn = 1 if k % 2 == 1 else -1
            total += sgn * Fraction(row[k], k) * harm.value(k, 1)
        sun_zhao = sun_zhao and total == harm.value(n, 2)
    parts["sun-zhao"] = sun_zhao
    # the summed-cubes identity in the form the n<=5 oracle validates
    oracle_ok = True
    acc = Fraction(0)
    for n in range(1, 6):
        acc += harmonic(n, 1) * harmonic(n - 1, 1) / n
        oracle_ok = oracle_ok and acc == (harmonic(n, 1) ** 3 - harmonic(n, 3)) / 3
    plus_fails = (
        harmonic(1, 1) * harmonic(0, 1) / 1
        != (harmonic(1, 1) ** 3 + harmonic(1, 3)) / 3
    )
    parts["cubic-resolution"] = oracle_ok and plus_fails
    ok = all(parts.values())
    detail = ", ".join(k for k, v in parts.items() if not v) or "all parts"
    _report(ok, f"criterion 4: exact identity suites n<=100 m<=5 ({detail})")


def test_criterion_05_zeta3_at_n250():
    start = time.perf_counter()
    n_terms = 250
    harm = build_harmonic_table(n_terms, 3)
    literal = Fraction(0)
    for n in range(1, n_terms + 1):
        h1, h2, h3 = harm.value(n, 1), harm.value(n, 2), harm.value(n, 3)
        literal += (h1**3 + 3 * h1 * h2 + 2 * h3) / Fraction(2**n)
    literal /= 9
    table = build_snm_table(n_terms, 3)
    via_s = sum(
        (table.value(n, 3) / Fraction(2**n) for n in range(1, n_terms + 1)),
        Fraction(0),
    ) * Fraction(2, 3)
    same_partial = literal == via_s
    z3 = zeta_via_sum(3, 40, n_terms=n_terms)
    oracle = zeta_reference(3, 46)
    agree = _within_digits(z3, oracle, 40)
    covers_literal = abs(literal - z3.value_fraction) <= z3.error_fraction
    elapsed = time.perf_counter() - start
    ok = same_partial and agree and covers_literal and elapsed < 10.0
    _report(ok, f"criterion 5: zeta(3) harmonic-cube series at N=250, "
                f">=40 digits ({elapsed:.1f}s < 10s)")


def test_criterion_06_zeta5_zeta2_zeta4():
    z5 = zeta_via_weighted_sum(4, 42)
    ok5 = _within_digits(z5, zeta_reference(5, 48), 40)
    z2 = zeta_via_weighted_sum(1, 32)
    ok2 = _within_digits(z2, zeta_reference(2, 38), 30)
    z4 = zeta_via_weighted_sum(3, 32)
    ok4 = _within_digits(z4, zeta_reference(4, 38), 30)
    _report(ok5 and ok2 and ok4,
            "criterion 6: zeta(5) to >=40 digits, zeta(2)/zeta(4) to >=30")


def test_criterion_07_geometric_harmonic_sums():
    plain = snm_series_sum(1, Fraction(1, 2), 30)
    two_log2 = log2_reference(34).mul_rational(2)
    ok_a = _within_digits(plain, two_log2, 25)
    weighted = snm_series_sum(1, Fraction(1, 2), 30, weighted=True)
    half_zeta2 = zeta_reference(2, 34).mul_rational(Fraction(1, 2))
    ok_b = _within_digits(weighted, half_zeta2, 25)
    _report(ok_a and ok_b,
            "criterion 7: sum H_n/2^n = 2 log 2 and sum H_n/(n 2^n) = "
            "zeta(2)/2 to >=25 digits")


def test_criterion_08_golden_ratio_closed_forms():
    ok = True
    for m in (2, 3):
        lhs, rhs = golden_ratio_check(m, 25)
        ok = ok and _within_digits(lhs, rhs, 20)
    _report(ok, "criterion 8: golden-ratio series vs closed forms, >=20 digits")


def test_criterion_09_alternating_boundary():
    ok = True
    for m in (1, 2):
        value, reference = alternating_point_check(m, 10**4, 3)
        diff = abs(value.value_fraction - reference.value_fraction)
        ok = ok and diff <= Fraction(1, 10**4)
    _report(ok, "criterion 9: alternating boundary sums within 1e-4 at 1e4 "
                "terms, 3 averaging passes")


def _random_expression(rng: random.Random, scale: int, depth: int):
    if depth == 0 or rng.random() < 0.3:
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        return ApproxReal.from_fraction(x, scale)
    op = rng.choice(("add", "sub", "mul", "scale", "pow"))
    a = _random_expression(rng, scale, depth - 1)
    if op == "add":
        return a + _random_expression(rng, scale, depth - 1)
    if op == "sub":
        return a - _random_expression(rng, scale, depth - 1)
    if op == "mul":
        return a * _random_expression(rng, scale, depth - 1)
    if op == "scale":
        return a.mul_rational(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    return a.pow_int(rng.randint(0, 3))


def test_criterion_10_enclosure_soundness():
    rng = random.Random(1729)
    ok = True
    for _ in range(100):
        state = rng.getstate()
        low = _random_expression(rng, 25, 4)
        rng.setstate(state)
        high = _random_expression(rng, 35, 4)
        ok = ok and low.lower <= high.value_fraction <= low.upper
    # the same property on the library's own series values
    for lo, hi in (
        (zeta_via_sum(3, 25), zeta_via_sum(3, 35)),
        (zeta_via_weighted_sum(2, 25), zeta_via_weighted_sum(2, 35)),
        (li_value(2, Fraction(1, 2), 25), li_value(2, Fraction(1, 2), 35)),
        (log2_reference(25), log2_reference(35)),
        (zeta_reference(4, 25), zeta_reference(4, 35)),
        (snm_series_sum(1, Fraction(1, 2), 25),
         snm_series_sum(1, Fraction(1, 2), 35)),
    ):
        ok = ok and lo.lower <= hi.value_fraction <= lo.upper
    _report(ok, "criterion 10: 100 randomized enclosures re-run at +10 digits "
                "land inside")


def test_criterion_11_stirling_bridge_and_negative_order():
    from math import factorial

    bridge_ok = True
    for n in range(1, 13):
        for m in range(1, n + 1):
            got = (-1) ** (m - 1) * snm_direct(m, -n) / factorial(m)
            bridge_ok = bridge_ok and got == stirling2(n, m)
    neg_ok = True
    for m in (1, 2, 3):
        for x in (Fraction(1, 4), Fraction(-1, 2)):
            lhs, rhs = negative_order_check(m, x, 20)
            neg_ok = neg_ok and _within_digits(lhs, rhs, 20)
    _report(bridge_ok and neg_ok,
            "criterion 11: Stirling bridge (m<=n<=12) and negative-order "
            "checks to 20 digits")
