import json
from fractions import Fraction

import pytest

from harmonic_sums.exact import binomial_row
from harmonic_sums.harmonic import harmonic
from harmonic_sums.identities import (
    DEFAULT_SEED,
    Counterexample,
    IdentityReport,
    SuiteConfig,
    all_pass,
    report_json_dict,
    report_line,
    report_text,
    run_all_suites,
    verify_bang,
    verify_boole_gould,
    verify_cubic_telescoping,
    verify_dilcher,
    verify_five_way,
    verify_harmonic_ladder,
    verify_inversion_pair,
)
from harmonic_sums.snm import SnmTable, build_snm_table


def test_dilcher_ranges_pass():
    assert verify_dilcher(10, 4).status == "pass"
    assert verify_dilcher(1, 1).status == "pass"
    # nested path silently skipped beyond the guard, rest still compared
    report = verify_dilcher(25, 5)
    assert report.status == "pass"
    assert report.counterexample is None


def test_five_way_small_pass():
    report = verify_five_way(15, 5)
    assert report.status == "pass"


def test_inversion_pair_pass_and_hand_case():
    assert verify_inversion_pair(50, 4).status == "pass"
    # n = m = 1 pins the sign: C(1,1) S(1,1)/1 = 1 = H_1^(2)
    assert Fraction(1) == harmonic(1, 2)
    report = verify_inversion_pair(12, 1)
    assert report.status == "pass"
    assert "Sun and Zhao" in (report.note or "")


def test_bang_hand_values_and_range():
    # n = 2: lhs = 2*1 - (1/2)(1 + 3/4) = 9/8 = H_2^(3)
    lhs = 2 * Fraction(1) - Fraction(1, 2) * (Fraction(1) + Fraction(3, 4))
    assert lhs == Fraction(9, 8) == harmonic(2, 3)
    assert verify_bang(1).status == "pass"
    assert verify_bang(40).status == "pass"


def test_boole_gould_pass_and_katsuura_value():
    report = verify_boole_gould(8, 40, seed=3)
    assert report.status == "pass"
    assert report.seed == 3
    # Katsuura at n = m = 2, f = (3t+1)^2: 1 - 2*16 + 49 = 18 = (-1)^2 3^2 2!
    row = binomial_row(2)
    total = sum(
        (-1) ** k * row[k] * (3 * Fraction(k) + 1) ** 2 for k in range(3)
    )
    assert total == 18


def test_harmonic_ladder_pass_and_third_value():
    # n = 3 first rung: 1 + 3/4 + 11/18 = 85/36 = (H_3^2 + H_3^(2))/2
    acc = Fraction(1) + Fraction(3, 4) + Fraction(11, 18)
    assert acc == Fraction(85, 36)
    assert acc == (harmonic(3, 1) ** 2 + harmonic(3, 2)) / 2
    assert verify_harmonic_ladder(1).status == "pass"
    report = verify_harmonic_ladder(100)
    assert report.status == "pass"
    assert "Adamchik" in (report.note or "")


def test_telescoping_hand_step():
    # k = 2: H_2^3 - H_1^3 = 19/8 = 1/8 + 3 (3/2)(1)/2
    assert Fraction(27, 8) - 1 == Fraction(19, 8)
    assert Fraction(1, 8) + 3 * Fraction(3, 2) * Fraction(1) / 2 == Fraction(19, 8)
    assert verify_cubic_telescoping(50).status == "pass"


def test_summed_cubic_sign_resolved_by_direct_summation():
    # direct summation at n <= 5 decides the sign of the H^(3) term:
    # the minus form holds everywhere, the plus form fails already at n = 1
    acc = Fraction(0)
    for n in range(1, 6):
        acc += harmonic(n, 1) * harmonic(n - 1, 1) / n
        minus_form = (harmonic(n, 1) ** 3 - harmonic(n, 3)) / 3
        plus_form = (harmonic(n, 1) ** 3 + harmonic(n, 3)) / 3
        assert acc == minus_form
        if n == 1:
            assert acc != plus_form
    report = verify_cubic_telescoping(5)
    assert report.status == "pass"
    assert "fails at n=1" in (report.note or "")


def test_fault_injection_produces_counterexample():
    table = build_snm_table(12, 3)
    columns = [list(col) for col in table.columns]
    columns[2][7] += Fraction(1, 99)  # corrupt S(7, 2)
    corrupted = SnmTable(12, 3, tuple(tuple(col) for col in columns))
    report = verify_dilcher(12, 3, snm_table=corrupted)
    assert report.status == "fail"
    ce = report.counterexample
    assert ce is not None
    assert ce.inputs == {"n": 7, "m": 2, "path": "table"}
    assert ce.lhs != ce.rhs
    assert ce.rhs - ce.lhs == Fraction(1, 99)
    report5 = verify_five_way(12, 3, snm_table=corrupted)
    assert report5.status == "fail"


def test_empty_ranges_pass():
    assert verify_dilcher(0, 4).status == "pass"
    assert verify_inversion_pair(0, 2).status == "pass"
    assert verify_bang(0).status == "pass"
    assert verify_boole_gould(0, 10).status == "pass"
    assert verify_harmonic_ladder(0).status == "pass"
    assert verify_cubic_telescoping(0).status == "pass"
    with pytest.raises(ValueError):
        verify_dilcher(-1, 2)
    with pytest.raises(ValueError):
        verify_boole_gould(5, -1)


def test_run_all_suites_small_config():
    cfg = SuiteConfig(
        five_way_n_max=12, five_way_m_max=4,
        dilcher_n_max=10, dilcher_m_max=3,
        inversion_n_max=20, inversion_m_max=3,
        bang_n_max=20, boole_n_max=6, boole_trials=25,
        ladder_n_max=20, telescoping_n_max=20,
    )
    reports = run_all_suites(cfg)
    assert [r.identity_name for r in reports] == [
        "five-way", "dilcher", "inversion-pair", "bang", "boole-gould",
        "harmonic-ladder", "cubic-telescoping",
    ]
    assert all_pass(reports)


def test_run_all_suites_zero_ranges():
    cfg = SuiteConfig(
        five_way_n_max=0, five_way_m_max=0,
        dilcher_n_max=0, dilcher_m_max=0,
        inversion_n_max=0, inversion_m_max=0,
        bang_n_max=0, boole_n_max=0, boole_trials=0,
        ladder_n_max=0, telescoping_n_max=0,
    )
    reports = run_all_suites(cfg)
    assert all_pass(reports)
    assert all(r.range_tested == "empty range" for r in reports)


def test_suites_deterministic_given_seed():
    a = verify_boole_gould(6, 20, seed=DEFAULT_SEED)
    b = verify_boole_gould(6, 20, seed=DEFAULT_SEED)
    assert a == b


def test_report_serialization():
    ce = Counterexample({"n": 3, "m": 2}, Fraction(7, 4), Fraction(3, 2))
    report = IdentityReport("demo", "n <= 3", "fail", ce, seed=5)
    line = report_line(report)
    fields = line.split("\t")
    assert fields[0] == "demo"
    assert fields[2] == "fail"
    assert fields[3] == "5"
    assert "lhs=7/4" in fields[4] and "rhs=3/2" in fields[4]
    text = report_text(report)
    assert "demo: FAIL" in text and "counterexample" in text
    payload = report_json_dict(report)
    parsed = json.loads(json.dumps(payload))
    assert parsed["counterexample"]["lhs"] == "7/4"
    assert Fraction(parsed["counterexample"]["lhs"]) == Fraction(7, 4)


def test_report_validation():
    with pytest.raises(ValueError):
        IdentityReport("bad", "r", "fail", None)
    with pytest.raises(ValueError):
        IdentityReport("bad", "r", "maybe", None)
    ok = IdentityReport("ok", "r", "pass")
    assert report_line(ok).split("\t")[4] == "-"
