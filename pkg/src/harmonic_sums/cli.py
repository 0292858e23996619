"""Command-line interface.

Exit codes: 0 success (all checks pass), 1 identity failure or bound
violation, 2 usage error.  Exact rationals print as ``p/q`` (or ``p`` when
the denominator is 1); approximate values print as fixed-point digits with a
machine-readable ``± bound`` annotation.  Output for a fixed command line is
byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .harmonic import harmonic
from .identities import (
    DEFAULT_SEED,
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
from .powerseries import gf_coefficients, gf_integrated_coefficients
from .snm import (
    build_snm_table,
    snm_bell,
    snm_closed_form,
    snm_direct,
    snm_nested,
    snm_newton,
)
from .zetaseries import (
    alternating_point_check,
    golden_ratio_check,
    negative_order_check,
    zeta_via_sum,
    zeta_via_weighted_sum,
)

_SNM_ALGOS = ("direct", "nested", "table", "bell", "newton", "closed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-sums",
        description=(
            "Exact alternating binomial harmonic sums, identity verification, "
            "and error-bounded zeta series."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("snm", help="print S(n, m) as an exact fraction")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("--algo", choices=_SNM_ALGOS,
                    help="computation route (default: table, or direct for m < 0)")
    sp.add_argument("--format", choices=("text", "json"), default="text")

    hp = sub.add_parser("harmonic", help="print H_n^(r) as an exact fraction")
    hp.add_argument("n", type=int)
    hp.add_argument("r", type=int)
    hp.add_argument("--format", choices=("text", "json"), default="text")

    vp = sub.add_parser("verify", help="run identity suites")
    vp.add_argument(
        "suite",
        choices=("all", "five-way", "dilcher", "inversion", "bang", "boole",
                 "ladder", "cubic"),
    )
    vp.add_argument("--n-max", type=int, help="override the suite's n range")
    vp.add_argument("--m-max", type=int, help="override the suite's m range")
    vp.add_argument("--trials", type=int,
                    help="random polynomials per n (boole suite)")
    vp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    vp.add_argument("--format", choices=("text", "json", "lines"),
                    default="text")

    zp = sub.add_parser("zeta", help="evaluate zeta(m) with a rigorous bound")
    zp.add_argument("m", type=int)
    zp.add_argument("--digits", type=int, default=40)
    zp.add_argument("--route", choices=("sum", "weighted"), default="sum")
    zp.add_argument("--n-terms", type=int,
                    help="fix the series truncation instead of choosing it "
                         "from the tail bound")
    zp.add_argument("--format", choices=("text", "json"), default="text")

    gp = sub.add_parser("gf", help="generating-function coefficients")
    gp.add_argument("m", type=int)
    gp.add_argument("--order", type=int, default=10)
    gp.add_argument("--integrated", action="store_true",
                    help="coefficients of the 1/n-weighted series instead")
    gp.add_argument("--format", choices=("text", "json", "csv"),
                    default="text")

    cp = sub.add_parser("check", help="numeric series checks")
    cp.add_argument("kind", choices=("alternating", "golden", "negative-order"))
    cp.add_argument("--m", type=int, default=1)
    cp.add_argument("--terms", type=int, default=10000,
                    help="partial-sum length (alternating)")
    cp.add_argument("--accel", type=int, default=3,
                    help="pairwise-averaging passes (alternating)")
    cp.add_argument("--digits", type=int, default=25)
    cp.add_argument("--x", default="1/4",
                    help="rational argument p/q (negative-order)")
    cp.add_argument("--tol", default="1e-4",
                    help="absolute tolerance (alternating)")
    cp.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _emit(args: argparse.Namespace, text_lines: list[str],
          payload: dict[str, object]) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _cmd_snm(args: argparse.Namespace) -> int:
    n, m = args.n, args.m
    if n < 1:
        raise ValueError("n must be at least 1")
    algo = args.algo or ("table" if m >= 0 else "direct")
    if algo == "direct":
        value = snm_direct(n, m)
    elif algo == "nested":
        value = snm_nested(n, m)
    elif algo == "table":
        if m < 0:
            raise ValueError("the table route needs m >= 0 (use --algo direct)")
        value = build_snm_table(n, m).value(n, m)
    elif algo == "bell":
        value = snm_bell(n, m)
    elif algo == "newton":
        value = snm_newton(n, m)
    else:
        value = snm_closed_form(n, m)
    _emit(args, [str(value)],
          {"command": "snm", "n": n, "m": m, "algo": algo, "value": str(value)})
    return 0


def _cmd_harmonic(args: argparse.Namespace) -> int:
    value = harmonic(args.n, args.r)
    _emit(args, [str(value)],
          {"command": "harmonic", "n": args.n, "r": args.r,
           "value": str(value)})
    return 0


def _run_verify(args: argparse.Namespace):
    n, m = args.n_max, args.m_max
    if args.suite == "all":
        kw: dict[str, int] = {"seed": args.seed}
        if n is not None:
            for key in ("five_way_n_max", "dilcher_n_max", "inversion_n_max",
                        "bang_n_max", "boole_n_max", "ladder_n_max",
                        "telescoping_n_max"):
                kw[key] = n
        if m is not None:
            for key in ("five_way_m_max", "dilcher_m_max", "inversion_m_max"):
                kw[key] = m
        if args.trials is not None:
            kw["boole_trials"] = args.trials
        return run_all_suites(SuiteConfig(**kw))
    if args.suite == "five-way":
        return [verify_five_way(n if n is not None else 60,
                                m if m is not None else 6)]
    if args.suite == "dilcher":
        return [verify_dilcher(n if n is not None else 25,
                               m if m is not None else 5)]
    if args.suite == "inversion":
        return [verify_inversion_pair(n if n is not None else 100,
                                      m if m is not None else 5)]
    if args.suite == "bang":
        return [verify_bang(n if n is not None else 100)]
    if args.suite == "boole":
        return [verify_boole_gould(
            n if n is not None else 20,
            args.trials if args.trials is not None else 200,
            seed=args.seed,
        )]
    if args.suite == "ladder":
        return [verify_harmonic_ladder(n if n is not None else 100)]
    return [verify_cubic_telescoping(n if n is not None else 100)]


def _cmd_verify(args: argparse.Namespace) -> int:
    reports = _run_verify(args)
    if args.format == "json":
        print(json.dumps([report_json_dict(r) for r in reports]))
    elif args.format == "lines":
        for r in reports:
            print(report_line(r))
    else:
        for r in reports:
            print(report_text(r))
        ok = all_pass(reports)
        print("all suites passed" if ok else "SUITE FAILURES PRESENT")
    return 0 if all_pass(reports) else 1


def _cmd_zeta(args: argparse.Namespace) -> int:
    if args.digits < 1:
        raise ValueError("digits must be at least 1")
    if args.route == "sum":
        value = zeta_via_sum(args.m, args.digits, n_terms=args.n_terms)
    else:
        if args.m < 2:
            raise ValueError("the weighted route needs m >= 2")
        value = zeta_via_weighted_sum(args.m - 1, args.digits,
                                      n_terms=args.n_terms)
    _emit(
        args,
        [value.to_decimal_string(args.digits)],
        {"command": "zeta", "m": args.m, "route": args.route,
         "digits": args.digits, "value": value.decimal_digits(args.digits),
         "error_bound": value.bound_scientific(args.digits)},
    )
    return 0


def _cmd_gf(args: argparse.Namespace) -> int:
    if args.integrated:
        coeffs = gf_integrated_coefficients(args.m, args.order)
    else:
        coeffs = gf_coefficients(args.m, args.order)
    if args.format == "csv":
        print("n,value_num,value_den")
        for n, c in enumerate(coeffs):
            print(f"{n},{c.numerator},{c.denominator}")
    else:
        _emit(
            args,
            [f"{n} {c}" for n, c in enumerate(coeffs)],
            {"command": "gf", "m": args.m, "order": args.order,
             "integrated": args.integrated,
             "coefficients": [str(c) for c in coeffs]},
        )
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    if args.kind == "alternating":
        value, reference = alternating_point_check(args.m, args.terms,
                                                   args.accel)
        tol = Fraction(args.tol)
        diff = abs(value.value_fraction - reference.value_fraction)
        ok = diff <= tol
        _emit(
            args,
            [
                f"accelerated partial sum: {value.to_decimal_string(20)}",
                f"reference -Li_{args.m + 1}(1/2): "
                f"{reference.to_decimal_string(20)}",
                f"abs difference: {float(diff):.3e}  tolerance: {float(tol):.3e}",
                "PASS" if ok else "FAIL",
            ],
            {"command": "check", "kind": "alternating", "m": args.m,
             "terms": args.terms, "accel": args.accel,
             "value": value.decimal_digits(20),
             "reference": reference.decimal_digits(20),
             "abs_difference": f"{float(diff):.3e}",
             "tolerance": f"{float(tol):.3e}",
             "status": "pass" if ok else "fail"},
        )
        return 0 if ok else 1

    if args.kind == "golden":
        lhs, rhs = golden_ratio_check(args.m, args.digits)
    else:
        x = Fraction(args.x)
        lhs, rhs = negative_order_check(args.m, x, args.digits)
    diff = abs(lhs.value_fraction - rhs.value_fraction)
    bound = lhs.error_fraction + rhs.error_fraction
    ok = diff <= bound
    _emit(
        args,
        [
            f"series value:   {lhs.to_decimal_string(args.digits)}",
            f"closed form:    {rhs.to_decimal_string(args.digits)}",
            f"abs difference: {float(diff):.3e}  combined bound: "
            f"{float(bound):.3e}",
            "PASS" if ok else "FAIL",
        ],
        {"command": "check", "kind": args.kind, "m": args.m,
         "digits": args.digits,
         "lhs": lhs.decimal_digits(args.digits),
         "rhs": rhs.decimal_digits(args.digits),
         "abs_difference": f"{float(diff):.3e}",
         "combined_bound": f"{float(bound):.3e}",
         "status": "pass" if ok else "fail"},
    )
    return 0 if ok else 1


_DISPATCH = {
    "snm": _cmd_snm,
    "harmonic": _cmd_harmonic,
    "verify": _cmd_verify,
    "zeta": _cmd_zeta,
    "gf": _cmd_gf,
    "check": _cmd_check,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
