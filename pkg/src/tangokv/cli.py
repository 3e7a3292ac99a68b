"""Command-line front end: ``tangokv tango | construct | verify``.

Exit codes: 0 pass, 1 usage or parse error, 2 bounds not exact under
--require-exact, 3 precondition violation, 4 a check or suite failed.
"""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from .curves import make_curve
from .errors import ParamViolation, PreconditionViolation, SmoothnessFailure
from .pathology import construct_3_1, preset_dagger
from .reports import RunReport, SpecParseError, load_spec
from .suites import SUITES, run_suite
from .tango import DEFAULT_BUDGET, tango_search

EXIT_OK, EXIT_USAGE, EXIT_NOT_EXACT, EXIT_PRECONDITION, EXIT_CHECK_FAILED = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        num, _, den = text.partition("/")
        return Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected numerator/denominator, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="tangokv", description="Tango invariants and certified Kawamata-Viehweg failures.")
    ap.add_argument("--seed", type=int, default=0, help="seed recorded in the report (default 0)")
    ap.add_argument("--output", "-o", help="also write the JSON report to this file")
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--output", "-o", default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("tango", parents=[common], help="certified interval for n(C)")
    t.add_argument("spec", help="curve spec file")
    t.add_argument("--budget", type=int, help=f"candidate budget (default {DEFAULT_BUDGET})")
    t.add_argument("--require-exact", action="store_true", help="exit 2 unless n_lower == n_upper")

    c = sub.add_parser("construct", parents=[common], help="certificate for a vanishing failure on a Tango curve")
    c.add_argument("spec", help="curve spec file")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--c", type=_fraction, help="boundary coefficient as n/d")
    g.add_argument("--preset", choices=["dagger"], help="use the preset coefficient for p")
    c.add_argument("--budget", type=int)

    v = sub.add_parser("verify", parents=[common], help="run an acceptance suite")
    v.add_argument("--suite", required=True, choices=SUITES)
    return ap


def _curve_from_spec(path: str):
    spec = load_spec(path)
    return spec, make_curve(spec.family, spec.p, spec.params())


def _run(args) -> RunReport:
    if args.command == "verify":
        res = run_suite(args.suite)
        return RunReport("verify", {"suite": args.suite}, res, args.seed,
                         "pass" if res["passed"] else "fail", EXIT_OK if res["passed"] else EXIT_CHECK_FAILED)

    spec, curve = _curve_from_spec(args.spec)
    budget = args.budget or spec.budget or DEFAULT_BUDGET
    inputs = {"spec": spec.to_json(), "budget": budget}
    if args.command == "tango":
        rep = tango_search(curve, budget)
        inputs["require_exact"] = args.require_exact
        code = EXIT_NOT_EXACT if args.require_exact and not rep.exact else EXIT_OK
        return RunReport("tango", inputs, {"tango": rep.to_json()}, args.seed,
                         "pass" if code == EXIT_OK else "not-exact", code)

    c = preset_dagger(curve.p)[0] if args.preset else args.c
    inputs["c"] = str(c)
    inputs["preset"] = args.preset
    rep = tango_search(curve, budget)
    cert = construct_3_1(rep, c, curve)
    return RunReport("construct", inputs, {"tango": rep.to_json(), "certificate": cert.to_json()}, args.seed,
                     "pass" if cert.valid else "fail", EXIT_OK if cert.valid else EXIT_CHECK_FAILED)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        report = _run(args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParamViolation, SmoothnessFailure, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionViolation as exc:
        print(f"precondition violated ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    report.timing = {"elapsed_seconds": round(time.perf_counter() - t0, 3)}
    text = report.dumps()
    print(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return report.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
