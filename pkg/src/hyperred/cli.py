"""Command line entry point.

Exit codes: 0 success (all checks pass), 1 some congruence failed,
2 certificate failed, 3 hypothesis violated, 4 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import congruence, diffspace, hyperseries, symred
from .polycore import Poly, format_rat, parse_rat

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CERT_FAILED = 2
EXIT_HYPOTHESIS = 3
EXIT_PARSE = 4


class InputError(ValueError):
    pass


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _read_poly(path: str) -> Poly:
    data = _read_json(path)
    if not isinstance(data, list):
        raise InputError(f"{path}: expected a JSON array of coefficient strings")
    return Poly.from_json(data)


def _sign(text: str) -> int:
    table = {"alt": -1, "-1": -1, "same": 1, "+1": 1, "1": 1}
    if text not in table:
        raise InputError(f"bad sign {text!r}; use alt or same")
    return table[text]


def _spec(args) -> symred.TermSpec:
    if args.r is None or args.alpha is None:
        raise InputError("--alpha and --r are required")
    return symred.TermSpec(_sign(args.sign), parse_rat(args.alpha), int(args.r))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_analyze(args) -> int:
    info = diffspace.analyze(_read_poly(args.a), _read_poly(args.b))
    _emit(info.to_json())
    return EXIT_OK


def cmd_reduce(args) -> int:
    info = diffspace.analyze(_read_poly(args.a), _read_poly(args.b))
    f = _read_poly(args.f)
    if args.oracle:
        cert = diffspace.oracle_reduce(info, f, diffspace.spanning_support(info))
    else:
        cert = diffspace.reduce(info, f)
    _emit(cert.to_json())
    return EXIT_OK


def cmd_certify(args) -> int:
    info = diffspace.analyze(_read_poly(args.a), _read_poly(args.b))
    f = _read_poly(args.f)
    cert = diffspace.ReductionCertificate.from_json(_read_json(args.cert))
    report = diffspace.verify_certificate(info, f, cert)
    if report.passed:
        print("certificate OK")
        return EXIT_OK
    print("certificate FAILED; residual:", json.dumps(report.residual.to_json()))
    return EXIT_CERT_FAILED


def cmd_reduce_symmetric(args) -> int:
    if args.special == "half4":
        if args.alpha is not None and parse_rat(args.alpha) != Fraction(1, 2):
            raise InputError("--special half4 fixes alpha = 1/2")
        if args.r is not None and int(args.r) != 4:
            raise InputError("--special half4 fixes r = 4")
        if args.sign is not None and _sign(args.sign) != 1:
            raise InputError("--special half4 fixes sign = same")
        red = symred.half4_reduce(args.m)
    else:
        if args.sign is None:
            raise InputError("--sign is required")
        spec = _spec(args)
        if spec.sign == -1:
            red = symred.integral_reduce_alt(spec, args.m)
        else:
            red = symred.integral_reduce_same(spec, args.m)
    out = red.to_json()
    out["verified"] = red.verify()
    _emit(out)
    return EXIT_OK if out["verified"] else EXIT_CERT_FAILED


def cmd_eval(args) -> int:
    print(format_rat(hyperseries.term_eval(_spec(args), args.k)))
    return EXIT_OK


def cmd_sum(args) -> int:
    print(format_rat(hyperseries.partial_sum(_spec(args), _read_poly(args.f), args.K)))
    return EXIT_OK


def cmd_congruence(args) -> int:
    reports = congruence.sweep(args.case, args.m_max, args.p_max, p_min=args.p_min)
    if args.json:
        _emit([r.to_json() for r in reports])
    else:
        print(f"{'m':>3} {'p':>4} {'lhs':>10} {'rhs':>10}  result")
        for r in reports:
            print(f"{r.m:>3} {r.p:>4} {r.lhs_residue:>10} {r.rhs_residue:>10}  {'pass' if r.passed else 'FAIL'}")
    failed = [r for r in reports if not r.passed]
    if failed:
        pairs = ", ".join(f"(m={r.m}, p={r.p})" for r in failed)
        print(f"{len(failed)} of {len(reports)} checks failed: {pairs}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_scan_integrality(args) -> int:
    rows = congruence.scan_integrality(args.m_max)
    if args.json:
        _emit([{**r, "a_m_over_factorial": format_rat(r["a_m_over_factorial"])} for r in rows])
    else:
        for r in rows:
            print(f"{r['m']:>3}  {r['a_m_over_factorial']}  {'integer' if r['is_integer'] else 'NOT INTEGER'}")
    for r in rows:
        if not r["is_integer"]:
            print(f"FINDING: a_m/mu! is not an integer for m = {r['m']}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperred", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="u, d, m0 and degeneracy of a pair (a, b)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("reduce", help="reduce f modulo S_{a,b}")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--oracle", action="store_true", help="use the linear-algebra oracle")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("certify", help="check a reduction certificate")
    for name in ("--a", "--b", "--f", "--cert"):
        p.add_argument(name, required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser(
        "reduce-symmetric",
        help="integral reduction of (2Dk+D*alpha)^m; x is applied as x(2Dk)",
    )
    p.add_argument("--sign", choices=["alt", "same"])
    p.add_argument("--alpha")
    p.add_argument("--r")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--special", choices=["half4"])
    p.set_defaults(func=cmd_reduce_symmetric)

    for name, func, help_ in (("eval", cmd_eval, "exact t_k"), ("sum", cmd_sum, "exact sum_{k<=K} f(k) t_k")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--sign", required=True)
        p.add_argument("--alpha", required=True)
        p.add_argument("--r", required=True)
        if name == "eval":
            p.add_argument("--k", type=int, required=True)
        else:
            p.add_argument("--f", required=True)
            p.add_argument("--K", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("congruence", help="sweep the mod p^4 congruences")
    p.add_argument("--case", type=int, choices=[3, 4], required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--p-min", type=int, default=None, help="smallest prime to test")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("scan-integrality", help="is a_m/mu! an integer for odd m <= M?")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan_integrality)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (symred.HypothesisViolation, symred.SymmetryViolation, symred.ShiftViolation) as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (InputError, ValueError, KeyError, TypeError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_PARSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
