"""Command-line front end.

    zeta-recur even      --n 10 --digits 10            exact table of zeta(2n)
    zeta-recur bernoulli --n 12                        Bernoulli numbers
    zeta-recur verify <identity> --s 3 --tol 1e-9      one identity check
    zeta-recur contour   --s 2 --radius 30             rectangle side integrals

Defaults: --tol 1e-9, --radius 30, --format plain.  Exit codes: 0 success,
1 verification failure, 2 usage error.  ZETA_RECUR_EVAL_BUDGET overrides
the quadrature evaluation budget for the whole invocation.

Output is deterministic: identical argv yields byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import identities, quadrature
from .exact import bernoulli, render_decimal, zeta_even_euler, zeta_even_recursive

IDENTITIES = ("eq2", "eq5", "eq7", "closure", "eq9", "s2", "log2", "eq10", "odd")

MAX_N = 1000
MAX_DIGITS = 1000
MAX_BERNOULLI = 2000


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (float, complex)):
        return repr(x)
    return str(x)


def _jsonable(x):
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    return x


def _emit_table(header: list[str], rows: list[list], fmt: str, command: str) -> None:
    if fmt == "json":
        doc = {"command": command,
               "rows": [dict(zip(header, (_jsonable(v) for v in row))) for row in rows]}
        print(json.dumps(doc, sort_keys=True))
    elif fmt == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(_fmt(v) for v in row))
    else:
        cells = [header] + [[_fmt(v) for v in row] for row in rows]
        widths = [max(len(line[i]) for line in cells) for i in range(len(header))]
        for line in cells:
            print("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())


def _emit_record(fields: list[tuple[str, object]], fmt: str, command: str) -> None:
    if fmt == "json":
        doc = {"command": command}
        doc.update({k: _jsonable(v) for k, v in fields})
        print(json.dumps(doc, sort_keys=True))
    elif fmt == "csv":
        print(",".join(k for k, _ in fields))
        print(",".join(_fmt(v) for _, v in fields))
    else:
        width = max(len(k) for k, _ in fields)
        for k, v in fields:
            print(f"{k.ljust(width)}  {_fmt(v)}".rstrip())


def cmd_zeta_even(n_max: int, digits: int, fmt: str, jobs: int) -> int:
    def row(n: int):
        recursive = zeta_even_recursive(n)
        euler = zeta_even_euler(n)
        equal = recursive.coeff == euler.coeff
        return [n, str(recursive.coeff), equal, render_decimal(recursive, digits)]

    ns = range(1, n_max + 1)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(row, ns))
    else:
        rows = [row(n) for n in ns]
    _emit_table(["n", "coeff", "equal", "zeta"], rows, fmt, "even")
    return 0 if all(r[2] for r in rows) else 1


def cmd_bernoulli(m_max: int, fmt: str) -> int:
    rows = [[m, str(bernoulli(m))] for m in range(m_max + 1)]
    _emit_table(["m", "B_m"], rows, fmt, "bernoulli")
    return 0


def _report_fields(report: identities.IdentityReport) -> list[tuple[str, object]]:
    return [
        ("identity", report.identity_id.value),
        ("s", report.s),
        ("lhs", report.lhs),
        ("rhs", report.rhs),
        ("residual", report.residual),
        ("tolerance", report.tolerance),
        ("passed", report.passed),
        ("note", report.note),
    ]


def _contour_fields(report: identities.ContourReport, tol: float) -> list[tuple[str, object]]:
    names = ("bottom", "right", "top", "left")
    fields: list[tuple[str, object]] = [("s", report.s), ("radius", report.R)]
    fields += list(zip(names, report.side_values))
    fields += [
        ("closure", report.closure),
        ("closure_magnitude", abs(report.closure)),
        ("right_side_magnitude", report.right_side_magnitude),
        ("error_estimate", report.error_estimate),
        ("evaluations", report.evaluations),
        ("converged", report.converged),
        ("tolerance", tol),
        ("passed", report.converged and abs(report.closure) <= tol),
    ]
    return fields


def cmd_verify(identity: str, s: int, tol: float, radius: float, fmt: str) -> int:
    if identity == "closure":
        report = identities.contour_closure(s, radius, tol)
        fields = _contour_fields(report, tol)
        _emit_record(fields, fmt, "verify")
        return 0 if fields[-1][1] else 1

    if identity == "eq2":
        rep = identities.verify_bose_integral(s, tol)
    elif identity == "eq5":
        rep = identities.verify_eq5(tol)
    elif identity == "eq7":
        rep = identities.verify_fermi_integral(s, tol)
    elif identity == "eq9":
        rep = identities.verify_eq9(s, tol)
    elif identity == "s2":
        rep = identities.verify_zeta2(tol)
    elif identity == "log2":
        rep = identities.verify_log2_identity(tol)
    elif identity == "eq10":
        rep = identities.expanded_real_identity(s, tol)
    else:  # odd; membership enforced by argparse choices
        rep = identities.verify_odd_zeta(s, tol)
    _emit_record(_report_fields(rep), fmt, "verify")
    return 0 if rep.passed else 1


def cmd_contour(s: int, radius: float, tol: float, fmt: str) -> int:
    report = identities.contour_closure(s, radius, tol)
    fields = _contour_fields(report, tol)
    _emit_record(fields, fmt, "contour")
    return 0 if fields[-1][1] else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeta-recur",
        description="Exact zeta(2n) tables and numerical verification of the "
                    "contour identities behind them.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain",
                        help="output format (default: plain)")
    common.add_argument("--jobs", type=int, default=1,
                        help="fan out independent work items (default: 1)")

    sub = parser.add_subparsers(dest="command", required=True)

    even = sub.add_parser("even", parents=[common],
                          help="table of zeta(2n): exact coefficient, recursion==Euler, decimal")
    even.add_argument("--n", type=int, default=10, help=f"largest n, 1..{MAX_N} (default: 10)")
    even.add_argument("--digits", type=int, default=10,
                      help=f"decimal digits, 1..{MAX_DIGITS} (default: 10)")

    bern = sub.add_parser("bernoulli", parents=[common], help="table of Bernoulli numbers")
    bern.add_argument("--n", type=int, default=10,
                      help=f"largest index, 0..{MAX_BERNOULLI} (default: 10)")

    verify = sub.add_parser("verify", parents=[common], help="check one identity")
    verify.add_argument("identity", choices=IDENTITIES)
    verify.add_argument("--s", type=int, default=2, help="integer exponent (default: 2)")
    verify.add_argument("--tol", type=float, default=1e-9, help="tolerance (default: 1e-9)")
    verify.add_argument("--radius", type=float, default=30.0,
                        help="rectangle extent R for closure (default: 30)")

    contour = sub.add_parser("contour", parents=[common],
                             help="rectangle contour study: four sides and their sum")
    contour.add_argument("--s", type=int, default=2, help="integer exponent (default: 2)")
    contour.add_argument("--radius", type=float, default=30.0, help="rectangle extent R (default: 30)")
    contour.add_argument("--tol", type=float, default=1e-9, help="closure tolerance (default: 1e-9)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    raw_budget = os.environ.get("ZETA_RECUR_EVAL_BUDGET")
    if raw_budget is not None:
        try:
            budget = int(raw_budget)
        except ValueError:
            budget = -1
        if budget < 100:
            parser.error(f"ZETA_RECUR_EVAL_BUDGET must be an integer >= 100, got {raw_budget!r}")
        quadrature.set_eval_budget(budget)

    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")

    if args.command == "even":
        if not 1 <= args.n <= MAX_N:
            parser.error(f"--n must be in 1..{MAX_N}")
        if not 1 <= args.digits <= MAX_DIGITS:
            parser.error(f"--digits must be in 1..{MAX_DIGITS}")
        return cmd_zeta_even(args.n, args.digits, args.format, args.jobs)

    if args.command == "bernoulli":
        if not 0 <= args.n <= MAX_BERNOULLI:
            parser.error(f"--n must be in 0..{MAX_BERNOULLI}")
        return cmd_bernoulli(args.n, args.format)

    if args.command == "verify":
        if not args.tol > 0.0:
            parser.error("--tol must be positive")
        if not args.radius > 0.0:
            parser.error("--radius must be positive")
        if args.identity == "odd":
            if args.s < 3 or args.s % 2 == 0:
                parser.error("identity 'odd' requires an odd --s >= 3")
        elif args.identity in ("eq2", "eq7", "closure", "eq9", "eq10") and args.s < 2:
            parser.error(f"identity '{args.identity}' requires --s >= 2")
        return cmd_verify(args.identity, args.s, args.tol, args.radius, args.format)

    # contour
    if not args.tol > 0.0:
        parser.error("--tol must be positive")
    if not args.radius > 0.0:
        parser.error("--radius must be positive")
    if args.s < 2:
        parser.error("--s must be >= 2")
    return cmd_contour(args.s, args.radius, args.tol, args.format)


if __name__ == "__main__":
    sys.exit(main())
