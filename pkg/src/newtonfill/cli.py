"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical verification
fails, 2 for usage and parse errors. Reports go to stdout, diagnostics to
stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import acceptance, scenarios
from .errors import DimensionPolicyError, PolySyntaxError, UnknownVariableError, VerificationError
from .intlinalg import IntMatrix
from .laurent import VariableList, parse_poly, render
from .polytope import fingerprint

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FP_COLUMNS = ["dim", "total", "boundary", "interior", "nvol"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- output helpers ---------------------------------------------------------------

def _fp_cells(fp):
    return [fp.intrinsic_dim, fp.total, fp.boundary, fp.interior, fp.normalized_volume]


def _cell(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def _csv(headers, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(headers)
    for row in rows:
        w.writerow([_cell(x) for x in row])
    return buf.getvalue()


def _table(headers, rows) -> str:
    cells = [list(headers)] + [[_cell(x) for x in row] for row in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(headers))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _vertices_text(vertices) -> str:
    return " ".join("(" + ",".join(map(str, v)) + ")" for v in sorted(vertices))


# -- subcommands ------------------------------------------------------------------

def run_newton(args, out):
    try:
        variables = VariableList.parse(args.vars)
        p = parse_poly(args.expr, variables)
    except (PolySyntaxError, UnknownVariableError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if p.is_zero():
        raise UsageError("the zero polynomial has no Newton polytope")
    try:
        fp = fingerprint(p)
    except DimensionPolicyError as exc:
        print(f"newtonfill: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        out.write(_json({
            "expr": render(p),
            "variables": list(variables),
            "ambient_dim": len(variables),
            "fingerprint": fp.to_dict(),
        }))
    elif args.format == "csv":
        out.write(_csv(["ambient_dim"] + FP_COLUMNS + ["vertices"],
                       [[len(variables)] + _fp_cells(fp) + [_vertices_text(fp.vertices)]]))
    else:
        rows = [
            ("polynomial", render(p)),
            ("ambient_dim", len(variables)),
            ("dim", fp.intrinsic_dim),
            ("total", fp.total),
            ("boundary", fp.boundary),
            ("interior", fp.interior),
            ("nvol", _cell(fp.normalized_volume)),
            ("vertices", _vertices_text(fp.vertices)),
        ]
        out.write("".join(f"{k:<12} {v}\n" for k, v in rows))
    return EXIT_OK


def run_alpha(args, out):
    if not 1 <= args.max <= 64:
        raise UsageError("--max must be between 1 and 64")
    A = scenarios.alpha_matrix()
    P = A
    rows = []
    mismatches = []
    for n in range(1, args.max + 1):
        if n > 1:
            P = P @ A
        value = P[0, 0]
        fp = fingerprint(value)
        rows.append((n, len(value), fp))
        if args.check:
            if n <= len(scenarios.ALPHA_MONOMIAL_COUNTS) and len(value) != scenarios.ALPHA_MONOMIAL_COUNTS[n - 1]:
                mismatches.append(f"n={n}: {len(value)} monomials, expected {scenarios.ALPHA_MONOMIAL_COUNTS[n - 1]}")
            if n >= 2 and fp.invariants() != scenarios.alpha_fingerprint_formula(n):
                mismatches.append(f"n={n}: fingerprint {fp.invariants()}, expected {scenarios.alpha_fingerprint_formula(n)}")
    if args.format == "json":
        out.write(_json({
            "rows": [{"n": n, "monomials": m, "fingerprint": fp.to_dict()} for n, m, fp in rows],
            "check": {"passed": not mismatches, "mismatches": mismatches} if args.check else None,
        }))
    else:
        table = [[n, m] + _fp_cells(fp) for n, m, fp in rows]
        render_table = _csv if args.format == "csv" else _table
        out.write(render_table(["n", "monomials"] + FP_COLUMNS, table))
        if args.check and args.format == "text":
            out.write("check: " + ("passed" if not mismatches else f"FAILED ({len(mismatches)} mismatches)") + "\n")
    for m in mismatches:
        print(f"newtonfill: alpha check: {m}", file=sys.stderr)
    return EXIT_FAIL if mismatches else EXIT_OK


def run_orbit(args, out):
    if args.scenario not in scenarios.SCENARIOS:
        raise UsageError(f"unknown scenario {args.scenario!r}; choose from {', '.join(scenarios.SCENARIOS)}")
    if args.max < 1:
        raise UsageError("--max must be positive")
    s = scenarios.get_scenario(args.scenario)
    try:
        rows = scenarios.orbit_table(s, args.max)
    except VerificationError as exc:
        print(f"newtonfill: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report = scenarios.orbit_report(s, rows)
    if args.format == "json":
        out.write(_json(report))
    else:
        table = [[r.n, r.monomials] + _fp_cells(r.fingerprint) for r in rows]
        render_table = _csv if args.format == "csv" else _table
        out.write(render_table(["n", "monomials"] + FP_COLUMNS, table))
        if args.format == "text":
            verdict = "distinct" if report["distinct"] else f"NOT distinct, rows {report['witness']} collide"
            out.write(f"{s.name}: {verdict}\n")
    if not report["distinct"]:
        print(f"newtonfill: fingerprints collide at n={report['witness']}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def run_torus(args, out):
    n = args.n
    if n < 3 or n % 2 == 0:
        raise UsageError("--n must be an odd integer >= 3")
    if args.i is not None and not 1 <= args.i <= n:
        raise UsageError(f"--i must be between 1 and {n}")
    indices = [args.i] if args.i is not None else list(range(1, n + 1))
    rows = []
    failed = False
    for i in indices:
        try:
            t = scenarios.torus_value(n, i)
        except VerificationError as exc:
            print(f"newtonfill: n={n}, i={i}: {exc}", file=sys.stderr)
            rows.append({"i": i, "monomials": None, "simplex": False, "det": None, "inverse_verified": False})
            failed = True
            continue
        row = {
            "i": i,
            "monomials": len(t.value),
            "simplex": scenarios.torus_simplex_check(t),
            "det": abs(t.det),
            "inverse_verified": t.S @ t.S_inv == IntMatrix.identity(n - 1),
        }
        failed |= not (row["simplex"] and row["det"] == 1 and row["inverse_verified"] and row["monomials"] == n)
        rows.append(row)
    if args.format == "json":
        out.write(_json({"n": n, "rows": rows, "passed": not failed}))
    else:
        headers = ["i", "monomials", "simplex", "det", "inverse_verified"]
        table = [[r[h] for h in headers] for r in rows]
        out.write((_csv if args.format == "csv" else _table)(headers, table))
    return EXIT_FAIL if failed else EXIT_OK


def run_selftest(args, out):
    only = set(args.only) if args.only else None
    stream = args.format == "text"

    def emit(result):
        if stream:
            out.write(result.line() + "\n")
            out.flush()

    results = acceptance.run_all(seed=args.seed, only=only, on_result=emit)
    passed = all(r.passed for r in results)
    if args.format == "json":
        out.write(_json({"passed": passed, "results": [r.to_dict() for r in results]}))
    elif args.format == "csv":
        out.write(_csv(["criterion", "title", "passed", "measured"],
                       [[r.number, r.title, r.passed, r.measured] for r in results]))
    else:
        failing = [r.number for r in results if not r.passed]
        out.write(f"{len(results) - len(failing)} of {len(results)} criteria passed"
                  + (f"; failing: {', '.join(map(str, failing))}" if failing else "") + "\n")
    for r in results:
        if not r.passed:
            print(f"newtonfill: criterion {r.number} failed: {r.measured}", file=sys.stderr)
    return EXIT_OK if passed else EXIT_FAIL


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS,
                     help="output format (default text)")
    parser = _Parser(prog="newtonfill", parents=[fmt],
                     description="Newton polytope fingerprints of F2 Laurent polynomials.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("newton", parents=[fmt], help="fingerprint the Newton polytope of a polynomial")
    p.add_argument("--expr", required=True, help='polynomial text, e.g. "x^2 + y^-1*x"')
    p.add_argument("--vars", required=True, help="comma-separated variable names")
    p.set_defaults(handler=run_newton)

    p = sub.add_parser("alpha", parents=[fmt], help="monomial counts and fingerprints of the alpha family")
    p.add_argument("--max", type=int, default=20, help="largest power (1..64)")
    p.add_argument("--check", action="store_true", help="compare with the embedded reference data")
    p.set_defaults(handler=run_alpha)

    p = sub.add_parser("orbit", parents=[fmt], help="fingerprint a monodromy orbit")
    p.add_argument("--scenario", required=True, help=", ".join(scenarios.SCENARIOS))
    p.add_argument("--max", type=int, default=20, help="number of loop iterations")
    p.set_defaults(handler=run_orbit)

    p = sub.add_parser("torus", parents=[fmt], help="check the (2, n) torus knot simplices")
    p.add_argument("--n", type=int, required=True, help="odd number of crossings, at least 3")
    p.add_argument("--i", type=int, default=None, help="pinched crossing (default: all)")
    p.set_defaults(handler=run_torus)

    p = sub.add_parser("selftest", parents=[fmt], help="run the acceptance checks")
    p.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    p.add_argument("--only", type=int, action="append", choices=sorted(acceptance.CRITERIA),
                   help="run only this criterion (repeatable)")
    p.set_defaults(handler=run_selftest)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("newtonfill: a subcommand is required (newton, alpha, orbit, torus, selftest)")
        if not hasattr(args, "format"):
            args.format = "text"
        return args.handler(args, out)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        print(parser.format_usage().rstrip(), file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"newtonfill: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
