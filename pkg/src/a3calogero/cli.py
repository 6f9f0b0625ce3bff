"""Command-line front end.

Every invocation prints exactly one report on stdout (JSON by default,
CSV with ``--format csv``) and exits 0 on success, 2 on a usage error and
3 on a singularity or a failed verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .calogero import (CouplingConfig, PhasePoint, invariance_residual, limit_scan,
                       potential_closed, potential_direct, potential_enumerated,
                       string_potential_closed)
from .errors import A3Error
from .strings import closure_check, coverage_report, enumerate_real_roots
from .weyl import (build_affine_closed_form, build_hyperbolic_spectral,
                   characteristic_polynomial, coxeter_matrix, eval_affine_closed_form,
                   eval_hyperbolic_closed_form, mat_vec, matrix_power)

SCHEMA_VERSION = "1.0"
EXIT_OK, EXIT_USAGE, EXIT_FAILURE = 0, 2, 3
ELEMENTS = {"sigma": "affine", "sigmahat": "hyperbolic"}


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    """Raised by a command whose payload is complete but reports failures."""

    def __init__(self, payload, message):
        super().__init__(message)
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --------------------------------------------------------------------------
# serialisation

def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(x, ".17g")


def _normalise(obj):
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, tuple):
        return [_normalise(v) for v in obj]
    if isinstance(obj, list):
        return [_normalise(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): _normalise(v) for k, v in obj.items()}
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):
        return _normalise(obj.item())  # numpy scalars
    return obj


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, floats with 17 significant digits."""
    obj = _normalise(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, list):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {dumps(obj[k])}" for k in sorted(obj)) + "}"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _cell(v):
    v = _normalise(v)
    if isinstance(v, float):
        return _fmt_float(v).strip('"')
    if isinstance(v, (list, dict)):
        return dumps(v)
    return "" if v is None else str(v)


def to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if not rows:
        return ""
    header = list(rows[0])
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(row.get(h)) for h in header])
    return buf.getvalue()


# --------------------------------------------------------------------------
# argument helpers

def _int_list(text: str, length: int | None = None) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if length is not None and len(vals) != length:
        raise argparse.ArgumentTypeError(f"expected {length} integers, got {len(vals)}")
    return vals


def _alpha(text):
    return _int_list(text, 5)


def _vec6(text: str) -> list[Fraction]:
    try:
        vals = [Fraction(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected six comma-separated numbers, got {text!r}")
    if len(vals) != 6:
        raise argparse.ArgumentTypeError(f"expected 6 components, got {len(vals)}")
    return vals


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _floats(vec):
    return tuple(float(x) for x in vec)


# --------------------------------------------------------------------------
# commands: each returns (payload, rows-for-csv)

def cmd_roots_enum(args):
    roots = enumerate_real_roots(args.bound, affine_only=args.affine_only)
    payload = {"bound": args.bound, "affine_only": args.affine_only,
               "count": len(roots), "roots": [list(r) for r in roots]}
    rows = [dict(zip("qrlmn", r)) for r in roots]
    return payload, rows


def cmd_orbit(args):
    kind = ELEMENTS[args.element]
    exact = mat_vec(matrix_power(coxeter_matrix(kind), args.k), args.alpha)
    results = {}
    if args.method in ("matrix", "both"):
        results["matrix"] = list(exact)
    if args.method in ("closed", "both"):
        if kind == "affine":
            closed = eval_affine_closed_form(build_affine_closed_form(), args.k, args.alpha)
        else:
            closed = eval_hyperbolic_closed_form(build_hyperbolic_spectral(), args.k, args.alpha)
        results["closed"] = list(closed)
    agree = len({tuple(v) for v in results.values()}) == 1
    payload = {"element": args.element, "k": args.k, "alpha": args.alpha,
               "method": args.method, "coefficients": next(iter(results.values())),
               "results": results, "agree": agree}
    rows = [{"method": m, **dict(zip("qrlmn", v))} for m, v in results.items()]
    if not agree:
        raise VerificationFailed(payload, "closed form and matrix power disagree")
    return payload, rows


def cmd_strings_check(args):
    report = closure_check(args.kmin, args.kmax)
    payload = report.as_dict()
    rows = [{"entry": k, "confirmed": v, "window_size": args.kmax - args.kmin + 1}
            for k, v in report.matrix.items()]
    if not report.ok:
        raise VerificationFailed(payload, f"{len(report.failures)} table entries failed")
    return payload, rows


def cmd_coverage(args):
    report = coverage_report(args.bound)
    payload = report.as_dict()
    rows = [{"bound": report.bound, "n_roots": report.n_roots, "misses": len(report.misses),
             "multiple_hits": len(report.multiple_hits), "ok": report.ok}]
    if not report.ok:
        raise VerificationFailed(payload, "coverage failed")
    return payload, rows


def cmd_potential_eval(args):
    q = _floats(args.q)
    cfg = CouplingConfig(g=args.g, both_signs=args.both_signs)
    modes = ("closed", "direct", "enumerated") if args.mode == "all" else (args.mode,)
    payload = {"q": list(q), "g": args.g, "both_signs": args.both_signs, "values": {}}
    if "closed" in modes:
        rep = potential_closed(q, cfg)
        payload["values"]["closed"] = rep.total
        payload["breakdown"] = rep.breakdown
        payload["prefactor"] = rep.prefactor
        payload["strings"] = [string_potential_closed(i, q, cfg) for i in range(6)]
    if "direct" in modes:
        payload["values"]["direct"] = potential_direct(q, cfg, args.trunc)
        payload["trunc"] = args.trunc
    if "enumerated" in modes:
        payload["values"]["enumerated"] = potential_enumerated(q, cfg, args.bound, affine_only=True)
        payload["bound"] = args.bound
    rows = [{"mode": m, "value": v} for m, v in payload["values"].items()]
    return payload, rows


def cmd_potential_invariance(args):
    point = PhasePoint(tuple(args.q), tuple(args.p))
    cfg = CouplingConfig(g=args.g, both_signs=args.both_signs)
    # reflected coordinates stay rational; kinetic residuals are exact
    res = invariance_residual(point, cfg, tol=args.tol)
    failures = [k for k, v in res.items()
                if v["potential_rel_residual"] >= args.tol or v["kinetic_residual"] != 0]
    table_mismatch = {k: v["table_mismatched_slots"] for k, v in res.items()
                      if v["table_mismatched_slots"]}
    payload = {"q": [str(x) for x in args.q], "p": [str(x) for x in args.p], "tol": args.tol,
               "transforms": res, "failures": failures,
               "table_mismatches": table_mismatch}
    rows = [{"transform": k, **{f: v[f] for f in ("potential_rel_residual", "kinetic_residual",
                                                  "table_max_rel_mismatch")}}
            for k, v in res.items()]
    if failures:
        raise VerificationFailed(payload, f"invariance violated for {failures}")
    return payload, rows


def cmd_potential_limit(args):
    cfg = CouplingConfig(g=args.g, both_signs=args.both_signs)
    rows = limit_scan(_floats(args.q), cfg, args.q6)
    payload = {"q": [float(x) for x in args.q], "g": args.g, "both_signs": args.both_signs,
               "expected_prefactor": cfg.multiplicity,
               "measured_prefactor": rows[-1]["ratio"], "rows": rows}
    return payload, rows


def cmd_charpoly(args):
    coeffs = characteristic_polynomial(coxeter_matrix(ELEMENTS[args.element]))
    payload = {"element": args.element, "coefficients": coeffs, "degree": len(coeffs) - 1}
    rows = [{"power": len(coeffs) - 1 - t, "coefficient": c} for t, c in enumerate(coeffs)]
    return payload, rows


def build_parser() -> _Parser:
    parser = _Parser(prog="a3calogero", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    # leaf commands also accept --format after the subcommand
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    roots = sub.add_parser("roots", help="real-root enumeration")
    rsub = roots.add_subparsers(dest="action", required=True, parser_class=_Parser)
    enum = rsub.add_parser("enum", parents=[fmt], help="brute-force Diophantine enumeration")
    enum.add_argument("--bound", type=_positive, required=True)
    enum.add_argument("--affine-only", action="store_true")
    enum.set_defaults(func=cmd_roots_enum)

    orbit = sub.add_parser("orbit", parents=[fmt], help="apply sigma^k or sigmahat^k to a root")
    orbit.add_argument("--element", choices=tuple(ELEMENTS), required=True)
    orbit.add_argument("--k", type=int, required=True)
    orbit.add_argument("--alpha", type=_alpha, required=True, help="q,r,l,m,n")
    orbit.add_argument("--method", choices=("closed", "matrix", "both"), default="both")
    orbit.set_defaults(func=cmd_orbit)

    strings = sub.add_parser("strings", help="root-string table checks")
    ssub = strings.add_subparsers(dest="action", required=True, parser_class=_Parser)
    check = ssub.add_parser("check", parents=[fmt], help="verify the Weyl action on root strings")
    check.add_argument("--kmin", type=int, required=True)
    check.add_argument("--kmax", type=int, required=True)
    check.set_defaults(func=cmd_strings_check)

    cov = sub.add_parser("coverage", parents=[fmt], help="every affine real root is +/-gamma_i(k) once")
    cov.add_argument("--bound", type=_positive, default=8)
    cov.set_defaults(func=cmd_coverage)

    pot = sub.add_parser("potential", help="extended Calogero potential")
    psub = pot.add_subparsers(dest="action", required=True, parser_class=_Parser)

    def coupling(p):
        p.add_argument("--g", type=float, default=1.0)
        p.add_argument("--both-signs", action="store_true")

    ev = psub.add_parser("eval", parents=[fmt])
    ev.add_argument("--q", type=_vec6, required=True)
    coupling(ev)
    ev.add_argument("--trunc", type=_positive, default=100_000)
    ev.add_argument("--mode", choices=("direct", "closed", "enumerated", "all"), default="closed")
    ev.add_argument("--bound", type=_positive, default=3)
    ev.set_defaults(func=cmd_potential_eval)

    inv = psub.add_parser("invariance", parents=[fmt])
    inv.add_argument("--q", type=_vec6, required=True)
    inv.add_argument("--p", type=_vec6, required=True)
    inv.add_argument("--tol", type=float, default=1e-12)
    coupling(inv)
    inv.set_defaults(func=cmd_potential_invariance)

    lim = psub.add_parser("limit", parents=[fmt])
    lim.add_argument("--q", type=_vec6, required=True)
    lim.add_argument("--q6", type=_float_list, required=True)
    coupling(lim)
    lim.set_defaults(func=cmd_potential_limit)

    cp = sub.add_parser("charpoly", parents=[fmt], help="characteristic polynomial of a Coxeter matrix")
    cp.add_argument("--element", choices=tuple(ELEMENTS), required=True)
    cp.set_defaults(func=cmd_charpoly)
    return parser


def _command_echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "format")}


def _emit(report: dict, rows, fmt: str, out) -> None:
    if fmt == "csv":
        if report["status"] == "ok" or rows:
            out.write(to_csv(rows))
        else:
            out.write(to_csv([{"status": report["status"], **report["error"]}]))
    else:
        out.write(dumps(report) + "\n")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "csv" if "--format=csv" in argv or _after(argv, "--format") == "csv" else "json"
    report = {"schema_version": SCHEMA_VERSION, "command": {"argv": argv},
              "payload": None, "status": "ok", "error": None}
    rows = []
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        report.update(status="error", error={"type": "usage", "message": str(exc)})
        _emit(report, [], fmt, out)
        return EXIT_USAGE
    report["command"].update(_command_echo(args))
    code = EXIT_OK
    try:
        payload, rows = args.func(args)
        report["payload"] = payload
    except VerificationFailed as exc:
        report.update(payload=exc.payload, status="error",
                      error={"type": "verification", "message": str(exc)})
        err.write(f"verification failed: {exc}\n")
        code = EXIT_FAILURE
    except (A3Error, ValueError, ArithmeticError) as exc:
        report.update(status="error", error={"type": type(exc).__name__, "message": str(exc)})
        err.write(f"{type(exc).__name__}: {exc}\n")
        rows = []
        code = EXIT_FAILURE
    _emit(report, rows, args.format, out)
    return code


def _after(argv, flag):
    try:
        return argv[argv.index(flag) + 1]
    except (ValueError, IndexError):
        return None


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
