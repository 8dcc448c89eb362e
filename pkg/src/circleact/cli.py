"""Command-line front end.

One subcommand per library surface, each with ``--format {text,json}``
(default text).  Exit codes: 0 success, 1 domain error (a machine-readable
JSON object goes to stderr), 2 usage error.  All numeric flags are parsed
as arbitrary-precision integers; divisibilities easily exceed 64 bits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__, selftest
from .bernoulli import im_j_order, table_rows
from .classifier import (
    InvalidInvariantsError,
    ManifoldInvariants,
    classify,
    required_divisor,
)
from .exactnum import format_rational
from .genus import multiplicative_sequence
from .gradedtop import Family, gysin_total_space, standard_orbit_model

__all__ = ["main", "build_parser"]

_FAMILY_ALIASES = {
    "CPN": Family.CPN,
    "CPHALF": Family.CPHALF_TIMES_SPHERE,
    "CPHALF_TIMES_SPHERE": Family.CPHALF_TIMES_SPHERE,
}


def _family(text: str) -> Family:
    try:
        return _FAMILY_ALIASES[text.upper()]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown family {text!r}; choose CPN or CPHALF_TIMES_SPHERE"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circleact",
        description=(
            "Decide whether a highly connected odd-dimensional manifold "
            "admits a free circle action, and inspect every number in the "
            "computation."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("classify", help="decide a manifold class (n, b_n, l)")
    p.add_argument("--n", type=int, required=True, help="dimension parameter, 5 or 7 mod 8")
    p.add_argument("--bn", type=int, required=True, help="middle Betti number")
    p.add_argument("--l", type=int, default=None, help="middle Pontrjagin divisibility")
    add_format(p)

    p = sub.add_parser("bernoulli", help="table of B_k, den(B_k), den(B_k/4k)")
    p.add_argument("--max", type=int, required=True, help="largest index k")
    add_format(p)

    p = sub.add_parser("imj", help="den(B_k/4k), the image-of-J index")
    p.add_argument("--k", type=int, required=True)
    add_format(p)

    p = sub.add_parser("ahat", help="degree-k multiplicative-sequence polynomial")
    p.add_argument("--k", type=int, required=True)
    add_format(p)

    p = sub.add_parser("divisor", help="divisor report for n = 7 mod 8")
    p.add_argument("--n", type=int, required=True)
    add_format(p)

    p = sub.add_parser("gysin", help="total-space cohomology over a standard orbit model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", type=_family, required=True, help="CPN or CPHALF_TIMES_SPHERE")
    p.add_argument("--r", type=int, required=True, help="number of handle summands")
    add_format(p)

    p = sub.add_parser("recipe", help="orbit-space recipe for an admitting class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bn", type=int, required=True)
    p.add_argument("--l", type=int, default=None)
    add_format(p)

    p = sub.add_parser("selftest", help="run the library invariant suites")
    p.add_argument("--only", action="append", default=None, metavar="SUBSTRING",
                   help="run only checks whose name contains this (repeatable)")
    add_format(p)

    return parser


def _emit(payload: dict, text_lines: list[str], fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(payload), file=out)
    else:
        for line in text_lines:
            print(line, file=out)


def _cmd_classify(args, out) -> int:
    result = classify(ManifoldInvariants(n=args.n, b_n=args.bn, l=args.l))
    lines = [
        f"admits free circle action: {'yes' if result.admits else 'no'}",
        f"reason: {result.reason.value}",
    ]
    if result.divisors:
        lines.append(f"required divisor: {result.divisors.required}")
        lines.append(f"realizability divisor: {result.divisors.kervaire}")
    if result.witness:
        w = result.witness
        n = args.n
        parts = []
        if w.sphere_product_copies:
            parts.append(f"#_{w.sphere_product_copies}(S^{n} x S^{n + 1})")
        if w.bundle_divisibility is not None:
            parts.append(
                f"S^{n}-bundle over S^{n + 1} with divisibility {w.bundle_divisibility}"
            )
        desc = " # ".join(parts) if parts else f"S^{2 * n + 1} (homotopy sphere)"
        lines.append(f"normal form: {desc}")
    if result.orbit:
        lines.append(f"orbit space: {result.orbit.describe()}")
    for note in result.notes:
        lines.append(f"note: {note}")
    _emit(result.to_json_dict(), lines, args.format, out)
    return 0


def _cmd_bernoulli(args, out) -> int:
    rows = table_rows(args.max)
    if args.format == "json":
        payload = [
            {"k": k, "bernoulli": format_rational(b), "den": d, "j_index": j}
            for k, b, d, j in rows
        ]
        print(json.dumps(payload), file=out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["k", "bernoulli", "den", "j_index"])
        for k, b, d, j in rows:
            writer.writerow([k, format_rational(b), d, j])
        out.write(buf.getvalue())
    return 0


def _cmd_imj(args, out) -> int:
    value = im_j_order(args.k)
    _emit({"k": args.k, "j_index": value}, [str(value)], args.format, out)
    return 0


def _cmd_ahat(args, out) -> int:
    poly = multiplicative_sequence(args.k)
    _emit(poly.to_json_dict(), [str(poly)], args.format, out)
    return 0


def _cmd_divisor(args, out) -> int:
    report = required_divisor(args.n)
    lines = [
        f"n: {report.n}",
        f"k: {report.k}",
        f"a_k: {report.a_k}",
        f"kervaire: {report.kervaire}",
        f"j_index: {report.j_index}",
        f"required: {report.required}",
    ]
    _emit(report.to_json_dict(), lines, args.format, out)
    return 0


def _cmd_gysin(args, out) -> int:
    model = standard_orbit_model(args.n, args.family, args.r)
    h = gysin_total_space(model)
    lines = []
    for j in range(h.top_degree + 1):
        rank = h.rank(j)
        if rank:
            lines.append(f"H^{j} = Z" + (f"^{rank}" if rank > 1 else ""))
    _emit(h.to_json_dict(), lines, args.format, out)
    return 0


def _cmd_recipe(args, out) -> int:
    result = classify(ManifoldInvariants(n=args.n, b_n=args.bn, l=args.l))
    if not result.admits or result.orbit is None:
        error = {
            "admits": False,
            "reason": result.reason.value,
            "error": "no free circle action up to almost diffeomorphism",
        }
        print(json.dumps(error), file=sys.stderr)
        return 1
    _emit(result.orbit.to_json_dict(), [result.orbit.describe()], args.format, out)
    return 0


def _cmd_selftest(args, out) -> int:
    report = selftest.run(args.only)
    if args.format == "json":
        payload = {
            "passed": report.passed,
            "failed": report.failed,
            "failures": [{"name": n, "error": e} for n, e in report.failures],
        }
        print(json.dumps(payload), file=out)
    else:
        for name, error in report.failures:
            print(f"FAIL {name}: {error}", file=out)
        print(f"passed {report.passed}, failed {report.failed}", file=out)
    return 0 if report.ok else 1


_COMMANDS = {
    "classify": _cmd_classify,
    "bernoulli": _cmd_bernoulli,
    "imj": _cmd_imj,
    "ahat": _cmd_ahat,
    "divisor": _cmd_divisor,
    "gysin": _cmd_gysin,
    "recipe": _cmd_recipe,
    "selftest": _cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    """Entry point; returns the exit code (argparse exits 2 on usage errors)."""
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except InvalidInvariantsError as exc:
        error = {
            "admits": False,
            "reason": "UNREALIZABLE",
            "error": "invalid manifold invariants",
            "violations": exc.violations,
        }
        print(json.dumps(error), file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
