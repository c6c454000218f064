"""Command-line front end: ``monostab <command> [input] [options]``.

Exit codes: 0 success, 1 verification mismatch, 2 parse or parameter
error, 3 inconclusive detection, 4 generator cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from .constructions import (
    default_kmax,
    ground_truth,
    make_H,
    make_J,
    make_paper_ideal,
    make_triangle,
)
from .core import format_ideal, parse_ideal
from .decomposition import associated_primes, sorted_primes
from .errors import CapacityError, MonoStabError, ParameterError, ParseError
from .stability import (
    DEFAULT_CAP,
    DEFAULT_WINDOW,
    build_profile,
    detect_astab,
    detect_vstab,
    dumps,
    format_line,
    profile_table,
    profile_to_dict,
)
from .theorems import run_suite
from .vnumber import v_global

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INCONCLUSIVE, EXIT_CAPACITY = 0, 1, 2, 3, 4

FAMILIES = ("H", "J", "triangle", "paper")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_family(name: str, a: int | None = None, b: int | None = None):
    """Constructor lookup by family name; returns (ideal, family, a, b)."""
    a = a if a is not None else (2 if name in ("J", "paper") else 1)
    b = b if b is not None else 1
    if name == "H":
        return make_H(b), "H", 1, b
    if name == "J":
        return make_J(a), "J", a, 1
    if name == "triangle":
        return make_triangle(1), "triangle", 1, 1
    if name == "paper":
        return make_paper_ideal(a, b), "paper", a, b
    raise ParameterError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


def parse_constructor(spec: str):
    """``H:b=2`` or ``paper:a=2,b=3`` style constructor specs."""
    name, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        key = key.strip()
        if not eq or key not in ("a", "b"):
            raise ParameterError(f"bad constructor parameter {item!r}")
        try:
            params[key] = int(value)
        except ValueError:
            raise ParameterError(f"parameter {key} must be an integer") from None
    return build_family(name.strip(), params.get("a"), params.get("b"))


def load_input(source: str, stdin):
    """Returns (ideal, family or None, a, b)."""
    if source == "-":
        return parse_ideal(stdin.read()), None, None, None
    name = source.partition(":")[0]
    if name in FAMILIES:
        return parse_constructor(source)
    try:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParameterError(f"cannot read {source}: {exc.strerror}") from None
    return parse_ideal(text), None, None, None


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_ass(args, out, stdin) -> int:
    ideal, *_ = load_input(args.input, stdin)
    ideal.require_proper()
    primes = sorted_primes(associated_primes(ideal))
    names = [p.format(ideal.ctx) for p in primes]
    if args.format == "json":
        out.write(dumps({"vars": list(ideal.ctx.names), "ass": names}))
    elif args.format == "csv":
        out.write(_csv([["prime"]] + [[n] for n in names]))
    else:
        out.write("\n".join(names) + "\n")
    return EXIT_OK


def cmd_vnum(args, out, stdin) -> int:
    ideal, *_ = load_input(args.input, stdin)
    report = v_global(ideal)
    ctx = ideal.ctx
    if args.format == "json":
        out.write(dumps(report.to_dict(ctx)))
    elif args.format == "csv":
        rows = [["prime", "v_p", "witness"]]
        rows += [[p.format(ctx), report.per_prime[p], report.witnesses[p].format(ctx)] for p in report.primes]
        out.write(_csv(rows))
    else:
        best = report.argmin()[0]
        out.write(f"v={report.value}, witness {report.witnesses[best].format(ctx)}\n")
        for p in report.primes:
            out.write(f"  {p.format(ctx)}: v_p={report.per_prime[p]} witness {report.witnesses[p].format(ctx)}\n")
    return EXIT_OK


def _profile(args, stdin):
    ideal, family, a, b = load_input(args.input, stdin)
    k_max = args.kmax or (default_kmax(a, b) if family else 6)
    if k_max <= args.window:
        raise ParameterError(f"--kmax must exceed --window ({args.window})")
    return build_profile(ideal, k_max, args.cap), family, a, b


def _profile_csv(profile) -> str:
    ctx = profile.ideal.ctx
    rows = [["k", "generators", "ass_size", "v", "v_minus_alpha_k", "ass"]]
    for e in profile.entries:
        rows.append([
            e.k, len(e.ideal), len(e.ass), e.v.value, e.v.value - profile.alpha * e.k,
            " ".join(p.format(ctx) for p in sorted_primes(e.ass)),
        ])
    return _csv(rows)


def cmd_powers(args, out, stdin) -> int:
    profile, *_ = _profile(args, stdin)
    if args.format == "json":
        out.write(dumps(profile_to_dict(profile)))
    elif args.format == "csv":
        out.write(_profile_csv(profile))
    else:
        out.write(profile_table(profile))
    return EXIT_OK


def cmd_stab(args, out, stdin) -> int:
    profile, family, a, b = _profile(args, stdin)
    truth = ground_truth(family, a, b) if family else None
    astab = detect_astab(profile, args.window, truth.astab if truth else None)
    vstab = detect_vstab(profile, args.window, truth.vstab if truth else None)
    if args.format == "json":
        data = profile_to_dict(profile)
        data["astab"] = astab.to_dict()
        data["vstab"] = vstab.to_dict()
        data["line"] = format_line(vstab.line) if vstab.line else None
        out.write(dumps(data))
    elif args.format == "csv":
        out.write(_profile_csv(profile))
    else:
        out.write(profile_table(profile, astab, vstab))
    if not (astab.conclusive and vstab.conclusive):
        return EXIT_INCONCLUSIVE
    if truth and not (astab.certified and vstab.certified):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_construct(args, out, stdin) -> int:
    ideal, *_ = build_family(args.family, args.a, args.b)
    out.write(format_ideal(ideal))
    return EXIT_OK


def cmd_verify(args, out, stdin) -> int:
    report = run_suite(args.a, args.b, cap=args.cap, window=args.window, k_max=args.kmax)
    if args.format == "json":
        out.write(dumps(report))
    elif args.format == "csv":
        rows = [["check", "a", "b", "k", "passed"]]
        rows += [[c["check"], c.get("a", ""), c.get("b", ""), c.get("k", ""), c["passed"]] for c in report["cases"]]
        out.write(_csv(rows))
    else:
        for c in report["cases"]:
            params = " ".join(f"{key}={c[key]}" for key in ("a", "b", "k") if key in c)
            mark = "PASS" if c["passed"] else "FAIL"
            extra = f"  {c['summary']}" if "summary" in c else ""
            if c.get("status") == "capacity":
                extra = f"  generator cap exceeded at k={c['capacity_k']}"
            out.write(f"{mark}  {c['check']:<13} {params}{extra}\n")
        out.write(f"{report['count'] - report['failed']}/{report['count']} checks passed\n")
    if report["passed"]:
        return EXIT_OK
    return EXIT_CAPACITY if report["failed"] == report["capacity_limited"] else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monostab",
        description="Associated primes, v-numbers and their stabilization for monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, profile=False):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="max minimal generators per power")
        if profile:
            p.add_argument("--kmax", type=_positive, default=None, help="largest power to compute")
            p.add_argument("--window", type=_positive, default=DEFAULT_WINDOW, help="tail length required for a conclusive detection")

    source_help = "ideal file, '-' for stdin, or a constructor such as H:b=2 or paper:a=2,b=3"
    for name, func, helptext in (
        ("ass", cmd_ass, "associated primes"),
        ("vnum", cmd_vnum, "v-number with per-prime witnesses"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", help=source_help)
        common(p)
        p.set_defaults(func=func)
    for name, func, helptext in (
        ("powers", cmd_powers, "Ass and v of the powers I^1..I^kmax"),
        ("stab", cmd_stab, "detect astab, vstab and the eventual v-line"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", help=source_help)
        common(p, profile=True)
        p.set_defaults(func=func)

    p = sub.add_parser("construct", help="print a built-in ideal in the text format")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--a", type=_positive, default=None)
    p.add_argument("--b", type=_positive, default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="replay the stability checks for the built-in families")
    p.add_argument("--a", type=_positive, default=None)
    p.add_argument("--b", type=_positive, default=None)
    common(p, profile=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, stdin=None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out, stdin)
    except CapacityError as exc:
        print(f"monostab: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParseError, ParameterError) as exc:
        print(f"monostab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MonoStabError as exc:
        print(f"monostab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
