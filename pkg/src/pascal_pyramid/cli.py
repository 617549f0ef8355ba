"""Command-line entry point: ``pascal-pyramid <command> [options]``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or capacity error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analytic, closed_forms, export, sequences as seq
from .hpt import CAP_ENV_VAR, CapacityError, default_cap
from .pyramid import PascalPyramid
from .verify import run_verify, summarize

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _graph_vectors(q: int, n_max: int, cap: int, sums: bool) -> list:
    pyr = PascalPyramid(q, n_max, cap)
    return [g.value_sums() if sums else g.census() for g in pyr.levels()]


def cmd_counts(args) -> int:
    q, n = args.q, args.n
    if q == 4:
        vectors = [seq.euclidean_count_vector(k) for k in range(n + 1)]
        if args.method == "graph":
            vectors = _graph_vectors(q, n, args.cap, sums=False)
    elif args.method == "graph":
        vectors = _graph_vectors(q, n, args.cap, sums=False)
    elif args.method == "closed":
        vectors = [closed_forms.closed_form_counts(q, k) for k in range(n + 1)]
    else:
        vectors = seq.counts_by_recurrence(q, n)
    _emit(export.render_sequences(vectors, args.format), args.output)
    return EXIT_OK


def cmd_sums(args) -> int:
    q, n = args.q, args.n
    if q == 4:
        vectors = [seq.euclidean_sum_vector(k) for k in range(n + 1)]
        if args.method == "graph":
            vectors = _graph_vectors(q, n, args.cap, sums=True)
    elif args.method == "graph":
        vectors = _graph_vectors(q, n, args.cap, sums=True)
    elif args.method == "matrix":
        vectors = seq.sums_by_matrix(q, n)
    else:
        vectors = seq.sums_by_recurrence(q, n, literal_c=args.literal_c)
    _emit(export.render_sequences(vectors, args.format), args.output)
    return EXIT_OK


def cmd_labels(args) -> int:
    level = args.n if args.level is None else args.level
    g = PascalPyramid(args.q, level, args.cap).level(level)
    render = {"table": export.level_table, "csv": export.level_csv, "json": export.level_json}
    _emit(render[args.format](g), args.output)
    return EXIT_OK


def cmd_export(args) -> int:
    if args.level > args.n:
        raise UsageError(f"--level {args.level} exceeds --n {args.n}")
    if args.format == "dot":
        pyr = PascalPyramid(args.q, args.level + 1, args.cap)
        text = export.levels_dot(pyr.level(args.level), pyr.level(args.level + 1))
    else:
        text = export.level_json(PascalPyramid(args.q, args.level, args.cap).level(args.level))
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verify(args.q, args.n, args.cap, literal_c=args.literal_c, structural=not args.sequences_only)
    if args.format == "json":
        text = json.dumps(report.to_dict(timing=not args.no_timing), indent=1) + "\n"
    else:
        text = "\n".join(summarize(report)) + "\n"
    _emit(text, args.output)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_gf(args) -> int:
    gf = analytic.s_generating_function(args.q) if args.which == "s" else analytic.shat_generating_function(args.q)
    terms = gf.series(args.n)
    if args.format == "json":
        text = json.dumps({"q": args.q, "which": args.which, "numerator": list(gf.numerator),
                           "denominator": list(gf.denominator), "coefficients": [str(t) for t in terms]}) + "\n"
    elif args.format == "csv":
        text = export.to_csv(["n", args.which], list(enumerate(terms)))
    else:
        text = " ".join(str(t) for t in terms) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_ratio(args) -> int:
    r = analytic.growth_ratio(args.q, args.n)
    if args.format == "json":
        text = json.dumps({
            "q": r.q,
            "alpha1_exact": str(r.exact),
            "alpha1": r.value,
            "n": r.n,
            "empirical": str(r.empirical),
            "empirical_float": float(r.empirical),
            "abs_error": r.empirical_error,
        }) + "\n"
    else:
        text = (
            f"alpha1 = {r.exact} ≈ {r.value:.6f}\n"
            f"s_hat_{r.n + 1}/s_hat_{r.n} ≈ {float(r.empirical):.9f} (|diff| = {r.empirical_error:.3e})\n"
        )
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pascal-pyramid", description="Pascal pyramid PP(4,q): counts, sums, graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default_format, n_default=10, n_help="largest level"):
        p.add_argument("--q", type=int, default=5, help="squares meeting at a vertex (>= 4)")
        p.add_argument("--n", type=int, default=n_default, help=n_help)
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--output", "-o", help="write to this file instead of stdout")
        p.add_argument("--cap", type=int, default=default_cap(),
                       help=f"vertex cap for graph construction (env {CAP_ENV_VAR})")

    p = sub.add_parser("counts", help="vertex counts per level")
    common(p, ["table", "csv", "json"], "table")
    p.add_argument("--method", choices=["system", "graph", "closed"], default="system")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("sums", help="label sums per level")
    common(p, ["table", "csv", "json"], "table")
    p.add_argument("--method", choices=["system", "graph", "matrix"], default="system")
    p.add_argument("--literal-c", action="store_true", help="use the unhatted c_n in the D line (debug)")
    p.set_defaults(func=cmd_sums)

    p = sub.add_parser("labels", help="labels of one level")
    common(p, ["table", "csv", "json"], "table")
    p.add_argument("--level", type=int)
    p.set_defaults(func=cmd_labels)

    p = sub.add_parser("verify", help="cross-check every method and report errata")
    common(p, ["json", "table"], "json")
    p.add_argument("--literal-c", action="store_true", help="use the unhatted c_n in the D line (debug)")
    p.add_argument("--no-timing", action="store_true", help="omit timings for byte-stable output")
    p.add_argument("--sequences-only", action="store_true", help="skip per-vertex graph invariants")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="level graph as JSON, or two levels as DOT")
    common(p, ["json", "dot"], "json")
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("gf", help="generating-function coefficients")
    common(p, ["table", "csv", "json"], "table", n_help="number of coefficients")
    p.add_argument("--which", choices=["s", "shat"], default="s")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("ratio", help="growth ratio of the label sums")
    common(p, ["table", "json"], "table", n_default=30, n_help="level for the empirical ratio")
    p.set_defaults(func=cmd_ratio)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.q < 4:
            raise UsageError("--q must be >= 4")
        if args.n < 0:
            raise UsageError("--n must be >= 0")
        if args.q == 4 and args.command in ("gf", "ratio"):
            raise UsageError(f"{args.command} needs q >= 5")
        if args.command == "sums" and args.q == 4 and args.method == "matrix":
            raise UsageError("the transition matrix is defined for q >= 5")
        if args.command == "counts" and args.q == 4 and args.method == "closed":
            raise UsageError("closed forms are defined for q >= 5")
        return args.func(args)
    except (UsageError, CapacityError) as exc:
        print(f"pascal-pyramid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
