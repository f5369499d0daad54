"""``mdim`` command line: compute, sweep, generate, verify, oracle.

Exit codes: 0 success, 1 I/O or parse error, 2 domain error, 3 verify mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from .errors import DomainError, FamilySpecError, ParseError
from .families import generate, parse_family
from .fractional import default_samples, fractional_k_dimension, grid_samples, sweep_phi
from .graph import Graph, pair_system, parse_edge_list, require_connected
from .integer import DEFAULT_GUARD, brute_force_k_metric_dimension, k_metric_dimension
from .lp import format_rational, parse_rational
from .verify import SCOPES, first_mismatch, run_scope

EXIT_OK, EXIT_IO, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3


def load_graph(args) -> tuple[Graph, dict]:
    if args.family is not None:
        return generate(parse_family(args.family)), {"family": args.family}
    text = Path(args.graph).read_text(encoding="utf-8")
    return parse_edge_list(text), {"graph": args.graph}


def _report(command: str, source: dict, result, started: float, mode: str) -> str:
    report = {
        "command": command,
        "input": source,
        "mode": mode,
        "result": result,
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }
    return json.dumps(report, indent=2)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def cmd_compute(args) -> int:
    started = time.perf_counter()
    g, source = load_graph(args)
    require_connected(g)
    k = parse_rational(args.k)
    if args.mode == "integer":
        if k.denominator != 1:
            raise DomainError(f"integer mode needs an integral k, got {k}")
        result = k_metric_dimension(g, int(k)).to_json()
    else:
        result = fractional_k_dimension(g, k).to_json()
    _emit(_report("compute", source, result, started, args.mode), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    g, _ = load_graph(args)
    ps = pair_system(g)
    if args.samples is not None:
        samples = [parse_rational(tok) for tok in args.samples.split(",") if tok.strip()]
    elif args.count is not None:
        samples = grid_samples(ps.kappa, args.count)
    else:
        samples = default_samples(ps.kappa)
    rows = sweep_phi(g, samples, ps)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "value"])
    for k, value in rows:
        writer.writerow([format_rational(k), format_rational(value)])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    g = generate(parse_family(args.family))
    _emit(f"# {args.family}\n" + g.to_edge_list(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = list(
        run_scope(args.scope, max_n=args.max_n, s=args.s, count=args.count, seed=args.seed)
    )
    rows = [("instance", "quantity", "k", "formula", "solved", "match")]
    rows += [c.row() for c in checks]
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    bad = first_mismatch(checks)
    summary = f"{len(checks)} checks, {sum(not c.match for c in checks)} mismatches"
    _emit("\n".join(lines + [summary]) + "\n", args.out)
    if bad is not None:
        print(
            f"mismatch: {bad.instance} {bad.quantity} k={bad.row()[2]} "
            f"formula={bad.row()[3]} solved={bad.row()[4]}",
            file=sys.stderr,
        )
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_oracle(args) -> int:
    started = time.perf_counter()
    g, source = load_graph(args)
    require_connected(g)
    k = parse_rational(args.k)
    if k.denominator != 1:
        raise DomainError(f"oracle needs an integral k, got {k}")
    result = brute_force_k_metric_dimension(g, int(k), size_cap=args.guard).to_json()
    _emit(_report("oracle", source, result, started, "exhaustive"), args.out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are parse errors; keep 2 for domain errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def _add_source(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="PATH", help="edge-list file")
    group.add_argument("--family", metavar="FAMILY", help="family string, e.g. grid:3x4")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mdim", description="Exact (fractional) k-metric dimension of graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="dim_f^k (fractional) or dim^k (integer)")
    _add_source(p)
    p.add_argument("--k", default="1", help="rational k in [1, kappa] (default 1)")
    p.add_argument("--mode", choices=("fractional", "integer"), default="fractional")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("sweep", help="tabulate k -> dim_f^k as CSV")
    _add_source(p)
    samples = p.add_mutually_exclusive_group()
    samples.add_argument("--samples", help="comma-separated rationals")
    samples.add_argument("--count", type=int, help="equally spaced samples over [1, kappa]")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("generate", help="write a family instance as an edge list")
    p.add_argument("--family", required=True, metavar="FAMILY")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="compare closed forms with solver output")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--max-n", type=int, default=10, help="vertex cap for sized families and random trees")
    p.add_argument("--s", type=int, default=2, help="leg length for the remark construction")
    p.add_argument("--count", type=int, default=30, help="number of random trees")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive dim^k for small graphs")
    _add_source(p)
    p.add_argument("--k", default="1")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="maximum vertex count")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ParseError, FamilySpecError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
