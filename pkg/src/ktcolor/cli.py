"""Command line: ``ktcolor {gen,run,verify,experiment}``.

Exit status is 0 on success, 1 on a runtime or verification failure and 2 on
a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import generators
from .arith import RationalError, parse
from .clique import omega
from .colorers import canonical_name, run
from .model import InstanceError, load, load_result, save, save_result
from .verify import NotApplicableError, check

CSV_COLUMNS = ["x", "n", "omega", "kt_colors", "ff_colors", "opt_colors", "kt_bound", "kt_tight"]
_COLUMN_OF = {"kt": "kt_colors", "first_fit": "ff_colors", "offline_optimal": "opt_colors"}


class CommandError(Exception):
    """Runtime failure reported on stderr with exit status 1."""


def _rational_arg(text):
    try:
        return parse(text)
    except RationalError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _x_range(text):
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI (inclusive), got {text!r}") from None


def _algos(text):
    try:
        names = [canonical_name(a.strip()) for a in text.split(",") if a.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return list(dict.fromkeys(names))


def cmd_gen(args, parser):
    try:
        if args.kind == "theorem2":
            if args.x is None:
                parser.error("gen theorem2 needs --x")
            instance = generators.gen_theorem2(args.x)
        elif args.kind == "random-unit":
            instance = generators.gen_random_unit(args.n, args.seed, args.span, args.denominator)
        else:
            instance = generators.gen_random_general(
                args.n, args.seed, args.span, args.max_len, args.denominator)
    except generators.ParameterError as exc:
        parser.error(str(exc))
    save(instance, args.output)
    print(f"n={len(instance)} omega={omega(instance).size}")


def cmd_run(args, parser):
    instance = load(args.input)
    trace = [] if args.trace else None
    result = run(args.algorithm, instance, trace)
    if args.output:
        save_result(result, args.output)
    if args.trace:
        Path(args.trace).write_text(
            "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in trace), encoding="utf-8")
    print(result.distinct_colors)


def cmd_verify(args, parser):
    instance = load(args.input)
    result = load_result(args.result)
    report = check(instance, result)
    sys.stdout.write(report.to_json())
    if not report.ok:
        raise CommandError("; ".join(report.failures()))


def experiment_row(x, algos):
    """One CSV row for the tight instance with parameter ``x``; raises on a failed check."""
    instance = generators.gen_theorem2(x)
    w = omega(instance).size
    row = dict.fromkeys(CSV_COLUMNS, "")
    row.update(x=x, n=len(instance), omega=w)
    for name in algos:
        result = run(name, instance)
        report = check(instance, result)
        if not report.ok:
            raise CommandError(f"x={x} {name}: " + "; ".join(report.failures()))
        row[_COLUMN_OF[name]] = result.distinct_colors
        if name == "kt":
            row["kt_bound"] = max(1, 3 * w - 3)
            row["kt_tight"] = "true" if result.distinct_colors == 3 * x - 3 else "false"
    return row


def _experiment_job(job):
    return experiment_row(*job)


def experiment_csv(xs, algos, jobs=1) -> str:
    work = [(x, algos) for x in xs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_experiment_job, work))  # map keeps x order
    else:
        rows = [_experiment_job(job) for job in work]
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return out.getvalue()


def cmd_experiment(args, parser):
    if any(x < 3 for x in args.x_range):
        parser.error("every x in --x-range must be >= 3")
    text = experiment_csv(args.x_range, args.algos, args.jobs)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ktcolor", description="Online interval coloring: Kierstead-Trotter and baselines.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance file (JSON Lines)")
    gen.add_argument("kind", choices=["theorem2", "random-unit", "random-general"])
    gen.add_argument("--x", type=int, help="clique number of the tight instance (>= 3)")
    gen.add_argument("--n", type=int, default=100)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--span", type=_rational_arg, default=parse("100"))
    gen.add_argument("--max-len", type=_rational_arg, default=parse("3"))
    gen.add_argument("--denominator", type=int, default=1000)
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=cmd_gen)

    run_ = sub.add_parser("run", help="color an instance")
    run_.add_argument("algorithm", choices=sorted({"kt", "ff", "opt", "first_fit", "offline_optimal"}))
    run_.add_argument("-i", "--input", required=True)
    run_.add_argument("-o", "--output", help="write the coloring as JSON")
    run_.add_argument("--trace", help="per-arrival KT trace (JSON Lines)")
    run_.set_defaults(func=cmd_run)

    ver = sub.add_parser("verify", help="check a coloring against its instance")
    ver.add_argument("-i", "--input", required=True)
    ver.add_argument("-r", "--result", required=True)
    ver.set_defaults(func=cmd_verify)

    exp = sub.add_parser("experiment", help="sweep the tight instance over a range of x")
    exp.add_argument("--x-range", type=_x_range, required=True, help="inclusive, e.g. 3:40")
    exp.add_argument("--algos", type=_algos, default=["kt", "first_fit", "offline_optimal"])
    exp.add_argument("--jobs", type=int, default=1)
    exp.add_argument("-o", "--output", help="CSV path (default: stdout)")
    exp.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, parser)
    except (CommandError, InstanceError, NotApplicableError, OSError, ValueError) as exc:
        print(f"ktcolor: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
