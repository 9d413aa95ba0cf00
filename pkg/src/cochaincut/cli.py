"""Command-line front end.

Subcommands:
    solve        read an instance file, print the maximum cut size
    closed-form  optimum of a twin-free skeleton from the block formula
    generate     write seeded random instance files
    bench        time the solver over a size ladder and fit the exponent

Output is line-oriented "key: value" text; --json switches to a single
JSON object per run.  Exit codes are part of the contract: 0 success,
1 unreadable or malformed input, 2 recognition rejection, 3 oracle budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from . import dp, oracle
from .formats import (
    ParseError,
    format_chain_form,
    format_edge_list,
    parse_chain_form,
    parse_edge_list,
)
from .forms import ChainForm, cut_size, edge_count
from .generators import GenSpec, SplitMix64, random_chain_forms
from .graphs import Rejection, expand, normalize
from .twinfree import closed_form_optimum, pattern_search, skeleton

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_REJECTED = 2
EXIT_BUDGET = 3


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report))
        return
    for key, value in report.items():
        if isinstance(value, dict):
            for sub, val in value.items():
                print(f"{key}_{sub}: {val}")
        elif isinstance(value, (list, tuple)):
            print(f"{key}: {' '.join(str(v) for v in value)}")
        else:
            print(f"{key}: {value}")


def _sniff_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line.startswith("m:"):
            return "chainform"
    return "edgelist"


def _load_instance(path: str, fmt: str) -> tuple[ChainForm, dict] | Rejection:
    text = Path(path).read_text()
    if fmt == "auto":
        fmt = _sniff_format(text)
    if fmt == "chainform":
        form = parse_chain_form(text)
        return form, {"instance": path, "format": "chainform"}
    g = parse_edge_list(text)
    result = normalize(g)
    if isinstance(result, Rejection):
        return result
    return result.form, {"instance": path, "format": "edgelist"}


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        loaded = _load_instance(args.path, args.format)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if isinstance(loaded, Rejection):
        print(f"rejected: {loaded.stage}", file=sys.stderr)
        if loaded.detail:
            print(f"detail: {loaded.detail}", file=sys.stderr)
        return EXIT_REJECTED
    form, report = loaded

    start = time.perf_counter()
    solution = dp.solve(form)
    elapsed = time.perf_counter() - start
    # The solver re-checks its own certificate; this check guards the output path.
    if cut_size(form, solution.cut) != solution.size:
        raise RuntimeError("certificate does not re-evaluate to the printed size")

    report.update(
        {
            "n": form.total,
            "k": form.k,
            "edges": edge_count(form),
            "algorithm": "dp",
            "size": solution.size,
            "wall_time_s": round(elapsed, 6),
        }
    )
    if args.certify:
        report["certificate_s"] = list(solution.cut.s)
        report["certificate_sp"] = list(solution.cut.s_prime)
    if args.oracle:
        try:
            confirmed = oracle.brute_force_multiplicity(form, limit=args.oracle_limit)
        except oracle.BudgetExceededError as exc:
            print(f"oracle budget exceeded: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        agrees = confirmed.size == solution.size
        report["oracle"] = {
            "size": confirmed.size,
            "states": confirmed.states_examined,
            "verdict": "OK" if agrees else "MISMATCH",
        }
        report["summary"] = (
            f"dp={solution.size} oracle={confirmed.size} {'OK' if agrees else 'MISMATCH'}"
        )
        if not agrees:
            _emit(report, args.json)
            raise RuntimeError("dp and oracle disagree; this is a bug")
    _emit(report, args.json)
    return EXIT_OK


def cmd_closed_form(args: argparse.Namespace) -> int:
    if args.k < 1:
        print("error: k must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    pattern, value = closed_form_optimum(args.k, trimmed=args.trimmed)
    searched_pattern, searched = pattern_search(args.k, trimmed=args.trimmed)
    if searched != value:
        raise RuntimeError(
            f"closed form {value} disagrees with exhaustive pattern search {searched}"
        )
    report = {
        "k": args.k,
        "variant": "trimmed" if args.trimmed else "full",
        "pattern": [pattern.x, pattern.y, pattern.z, pattern.t],
        "value": value,
        "ratio_to_k2": round(value / args.k**2, 6),
        "search": f"{searched} OK",
    }
    _emit(report, args.json)
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    mult_range = (1, 1) if args.twin_free else (args.mult_min, args.mult_max)
    try:
        spec = GenSpec(
            k_range=(args.k_min, args.k_max),
            multiplicity_range=mult_range,
            seed=args.seed,
            trimmed_weight=args.trimmed_weight,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for idx, form in enumerate(random_chain_forms(spec, args.count)):
            if args.format == "chainform":
                path = out_dir / f"instance_{idx:04d}.chain"
                path.write_text(format_chain_form(form))
            else:
                path = out_dir / f"instance_{idx:04d}.edges"
                path.write_text(format_edge_list(expand(form)))
            print(f"wrote: {path}")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


def run_bench(sizes: list[int], repeats: int = 3) -> dict:
    """Time solve() on all-ones skeletons of the given vertex counts.

    Returns per-size best wall times and the least-squares slope of
    log(time) against log(n), the empirical growth exponent.
    """
    rows = []
    for n in sizes:
        if n < 4 or n % 2:
            raise ValueError("bench sizes must be even and at least 4")
        form = skeleton(n // 2 - 1)
        best = math.inf
        size = None
        for _ in range(repeats):
            start = time.perf_counter()
            solution = dp.solve(form)
            best = min(best, time.perf_counter() - start)
            size = solution.size
        rows.append({"n": n, "size": size, "best_time_s": best})
    exponent = None
    if len(rows) >= 2:
        logs_n = [math.log(r["n"]) for r in rows]
        logs_t = [math.log(max(r["best_time_s"], 1e-9)) for r in rows]
        mean_n = sum(logs_n) / len(logs_n)
        mean_t = sum(logs_t) / len(logs_t)
        num = sum((a - mean_n) * (b - mean_t) for a, b in zip(logs_n, logs_t))
        den = sum((a - mean_n) ** 2 for a in logs_n)
        exponent = num / den
    return {"rows": rows, "fitted_exponent": exponent, "repeats": repeats}


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
        result = run_bench(sizes, repeats=args.repeats)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.json:
        print(json.dumps(result))
        return EXIT_OK
    for row in result["rows"]:
        print(f"n: {row['n']}  size: {row['size']}  best_time_s: {row['best_time_s']:.6f}")
    exponent = result["fitted_exponent"]
    if exponent is not None:
        print(f"fitted_exponent: {exponent:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cochaincut",
        description="Exact maximum cut for co-bipartite chain graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance file")
    p_solve.add_argument("path", help="edge-list or chain-form file")
    p_solve.add_argument(
        "--format", choices=("auto", "edgelist", "chainform"), default="auto"
    )
    p_solve.add_argument("--certify", action="store_true", help="print the witness cut")
    p_solve.add_argument(
        "--oracle", action="store_true", help="confirm by brute-force enumeration"
    )
    p_solve.add_argument(
        "--oracle-limit",
        type=int,
        default=oracle.DEFAULT_MULTIPLICITY_LIMIT,
        help="state budget for --oracle",
    )
    p_solve.add_argument("--json", action="store_true")
    p_solve.set_defaults(func=cmd_solve)

    p_cf = sub.add_parser("closed-form", help="twin-free skeleton optimum")
    p_cf.add_argument("k", type=int)
    p_cf.add_argument(
        "--trimmed", action="store_true", help="skeleton without the last primed vertex"
    )
    p_cf.add_argument("--json", action="store_true")
    p_cf.set_defaults(func=cmd_closed_form)

    p_gen = sub.add_parser("generate", help="write seeded random instances")
    p_gen.add_argument("--seed", type=int, default=1)
    p_gen.add_argument("--count", type=int, default=10)
    p_gen.add_argument("--k-min", type=int, default=0)
    p_gen.add_argument("--k-max", type=int, default=6)
    p_gen.add_argument("--mult-min", type=int, default=1)
    p_gen.add_argument("--mult-max", type=int, default=4)
    p_gen.add_argument("--trimmed-weight", type=float, default=0.25)
    p_gen.add_argument(
        "--twin-free", action="store_true", help="force all multiplicities to 1"
    )
    p_gen.add_argument("--format", choices=("chainform", "edgelist"), default="chainform")
    p_gen.add_argument("--out", default=".")
    p_gen.set_defaults(func=cmd_generate)

    p_bench = sub.add_parser("bench", help="timing ladder for the solver")
    p_bench.add_argument("--sizes", default="64,128,256", help="comma-separated vertex counts")
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.add_argument("--json", action="store_true")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
