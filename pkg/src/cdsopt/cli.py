"""Command line front end: ``cds-opt {solve|gen|verify|bench}``.

Exit codes: 0 success (for verify: solution valid; for bench: no bound
violations), 1 failed verification / bound violation, 2 bad input
(malformed instance, out-of-range ids, invalid parameters), 3 internal
verification failure of a freshly computed solution (a solver bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import load_batch_spec, run_batch, summarize, write_csv
from .generators import gen_fig1, gen_random_connected, gen_udg
from .graph import Instance, InstanceError, parse_instance, serialize_instance
from .oracle import DEFAULT_NODE_BUDGET, OracleBudgetError
from .solver import solve, solve_report_dict, verify_report_dict
from .verify import verify_cds

EMBEDDED_DS = "@embedded"
DESIGNATED_PREFIX = "# designated-ds:"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cds-opt",
        description="Minimum-weight connected m-fold dominating set toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve an instance and emit a JSON report")
    p_solve.add_argument("instance", help="instance file path")
    p_solve.add_argument(
        "--given-ds",
        nargs="?",
        const=EMBEDDED_DS,
        default=None,
        metavar="SPEC",
        help="connect this dominating set instead of running the greedy cover; "
        "SPEC is a node-id file or an inline id list, and without a value the "
        "'# designated-ds:' comment of the instance file is used",
    )
    p_solve.add_argument(
        "--baseline",
        choices=["star", "pairwise"],
        default="star",
        help="connector to use (default: star greedy)",
    )
    p_solve.add_argument("--oracle", action="store_true", help="also compute exact optima and ratios")
    p_solve.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p_solve.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    p_solve.add_argument("--no-timing", action="store_true", help="omit timings for byte-stable reports")

    p_gen = sub.add_parser("gen", help="generate an instance file")
    gen_sub = p_gen.add_subparsers(dest="kind", required=True)
    g_random = gen_sub.add_parser("random", help="random connected graph")
    g_random.add_argument("--n", type=int, required=True)
    g_random.add_argument("--p", type=float, required=True)
    g_random.add_argument("--seed", type=int, required=True)
    g_random.add_argument("--m", type=int, default=1)
    g_random.add_argument("--cost-lo", type=float, default=0.1)
    g_random.add_argument("--cost-hi", type=float, default=10.0)
    g_random.add_argument("--out", default=None)
    g_udg = gen_sub.add_parser("udg", help="random connected unit-disk graph")
    g_udg.add_argument("--n", type=int, required=True)
    g_udg.add_argument("--side", type=float, required=True)
    g_udg.add_argument("--seed", type=int, required=True)
    g_udg.add_argument("--m", type=int, default=1)
    g_udg.add_argument("--cost-lo", type=float, default=0.1)
    g_udg.add_argument("--cost-hi", type=float, default=10.0)
    g_udg.add_argument("--out", default=None)
    g_fig1 = gen_sub.add_parser("fig1", help="adversarial ladder with a designated dominating set")
    g_fig1.add_argument("--d", type=int, required=True)
    g_fig1.add_argument("--eps", type=float, required=True)
    g_fig1.add_argument("--m", type=int, default=1)
    g_fig1.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="verify a solution file against an instance")
    p_verify.add_argument("instance")
    p_verify.add_argument("solution", help="file of whitespace-separated node ids")

    p_bench = sub.add_parser("bench", help="run a batch spec and emit CSV + JSON summary")
    p_bench.add_argument("batch", help="batch spec JSON file")
    p_bench.add_argument("--out-csv", default=None, help="CSV output path (default stdout)")
    p_bench.add_argument("--out-json", default=None, help="JSON summary path (default stdout)")
    p_bench.add_argument("--threads", type=int, default=1, help="worker pool width (CDS_OPT_THREADS overrides)")
    return parser


def _read_instance(path: str) -> tuple[Instance, str]:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_instance(text), text


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_id_list(text: str) -> list[int]:
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("empty node id list")
    return [int(tok) for tok in tokens]


def _resolve_given_ds(spec: str, instance_text: str) -> list[int]:
    import os

    if spec == EMBEDDED_DS:
        for raw in instance_text.splitlines():
            line = raw.strip()
            if line.startswith(DESIGNATED_PREFIX):
                return _parse_id_list(line[len(DESIGNATED_PREFIX):])
        raise ValueError("instance file carries no '# designated-ds:' comment")
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            return _parse_id_list(fh.read())
    return _parse_id_list(spec)


def cmd_solve(args) -> int:
    inst, text = _read_instance(args.instance)
    given = None
    if args.given_ds is not None:
        given = _resolve_given_ds(args.given_ds, text)
        n = inst.graph.node_count
        for u in given:
            if not 0 <= u < n:
                raise ValueError(f"given-ds node id {u} out of range 0..{n - 1}")
    result = solve(
        inst,
        given_ds=given,
        connector=args.baseline,
        with_oracle=args.oracle,
        node_budget=args.node_budget,
    )
    doc = solve_report_dict(result, include_timings=not args.no_timing)
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0 if result.verify_report.is_cds else 3


def cmd_gen(args) -> int:
    if args.kind == "random":
        inst = gen_random_connected(
            args.n, args.p, (args.cost_lo, args.cost_hi), args.seed, m=args.m
        )
        text = serialize_instance(inst)
    elif args.kind == "udg":
        inst = gen_udg(args.n, args.side, (args.cost_lo, args.cost_hi), args.seed, m=args.m)
        text = serialize_instance(inst)
    else:
        inst, designated = gen_fig1(args.d, args.eps, m=args.m)
        lines = serialize_instance(inst).splitlines()
        ds_comment = f"{DESIGNATED_PREFIX} {' '.join(str(u) for u in sorted(designated))}"
        lines.insert(1, ds_comment)
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    inst, _ = _read_instance(args.instance)
    with open(args.solution, "r", encoding="utf-8") as fh:
        ids = _parse_id_list(fh.read())
    n = inst.graph.node_count
    for u in ids:
        if not 0 <= u < n:
            raise ValueError(f"node id {u} out of range 0..{n - 1}")
    report = verify_cds(inst, ids)
    sys.stdout.write(json.dumps(verify_report_dict(report), indent=2) + "\n")
    return 0 if report.is_cds else 1


def cmd_bench(args) -> int:
    with open(args.batch, "r", encoding="utf-8") as fh:
        cases = load_batch_spec(fh.read())
    rows = run_batch(cases, threads=args.threads)
    import io

    buf = io.StringIO()
    write_csv(rows, buf)
    _emit(buf.getvalue(), args.out_csv)
    summary = summarize(rows)
    _emit(json.dumps(summary, indent=2) + "\n", args.out_json)
    return 1 if summary["violations"] else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "solve": cmd_solve,
        "gen": cmd_gen,
        "verify": cmd_verify,
        "bench": cmd_bench,
    }[args.command]
    try:
        return handler(args)
    except (InstanceError, OracleBudgetError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
