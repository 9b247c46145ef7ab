"""Batch benchmark harness: run solver corpora and check the proven bounds.

A batch spec is a JSON document:

    {"entries": [
        {"kind": "random", "n": 10, "p": 0.3, "m": [1, 2],
         "seeds": {"start": 0, "count": 25},
         "cost_lo": 0.1, "cost_hi": 10.0, "oracle": true},
        {"kind": "udg", "n": 12, "side": 3.0, "m": 1,
         "seeds": {"start": 0, "count": 50}, "oracle": true},
        {"kind": "fig1", "d": 3, "eps": 0.01, "oracle": true}
    ]}

Each entry expands to one case per (m, seed) combination, solved in a worker
pool (width from CDS_OPT_THREADS or the --threads flag) and merged back in
deterministic case order.  Any instance whose costs exceed a proven bound is
flagged as a violation: that would falsify the implementation, not the
theorems.
"""

from __future__ import annotations

import csv
import json
import os
from concurrent.futures import ProcessPoolExecutor

from .generators import gen_fig1, gen_random_connected, gen_udg
from .oracle import DEFAULT_NODE_BUDGET, harmonic
from .solver import solve

CSV_COLUMNS = [
    "label",
    "n",
    "edges",
    "m",
    "delta",
    "cost_d1",
    "cost_d2",
    "cost_total",
    "opt",
    "opt_mds",
    "ratio_total",
    "bound_total",
    "udg",
    "violation",
]

# float slack for bound comparisons: the proven inequalities are exact, the
# comparison operands are products of floats
BOUND_EPS = 1e-9


def load_batch_spec(text: str) -> list[dict]:
    """Parse and expand a batch spec into a deterministic list of cases."""
    doc = json.loads(text)
    if not isinstance(doc, dict) or "entries" not in doc or not isinstance(doc["entries"], list):
        raise ValueError("batch spec must be an object with an 'entries' list")
    cases: list[dict] = []
    for pos, entry in enumerate(doc["entries"]):
        if not isinstance(entry, dict):
            raise ValueError(f"entry {pos} must be an object")
        kind = entry.get("kind")
        if kind not in ("random", "udg", "fig1"):
            raise ValueError(f"entry {pos}: unknown kind {kind!r}")
        m_values = entry.get("m", 1)
        if isinstance(m_values, int):
            m_values = [m_values]
        seeds_spec = entry.get("seeds", {"start": 0, "count": 1})
        seed_start = int(seeds_spec.get("start", 0))
        seed_count = int(seeds_spec.get("count", 1))
        oracle = bool(entry.get("oracle", False))
        node_budget = int(entry.get("node_budget", DEFAULT_NODE_BUDGET))
        for m in m_values:
            if int(m) < 1:
                raise ValueError(f"entry {pos}: m must be >= 1")
            for seed in range(seed_start, seed_start + seed_count):
                case = {
                    "kind": kind,
                    "m": int(m),
                    "seed": seed,
                    "oracle": oracle,
                    "node_budget": node_budget,
                }
                if kind == "random":
                    case.update(
                        n=int(entry["n"]),
                        p=float(entry["p"]),
                        cost_lo=float(entry.get("cost_lo", 0.1)),
                        cost_hi=float(entry.get("cost_hi", 10.0)),
                    )
                elif kind == "udg":
                    case.update(
                        n=int(entry["n"]),
                        side=float(entry["side"]),
                        cost_lo=float(entry.get("cost_lo", 0.1)),
                        cost_hi=float(entry.get("cost_hi", 10.0)),
                    )
                else:
                    case.update(d=int(entry["d"]), eps=float(entry["eps"]))
                cases.append(case)
    return cases


def build_case_instance(case: dict):
    kind = case["kind"]
    if kind == "random":
        return gen_random_connected(
            case["n"], case["p"], (case["cost_lo"], case["cost_hi"]), case["seed"], m=case["m"]
        )
    if kind == "udg":
        return gen_udg(
            case["n"], case["side"], (case["cost_lo"], case["cost_hi"]), case["seed"], m=case["m"]
        )
    return gen_fig1(case["d"], case["eps"], m=case["m"])[0]


def run_case(case: dict) -> dict:
    """Solve one case and evaluate every applicable bound.  Picklable worker."""
    inst = build_case_instance(case)
    result = solve(
        inst,
        with_oracle=case["oracle"],
        node_budget=case["node_budget"],
    )
    g = inst.graph
    delta = g.max_degree
    bound_total = harmonic(delta + inst.m) + 2.0 * harmonic(delta - 1)
    is_udg = g.coords is not None
    problems: list[str] = []
    if not result.verify_report.is_cds:
        problems.append("output failed verification")
    opt = opt_mds = ratio_total = None
    if result.ratios is not None:
        r = result.ratios
        opt, opt_mds = r.opt_cost, r.opt_mds_cost
        ratio_total = r.ratio_total
        if result.cost_total > bound_total * opt + BOUND_EPS:
            problems.append("total cost exceeds (H(delta+m)+2H(delta-1))*opt")
        if result.cost_d1 > r.bound_d1 * opt_mds + BOUND_EPS:
            problems.append("d1 cost exceeds H(delta+m)*opt_mds")
        if result.cost_d2 > r.bound_d2 * opt + BOUND_EPS:
            problems.append("d2 cost exceeds 2H(delta-1)*opt")
        if is_udg and result.cost_d2 > (11.0 / 3.0) * opt + BOUND_EPS:
            problems.append("d2 cost exceeds (11/3)*opt on UDG")
    return {
        "label": inst.label,
        "n": g.node_count,
        "edges": g.edge_count,
        "m": inst.m,
        "delta": delta,
        "cost_d1": result.cost_d1,
        "cost_d2": result.cost_d2,
        "cost_total": result.cost_total,
        "opt": opt,
        "opt_mds": opt_mds,
        "ratio_total": ratio_total,
        "bound_total": bound_total,
        "udg": is_udg,
        "violation": "; ".join(problems),
    }


def pool_width(requested: int | None = None) -> int:
    """Worker count: CDS_OPT_THREADS overrides any requested width."""
    env = os.environ.get("CDS_OPT_THREADS")
    if env is not None:
        return max(1, int(env))
    return max(1, requested or 1)


def run_batch(cases: list[dict], threads: int | None = None) -> list[dict]:
    width = pool_width(threads)
    if width == 1 or len(cases) <= 1:
        return [run_case(case) for case in cases]
    with ProcessPoolExecutor(max_workers=width) as pool:
        return list(pool.map(run_case, cases))


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def write_csv(rows: list[dict], fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_cell(row[col]) for col in CSV_COLUMNS])


def summarize(rows: list[dict]) -> dict:
    ratios = [row["ratio_total"] for row in rows if row["ratio_total"] is not None]
    return {
        "schema": 1,
        "rows": len(rows),
        "violations": sum(1 for row in rows if row["violation"]),
        "max_ratio_total": max(ratios) if ratios else None,
        "mean_ratio_total": sum(ratios) / len(ratios) if ratios else None,
    }
