"""Exact minimum-cost solutions by branch and bound, plus ratio reporting.

The search decides nodes in id order (include branch first) and prunes on
accumulated cost against the incumbent and on domination feasibility: a
branch dies as soon as some excluded node can no longer collect m dominators
from the chosen and still-undecided nodes.  Connectivity is checked at the
leaves only.  Intended for desk-scale instances; the node budget guards
against accidental exponential blowups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Instance, components


DEFAULT_NODE_BUDGET = 16


class OracleBudgetError(ValueError):
    """Raised when an instance exceeds the exhaustive-search node budget."""


@dataclass(frozen=True)
class OracleResult:
    opt_set: tuple[int, ...]
    opt_cost: float
    nodes_explored: int
    exhausted: bool


def harmonic(k: int) -> float:
    """Harmonic number H(k) = sum of 1/i for i in 1..k, with H(k)=0 for k <= 0."""
    return sum(1.0 / i for i in range(1, k + 1)) if k > 0 else 0.0


def exact_minimum_cds(inst: Instance, node_budget: int = DEFAULT_NODE_BUDGET) -> OracleResult:
    """Provably minimum-cost connected m-fold dominating set."""
    return _exact_search(inst, node_budget, require_connected=True)


def exact_minimum_mds(inst: Instance, node_budget: int = DEFAULT_NODE_BUDGET) -> OracleResult:
    """Provably minimum-cost m-fold dominating set (connectivity not required)."""
    return _exact_search(inst, node_budget, require_connected=False)


def _exact_search(inst: Instance, node_budget: int, require_connected: bool) -> OracleResult:
    g = inst.graph
    n = g.node_count
    if n > node_budget:
        raise OracleBudgetError(f"instance too large for oracle: {n} nodes > budget {node_budget}")
    adj = g.adjacency
    cost = g.cost
    m = inst.m

    # the whole node set is feasible for both variants (G is connected)
    best_cost = sum(cost)
    best_set = tuple(range(n))
    explored = 0

    UNDECIDED, IN, OUT = 0, 1, 2
    status = [UNDECIDED] * n
    chosen_nbrs = [0] * n
    undecided_nbrs = [g.degree(u) for u in range(n)]

    def feasible_out(u: int) -> bool:
        return chosen_nbrs[u] + undecided_nbrs[u] >= m

    def rec(i: int, cost_so_far: float) -> None:
        nonlocal best_cost, best_set, explored
        explored += 1
        if cost_so_far >= best_cost:
            return
        if i == n:
            chosen = [u for u in range(n) if status[u] == IN]
            if any(status[u] == OUT and chosen_nbrs[u] < m for u in range(n)):
                return
            if require_connected:
                if not chosen or len(components(g, chosen)) != 1:
                    return
            best_cost = cost_so_far
            best_set = tuple(chosen)
            return

        status[i] = IN
        for w in adj[i]:
            undecided_nbrs[w] -= 1
            chosen_nbrs[w] += 1
        rec(i + 1, cost_so_far + cost[i])
        for w in adj[i]:
            undecided_nbrs[w] += 1
            chosen_nbrs[w] -= 1

        status[i] = OUT
        for w in adj[i]:
            undecided_nbrs[w] -= 1
        viable = feasible_out(i) and all(
            feasible_out(w) for w in adj[i] if status[w] == OUT
        )
        if viable:
            rec(i + 1, cost_so_far)
        for w in adj[i]:
            undecided_nbrs[w] += 1
        status[i] = UNDECIDED

    rec(0, 0.0)
    return OracleResult(
        opt_set=best_set, opt_cost=best_cost, nodes_explored=explored, exhausted=True
    )


@dataclass(frozen=True)
class RatioRecord:
    """Observed cost ratios against the exact optima, with the matching bounds.

    Bounds follow the two greedy phases: H(delta+m) for the dominating set
    against the unconstrained optimum, 2*H(delta-1) for the connectors
    against the connected optimum, and their sum for the whole solution.
    For unit-disk instances the connector bound tightens to 2*H(3) = 11/3.
    """

    delta: int
    opt_cost: float
    opt_mds_cost: float
    ratio_d1: float
    ratio_d2: float
    ratio_total: float
    bound_d1: float
    bound_d2: float
    bound_total: float
    udg_bound_d2: float | None


def ratio_report(
    inst: Instance,
    cost_d1: float,
    cost_d2: float,
    cost_total: float,
    opt_cds: OracleResult,
    opt_mds: OracleResult,
) -> RatioRecord:
    if not (opt_cds.exhausted and opt_mds.exhausted):
        raise ValueError("oracle incomplete")
    delta = inst.graph.max_degree
    bound_d1 = harmonic(delta + inst.m)
    bound_d2 = 2.0 * harmonic(delta - 1)
    return RatioRecord(
        delta=delta,
        opt_cost=opt_cds.opt_cost,
        opt_mds_cost=opt_mds.opt_cost,
        ratio_d1=cost_d1 / opt_mds.opt_cost,
        ratio_d2=cost_d2 / opt_cds.opt_cost,
        ratio_total=cost_total / opt_cds.opt_cost,
        bound_d1=bound_d1,
        bound_d2=bound_d2,
        bound_total=bound_d1 + bound_d2,
        udg_bound_d2=2.0 * harmonic(3) if inst.graph.coords is not None else None,
    )
