"""Phase-2 connectors: merge the components of a dominating set into one.

The main routine repeatedly adds the most cost-efficient *star* (a free
center node plus a subset of its free neighbors).  A star's value is a
capped merge count: the number of components its center touches, minus one,
plus one for each leaf (taken in nondecreasing cost order) that touches at
least one component not already reached by the star so far.  Capping each
leaf's contribution at one is what makes the most efficient star computable
in polynomial time: it is always attained by a prefix of the cheapest
single-component leaves, one per fresh component.

A deliberately weaker connector restricted to single nodes and adjacent
pairs is provided as a baseline; on the adversarial ladder family its cost
grows linearly with the rung count while the star connector stays near the
optimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .components import ComponentIndex
from .graph import Instance, WeightedGraph


@dataclass(frozen=True)
class StarCandidate:
    """A center with cost-ordered leaves, its merge value, and total cost."""

    center: int
    leaves: tuple[int, ...]
    gain: int
    total_cost: float

    @property
    def nodes(self) -> tuple[int, ...]:
        return (self.center, *self.leaves)

    @property
    def efficiency(self) -> float:
        return self.gain / self.total_cost


@dataclass
class ConnectReport:
    """Trace of a connector run: chosen stars and the component counts."""

    method: str
    stars: list[StarCandidate] = field(default_factory=list)
    connectors: set[int] = field(default_factory=set)
    initial_components: int = 1
    component_trace: list[int] = field(default_factory=list)

    @property
    def total_cost(self) -> float:
        return sum(star.total_cost for star in self.stars)


def component_neighbors(idx: ComponentIndex, graph: WeightedGraph, u: int) -> set[int]:
    """Roots of the distinct components of G[D] adjacent to u (u outside D)."""
    if u in idx:
        raise ValueError(f"node {u} already in the indexed set")
    return {idx.find(v) for v in graph.adjacency[u] if v in idx}


def merge_potential(idx: ComponentIndex, graph: WeightedGraph, center: int, leaves) -> int:
    """Capped merge count of the star (center, leaves) against the indexed set.

    Leaves must be outside the set, adjacent to the center, and sorted by
    nondecreasing cost.  Each leaf contributes one when it touches a
    component not already reached by the center or an earlier leaf; the
    index is not mutated.
    """
    center_adj = set(graph.adjacency[center])
    covered = component_neighbors(idx, graph, center)
    value = len(covered) - 1
    prev_cost = None
    for leaf in leaves:
        if leaf in idx:
            raise ValueError(f"star node {leaf} already in the indexed set")
        if leaf not in center_adj:
            raise ValueError(f"leaf {leaf} not adjacent to center {center}")
        if prev_cost is not None and graph.cost[leaf] < prev_cost:
            raise ValueError("leaves must be sorted by nondecreasing cost")
        prev_cost = graph.cost[leaf]
        reached = component_neighbors(idx, graph, leaf)
        if reached - covered:
            value += 1
        covered |= reached
    return value


def best_star_at(idx: ComponentIndex, graph: WeightedGraph, u: int) -> StarCandidate | None:
    """Most efficient star centered at u, or None when no star merges anything.

    Candidate leaves are the free neighbors touching exactly one component.
    Scanning them by (cost, id) and keeping only those whose component is
    still fresh, every prefix of the kept list is evaluated and the best
    gain/cost prefix with positive gain is returned.  Some globally optimal
    star always has this one-fresh-component-per-leaf shape, so the prefix
    scan attains the optimum over all leaf subsets.
    """
    cost = graph.cost
    center_neighbors = component_neighbors(idx, graph, u)
    eligible: list[tuple[float, int, int]] = []
    for v in graph.adjacency[u]:
        if v in idx:
            continue
        reached = component_neighbors(idx, graph, v)
        if len(reached) == 1:
            eligible.append((cost[v], v, next(iter(reached))))
    eligible.sort()
    kept: list[int] = []
    covered = set(center_neighbors)
    for leaf_cost, v, comp in eligible:
        if comp in covered:
            continue
        kept.append(v)
        covered.add(comp)

    best: StarCandidate | None = None
    gain = len(center_neighbors) - 1
    total = cost[u]
    for take in range(len(kept) + 1):
        if take > 0:
            total += cost[kept[take - 1]]
            gain += 1
        if gain < 1:
            continue
        cand = StarCandidate(center=u, leaves=tuple(kept[:take]), gain=gain, total_cost=total)
        if best is None:
            best = cand
        else:
            lhs = cand.gain * best.total_cost
            rhs = best.gain * cand.total_cost
            if lhs > rhs or (lhs == rhs and cand.gain > best.gain):
                best = cand
    return best


def _better_candidate(a: StarCandidate, b: StarCandidate) -> bool:
    """True when a beats b: efficiency, then gain, then center id, then size."""
    lhs = a.gain * b.total_cost
    rhs = b.gain * a.total_cost
    if lhs != rhs:
        return lhs > rhs
    if a.gain != b.gain:
        return a.gain > b.gain
    if a.center != b.center:
        return a.center < b.center
    return len(a.leaves) < len(b.leaves)


def _check_dominating(inst: Instance, members: set[int]) -> None:
    g = inst.graph
    for u in range(g.node_count):
        if u in members:
            continue
        if not any(v in members for v in g.adjacency[u]):
            raise ValueError(f"set is not dominating: node {u} has no neighbor inside")


def greedy_connect(inst: Instance, dominating_set) -> ConnectReport:
    """Connect a dominating set by repeatedly adding the most efficient star.

    Every chosen star merges exactly as many components as its value
    promises, so the component count drops to one in at most
    (initial components - 1) iterations.
    """
    ds = set(dominating_set)
    _check_dominating(inst, ds)
    graph = inst.graph
    idx = ComponentIndex(graph, sorted(ds))
    report = ConnectReport(method="star", initial_components=idx.component_count)
    while idx.component_count > 1:
        best: StarCandidate | None = None
        for u in range(graph.node_count):
            if u in idx:
                continue
            cand = best_star_at(idx, graph, u)
            if cand is not None and (best is None or _better_candidate(cand, best)):
                best = cand
        if best is None:
            raise RuntimeError("connector stalled: no star merges components")
        before = idx.component_count
        for node in best.nodes:
            idx.add(node)
            report.connectors.add(node)
        after = idx.component_count
        if before - after != best.gain:
            raise RuntimeError(
                f"selected star promised {best.gain} merges but delivered {before - after}"
            )
        report.stars.append(best)
        report.component_trace.append(after)
    return report


def pairwise_connect(inst: Instance, dominating_set) -> ConnectReport:
    """Baseline connector restricted to single nodes and adjacent pairs.

    Greedy on (components merged)/(cost) over all free singletons and free
    adjacent pairs.  Whenever the current set is dominating and disconnected,
    two nearest components are at most three hops apart, so some candidate
    always merges at least two of them.
    """
    ds = set(dominating_set)
    _check_dominating(inst, ds)
    graph = inst.graph
    cost = graph.cost
    idx = ComponentIndex(graph, sorted(ds))
    report = ConnectReport(method="pairwise", initial_components=idx.component_count)
    while idx.component_count > 1:
        best: StarCandidate | None = None
        for a in range(graph.node_count):
            if a in idx:
                continue
            reached_a = component_neighbors(idx, graph, a)
            gain = len(reached_a) - 1
            if gain >= 1:
                cand = StarCandidate(center=a, leaves=(), gain=gain, total_cost=cost[a])
                if best is None or _better_candidate(cand, best):
                    best = cand
            for b in graph.adjacency[a]:
                if b <= a or b in idx:
                    continue
                reached_b = component_neighbors(idx, graph, b)
                pair_gain = len(reached_a | reached_b) - 1
                if pair_gain >= 1:
                    cand = StarCandidate(
                        center=a, leaves=(b,), gain=pair_gain, total_cost=cost[a] + cost[b]
                    )
                    if best is None or _better_candidate(cand, best):
                        best = cand
        if best is None:
            raise RuntimeError("pairwise connector stalled: no candidate merges components")
        before = idx.component_count
        for node in best.nodes:
            idx.add(node)
            report.connectors.add(node)
        after = idx.component_count
        if before - after != best.gain:
            raise RuntimeError(
                f"selected pair promised {best.gain} merges but delivered {before - after}"
            )
        report.stars.append(best)
        report.component_trace.append(after)
    return report
