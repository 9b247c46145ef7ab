"""Shared test utilities: small instance builders and independent oracles.

The oracle implementations here deliberately avoid the library's incremental
data structures: components come from a plain BFS labeling, star values from
literal formula evaluation or full per-prefix rebuilds, and optima from
unpruned subset enumeration.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from cdsopt.graph import Instance, WeightedGraph


def make_instance(n, edges, costs=None, m=1, coords=None, label="") -> Instance:
    if costs is None:
        costs = [1.0] * n
    graph = WeightedGraph.from_edges(n, list(edges), costs, coords=coords)
    return Instance(graph=graph, m=m, label=label)


def path_instance(k, m=1, costs=None) -> Instance:
    return make_instance(k, [(i, i + 1) for i in range(k - 1)], costs=costs, m=m)


def cycle_instance(k, m=1, costs=None) -> Instance:
    edges = [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]
    return make_instance(k, edges, costs=costs, m=m)


def complete_instance(k, m=1, costs=None) -> Instance:
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    return make_instance(k, edges, costs=costs, m=m)


def star_instance(leaf_count, m=1, costs=None) -> Instance:
    return make_instance(leaf_count + 1, [(0, i) for i in range(1, leaf_count + 1)], costs=costs, m=m)


# ---------------------------------------------------------------------------
# independent component oracles


def bfs_component_labels(graph: WeightedGraph, members) -> dict[int, int]:
    """Label each member with its component id within the induced subgraph."""
    member_set = set(members)
    labels: dict[int, int] = {}
    next_label = 0
    for start in sorted(member_set):
        if start in labels:
            continue
        stack = [start]
        labels[start] = next_label
        while stack:
            u = stack.pop()
            for v in graph.adjacency[u]:
                if v in member_set and v not in labels:
                    labels[v] = next_label
                    stack.append(v)
        next_label += 1
    return labels


def bfs_component_count(graph: WeightedGraph, members) -> int:
    labels = bfs_component_labels(graph, members)
    return len(set(labels.values()))


# ---------------------------------------------------------------------------
# independent star-value oracles


def simulate_star_value(graph: WeightedGraph, members, center, leaves) -> int:
    """Literal star value with components rebuilt from scratch at each prefix."""
    member_set = set(members)
    labels = bfs_component_labels(graph, member_set)
    center_comps = {labels[v] for v in graph.adjacency[center] if v in member_set}
    value = len(center_comps) - 1
    current = set(member_set) | {center}
    prev = bfs_component_count(graph, current)
    for leaf in leaves:
        current.add(leaf)
        now = bfs_component_count(graph, current)
        value += min(1, prev - now)
        prev = now
    return value


def formula_star_value(graph: WeightedGraph, members, center, leaves) -> tuple[int, float]:
    """Star value via the capped fresh-component recurrence on BFS labels.

    Returns (value, cost) with the cost summed in leaf order so it is
    bit-identical to a library candidate built from the same star.
    """
    member_set = set(members)
    labels = bfs_component_labels(graph, member_set)

    def comps_of(node):
        return {labels[v] for v in graph.adjacency[node] if v in member_set}

    covered = comps_of(center)
    value = len(covered) - 1
    cost = graph.cost[center]
    for leaf in leaves:
        reached = comps_of(leaf)
        if reached - covered:
            value += 1
        covered |= reached
        cost += graph.cost[leaf]
    return value, cost


def brute_force_best_star(graph: WeightedGraph, members, center):
    """Exhaustive best efficiency over every leaf subset of the center.

    Leaves of each subset are taken in (cost, id) order.  Returns the best
    efficiency as an exact Fraction, or None when no subset has value >= 1.
    """
    member_set = set(members)
    free = [v for v in graph.adjacency[center] if v not in member_set]
    free.sort(key=lambda v: (graph.cost[v], v))
    best: Fraction | None = None
    for size in range(len(free) + 1):
        for subset in combinations(free, size):
            value, cost = formula_star_value(graph, member_set, center, subset)
            if value < 1:
                continue
            eff = Fraction(value) / Fraction(cost)
            if best is None or eff > best:
                best = eff
    return best


# ---------------------------------------------------------------------------
# unpruned exact optimization


def _dominates(graph: WeightedGraph, member_set, m) -> bool:
    for u in range(graph.node_count):
        if u in member_set:
            continue
        if sum(1 for v in graph.adjacency[u] if v in member_set) < m:
            return False
    return True


def exhaustive_minimum(inst: Instance, require_connected: bool):
    """Minimum-cost (connected) m-fold dominating set by full subset scan."""
    g = inst.graph
    n = g.node_count
    best_cost = None
    best_set = None
    for mask in range(1, 1 << n):
        members = {u for u in range(n) if mask >> u & 1}
        if not _dominates(g, members, inst.m):
            continue
        if require_connected and bfs_component_count(g, members) != 1:
            continue
        cost = sum(g.cost[u] for u in members)
        if best_cost is None or cost < best_cost:
            best_cost, best_set = cost, members
    return best_cost, best_set


# ---------------------------------------------------------------------------
# random structures


def random_dominating_set(rng: random.Random, graph: WeightedGraph) -> set[int]:
    """A dominating set: random seed nodes plus repairs for uncovered nodes."""
    n = graph.node_count
    chosen = {u for u in range(n) if rng.random() < 0.35}
    for u in range(n):
        if u not in chosen and not any(v in chosen for v in graph.adjacency[u]):
            chosen.add(rng.choice([u, *graph.adjacency[u]]))
    return chosen


def degree_capped_instance(seed: int, n: int, cap: int, m: int = 1) -> Instance:
    """Random connected instance whose maximum degree never exceeds ``cap``."""
    assert cap >= 2
    rng = random.Random(seed)
    degree = [0] * n
    edges: set[tuple[int, int]] = set()
    for i in range(1, n):
        candidates = [j for j in range(i) if degree[j] < cap]
        j = rng.choice(candidates)
        edges.add((j, i))
        degree[i] += 1
        degree[j] += 1
    extra_attempts = 2 * n
    for _ in range(extra_attempts):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        a, b = min(u, v), max(u, v)
        if (a, b) in edges or degree[a] >= cap or degree[b] >= cap:
            continue
        edges.add((a, b))
        degree[a] += 1
        degree[b] += 1
    costs = [rng.uniform(0.1, 10.0) for _ in range(n)]
    return make_instance(n, sorted(edges), costs=costs, m=m, label=f"capped-{seed}")
