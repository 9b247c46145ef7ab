"""Instance generators: random connected graphs, unit-disk graphs, and the
adversarial ladder family that separates the star connector from the
pairwise baseline.

All generators are pure functions of their arguments (including the seed):
the same call produces byte-identical instances.
"""

from __future__ import annotations

import random

from .graph import Instance, InstanceError, WeightedGraph


def gen_random_connected(
    n: int,
    edge_prob: float,
    cost_range: tuple[float, float],
    seed: int,
    m: int = 1,
    label: str | None = None,
) -> Instance:
    """Random connected graph: a random spanning tree plus G(n, p) extra edges.

    Costs are uniform in ``cost_range``.  The spanning tree guarantees
    connectivity without rejection sampling, so generation always terminates.
    """
    lo, hi = cost_range
    if n < 1:
        raise InstanceError("n must be >= 1")
    if not 0 < edge_prob <= 1:
        raise InstanceError("edge_prob must be in (0, 1]")
    if not 0 < lo <= hi:
        raise InstanceError("cost range must satisfy 0 < lo <= hi")
    rng = random.Random(seed)
    edges: set[tuple[int, int]] = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < edge_prob:
                edges.add((u, v))
    costs = [rng.uniform(lo, hi) for _ in range(n)]
    graph = WeightedGraph.from_edges(n, sorted(edges), costs)
    if label is None:
        label = f"random-n{n}-p{edge_prob:g}-m{m}-s{seed}"
    return Instance(graph=graph, m=m, label=label)


def gen_udg(
    n: int,
    side: float,
    cost_range: tuple[float, float],
    seed: int,
    m: int = 1,
    max_attempts: int = 1000,
    label: str | None = None,
) -> Instance:
    """Unit-disk graph: n points uniform in [0, side]^2, edges at distance <= 1.

    Resamples the point set until the graph is connected; raises after
    ``max_attempts`` failures.  Coordinates are stored on the instance.
    """
    lo, hi = cost_range
    if n < 1:
        raise InstanceError("n must be >= 1")
    if side <= 0:
        raise InstanceError("side must be positive")
    if not 0 < lo <= hi:
        raise InstanceError("cost range must satisfy 0 < lo <= hi")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        pts = [(rng.uniform(0.0, side), rng.uniform(0.0, side)) for _ in range(n)]
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if (pts[i][0] - pts[j][0]) ** 2 + (pts[i][1] - pts[j][1]) ** 2 <= 1.0
        ]
        if _edge_list_connected(n, edges):
            costs = [rng.uniform(lo, hi) for _ in range(n)]
            graph = WeightedGraph.from_edges(n, edges, costs, coords=pts)
            if label is None:
                label = f"udg-n{n}-side{side:g}-m{m}-s{seed}"
            return Instance(graph=graph, m=m, label=label)
    raise InstanceError(f"could not generate connected UDG after {max_attempts} attempts")


def gen_fig1(d: int, eps: float, m: int = 1, label: str | None = None) -> tuple[Instance, frozenset[int]]:
    """Adversarial ladder with d rungs plus a designated dominating set.

    Layout (3d+2 nodes): top node t adjacent to a hub u and to every rung top
    u_i; each u_i adjacent to its rung bottom v_i; each v_i adjacent to the
    hub u and to a private anchor b_i.  Costs: c(u_i)=1, c(v_i)=eps,
    c(u)=1+eps, c(t)=c(b_i)=1.  The designated dominating set is
    {t, b_1..b_d}, whose induced subgraph has d+1 components.

    On this family the best single star {u, v_1..v_d} reconnects everything
    at cost 1+(d+1)*eps, while a connector limited to node pairs pays
    d*(1+eps) by repeatedly taking the rungs (u_i, v_i).
    """
    if d < 1:
        raise InstanceError("d must be >= 1")
    if eps <= 0:
        raise InstanceError("eps must be positive")
    t, u = 0, 1
    u_ids = [2 + i for i in range(d)]
    v_ids = [2 + d + i for i in range(d)]
    b_ids = [2 + 2 * d + i for i in range(d)]
    n = 3 * d + 2
    costs = [0.0] * n
    costs[t] = 1.0
    costs[u] = 1.0 + eps
    for i in range(d):
        costs[u_ids[i]] = 1.0
        costs[v_ids[i]] = eps
        costs[b_ids[i]] = 1.0
    edges = [(t, u)]
    for i in range(d):
        edges.append((t, u_ids[i]))
        edges.append((u_ids[i], v_ids[i]))
        edges.append((u, v_ids[i]))
        edges.append((v_ids[i], b_ids[i]))
    graph = WeightedGraph.from_edges(n, edges, costs)
    if label is None:
        label = f"fig1-d{d}-eps{eps:g}"
    designated = frozenset([t, *b_ids])
    return Instance(graph=graph, m=m, label=label), designated


def _edge_list_connected(n: int, edges: list[tuple[int, int]]) -> bool:
    if n == 1:
        return True
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n
