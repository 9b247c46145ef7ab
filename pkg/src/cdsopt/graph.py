"""Weighted graph instances: data types, validation, and the text file format.

Instance file format (UTF-8, lines starting with '#' are comments):

    cds <n> <edge_count> <m>
    <n whitespace-separated positive node costs>
    coords              (optional block, only for unit-disk instances)
    <x> <y>             (n lines)
    <u> <v>             (edge_count lines, 0 <= u < v < n)

A comment of the form ``# label: <text>`` restores the instance label on
parse; all other comments are ignored.  Canonical serialization sorts edges
lexicographically and prints floats with 17 significant digits, so parse and
serialize round-trip exactly.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass


class InstanceError(ValueError):
    """Raised for malformed instance text or violated graph invariants."""


def fmt_float(x: float) -> str:
    """Render a float with 17 significant digits (round-trip exact)."""
    return format(x, ".17g")


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected simple graph with positive node costs.

    Nodes are dense ids 0..n-1.  ``adjacency[u]`` is a sorted tuple of
    neighbor ids.  ``coords``, when present, are planar positions and the
    edge set must be exactly the pairs at Euclidean distance <= 1.
    """

    node_count: int
    adjacency: tuple[tuple[int, ...], ...]
    cost: tuple[float, ...]
    coords: tuple[tuple[float, float], ...] | None = None

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        edges: list[tuple[int, int]],
        costs: list[float] | tuple[float, ...],
        coords: list[tuple[float, float]] | None = None,
    ) -> "WeightedGraph":
        """Build and fully validate a graph from an edge list."""
        if node_count < 1:
            raise InstanceError("node count must be >= 1")
        neighbors: list[set[int]] = [set() for _ in range(node_count)]
        for u, v in edges:
            if u == v:
                raise InstanceError(f"loop edge {u} {v}")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise InstanceError(f"edge endpoint out of range: {u} {v}")
            if v in neighbors[u]:
                raise InstanceError(f"duplicate edge {min(u, v)} {max(u, v)}")
            neighbors[u].add(v)
            neighbors[v].add(u)
        graph = cls(
            node_count=node_count,
            adjacency=tuple(tuple(sorted(s)) for s in neighbors),
            cost=tuple(float(c) for c in costs),
            coords=tuple((float(x), float(y)) for x, y in coords) if coords is not None else None,
        )
        validate_graph(graph)
        return graph

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    @property
    def max_degree(self) -> int:
        return max(len(nbrs) for nbrs in self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.node_count) for v in self.adjacency[u] if u < v]


@dataclass(frozen=True)
class Instance:
    """A problem instance: graph plus the fold requirement m."""

    graph: WeightedGraph
    m: int
    label: str = ""


def components(graph: WeightedGraph, members=None) -> list[set[int]]:
    """Connected components of the subgraph induced by ``members`` (default: all nodes)."""
    member_set = set(range(graph.node_count)) if members is None else set(members)
    seen: set[int] = set()
    comps: list[set[int]] = []
    for start in sorted(member_set):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in graph.adjacency[u]:
                if v in member_set and v not in comp:
                    comp.add(v)
                    queue.append(v)
        seen |= comp
        comps.append(comp)
    return comps


def validate_graph(graph: WeightedGraph) -> None:
    """Check every WeightedGraph invariant, raising InstanceError on the first failure."""
    n = graph.node_count
    if n < 1:
        raise InstanceError("node count must be >= 1")
    if len(graph.adjacency) != n:
        raise InstanceError("adjacency size does not match node count")
    if len(graph.cost) != n:
        raise InstanceError("cost vector size does not match node count")
    for u in range(n):
        nbrs = graph.adjacency[u]
        if list(nbrs) != sorted(set(nbrs)):
            raise InstanceError(f"adjacency of node {u} not sorted/duplicate-free")
        for v in nbrs:
            if v == u:
                raise InstanceError(f"loop edge {u} {u}")
            if not 0 <= v < n:
                raise InstanceError(f"edge endpoint out of range: {u} {v}")
            if u not in graph.adjacency[v]:
                raise InstanceError(f"adjacency not symmetric at edge {u} {v}")
    for u, c in enumerate(graph.cost):
        if not math.isfinite(c):
            raise InstanceError(f"malformed cost at node {u}")
        if c <= 0:
            raise InstanceError(f"non-positive cost at node {u}")
    if len(components(graph)) != 1:
        raise InstanceError("disconnected graph")
    if graph.coords is not None:
        if len(graph.coords) != n:
            raise InstanceError("coords size does not match node count")
        for i in range(n):
            xi, yi = graph.coords[i]
            nbrs = set(graph.adjacency[i])
            for j in range(i + 1, n):
                xj, yj = graph.coords[j]
                within = (xi - xj) ** 2 + (yi - yj) ** 2 <= 1.0
                if within != (j in nbrs):
                    raise InstanceError(f"coords violate the unit-disk edge rule at pair ({i}, {j})")


def validate_instance(inst: Instance) -> None:
    if inst.m < 1:
        raise InstanceError("fold requirement m must be >= 1")
    validate_graph(inst.graph)


def parse_instance(text: str | bytes) -> Instance:
    """Parse instance text, validating every invariant.

    Raises InstanceError with a distinct diagnostic for malformed headers,
    non-positive costs, duplicate/loop edges, disconnected graphs, and
    coordinate blocks that contradict the unit-disk edge rule.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    label = ""
    rows: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("label:"):
                label = body[len("label:"):].strip()
            continue
        rows.append(line)
    if not rows:
        raise InstanceError("malformed header: empty instance")
    head = rows[0].split()
    if len(head) != 4 or head[0] != "cds":
        raise InstanceError("malformed header: expected 'cds <n> <edge_count> <m>'")
    try:
        n, edge_count, m = int(head[1]), int(head[2]), int(head[3])
    except ValueError as exc:
        raise InstanceError("malformed header: counts must be integers") from exc
    if n < 1:
        raise InstanceError("malformed header: node count must be >= 1")
    if edge_count < 0:
        raise InstanceError("malformed header: edge count must be >= 0")
    if m < 1:
        raise InstanceError("malformed header: fold requirement m must be >= 1")

    pos = 1
    if pos >= len(rows):
        raise InstanceError("missing cost line")
    cost_tokens = rows[pos].split()
    pos += 1
    if len(cost_tokens) != n:
        raise InstanceError(f"cost line must hold exactly {n} values, found {len(cost_tokens)}")
    costs: list[float] = []
    for tok in cost_tokens:
        try:
            c = float(tok)
        except ValueError as exc:
            raise InstanceError(f"malformed cost {tok!r}") from exc
        if not math.isfinite(c):
            raise InstanceError(f"malformed cost {tok!r}")
        if c <= 0:
            raise InstanceError(f"non-positive cost {tok!r}")
        costs.append(c)

    coords: list[tuple[float, float]] | None = None
    if pos < len(rows) and rows[pos] == "coords":
        pos += 1
        coords = []
        for _ in range(n):
            if pos >= len(rows):
                raise InstanceError("coords block truncated")
            parts = rows[pos].split()
            pos += 1
            if len(parts) != 2:
                raise InstanceError("coords line must hold exactly two values")
            try:
                x, y = float(parts[0]), float(parts[1])
            except ValueError as exc:
                raise InstanceError(f"malformed coordinate {parts!r}") from exc
            if not (math.isfinite(x) and math.isfinite(y)):
                raise InstanceError(f"malformed coordinate {parts!r}")
            coords.append((x, y))

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for k in range(edge_count):
        if pos >= len(rows):
            raise InstanceError(f"expected {edge_count} edge lines, found {k}")
        parts = rows[pos].split()
        pos += 1
        if len(parts) != 2:
            raise InstanceError(f"malformed edge line {parts!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InstanceError(f"malformed edge line {parts!r}") from exc
        if u == v:
            raise InstanceError(f"loop edge {u} {v}")
        if not (0 <= u < v < n):
            raise InstanceError(f"edge {u} {v} must satisfy 0 <= u < v < n")
        if (u, v) in seen:
            raise InstanceError(f"duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    if pos != len(rows):
        raise InstanceError("trailing content after edge list")

    graph = WeightedGraph.from_edges(n, edges, costs, coords=coords)
    return Instance(graph=graph, m=m, label=label)


def serialize_instance(inst: Instance) -> str:
    """Canonical text form: label comment, header, costs, coords, sorted edges."""
    g = inst.graph
    lines: list[str] = []
    if inst.label:
        lines.append(f"# label: {inst.label}")
    edges = g.edges()
    lines.append(f"cds {g.node_count} {len(edges)} {inst.m}")
    lines.append(" ".join(fmt_float(c) for c in g.cost))
    if g.coords is not None:
        lines.append("coords")
        lines.extend(f"{fmt_float(x)} {fmt_float(y)}" for x, y in g.coords)
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
