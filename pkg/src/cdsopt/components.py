"""Insertion-only union-find tracking components of an induced subgraph."""

from __future__ import annotations

from .graph import WeightedGraph


class ComponentIndex:
    """Connected components of G[D] for a node set D that only ever grows.

    Adding a node unions it with every already-present neighbor, so two
    members share a root exactly when they are connected inside the induced
    subgraph.  Uses union by size with path compression.
    """

    def __init__(self, graph: WeightedGraph, members=()):
        self._graph = graph
        self._parent: dict[int, int] = {}
        self._size: dict[int, int] = {}
        self._count = 0
        for u in members:
            self.add(u)

    def __contains__(self, u: int) -> bool:
        return u in self._parent

    def __len__(self) -> int:
        return len(self._parent)

    @property
    def members(self) -> set[int]:
        return set(self._parent)

    @property
    def component_count(self) -> int:
        return self._count

    def add(self, u: int) -> None:
        if u in self._parent:
            raise ValueError(f"node {u} already in the index")
        self._parent[u] = u
        self._size[u] = 1
        self._count += 1
        for v in self._graph.adjacency[u]:
            if v in self._parent:
                self._union(u, v)

    def find(self, u: int) -> int:
        root = u
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[u] != root:
            self._parent[u], u = root, self._parent[u]
        return root

    def _union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        self._count -= 1
