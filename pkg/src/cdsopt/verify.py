"""Solution validation: m-fold domination and induced connectivity checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Instance, components


@dataclass
class VerifyReport:
    """Outcome of checking a candidate solution.

    ``is_connected`` and ``is_cds`` stay None when only domination was
    checked.  ``violations`` holds (node, reason) pairs; the sentinel node -1
    marks set-level failures such as an empty solution.
    """

    is_m_ds: bool
    is_connected: bool | None
    is_cds: bool | None
    violations: list[tuple[int, str]] = field(default_factory=list)
    cost: float = 0.0


def _check_members(inst: Instance, members) -> set[int]:
    member_set = set(members)
    n = inst.graph.node_count
    for u in member_set:
        if not 0 <= u < n:
            raise ValueError(f"node id {u} out of range 0..{n - 1}")
    return member_set


def verify_mds(inst: Instance, members) -> VerifyReport:
    """Check that every node outside the set has at least m neighbors inside."""
    member_set = _check_members(inst, members)
    g = inst.graph
    m = inst.m
    violations: list[tuple[int, str]] = []
    for u in range(g.node_count):
        if u in member_set:
            continue
        inside = sum(1 for v in g.adjacency[u] if v in member_set)
        if inside < m:
            violations.append((u, f"node {u} has {inside} < {m} dominators"))
    return VerifyReport(
        is_m_ds=not violations,
        is_connected=None,
        is_cds=None,
        violations=violations,
        cost=sum(g.cost[u] for u in member_set),
    )


def verify_cds(inst: Instance, members) -> VerifyReport:
    """Full check: m-fold domination plus connectivity of the induced subgraph."""
    member_set = _check_members(inst, members)
    report = verify_mds(inst, member_set)
    if not member_set:
        report.is_connected = False
        report.violations.append((-1, "solution set is empty"))
    else:
        comps = components(inst.graph, member_set)
        report.is_connected = len(comps) == 1
        if not report.is_connected:
            anchor = min(comps[0])
            for comp in comps[1:]:
                for u in sorted(comp):
                    report.violations.append(
                        (u, f"node {u} disconnected from node {anchor} in the induced subgraph")
                    )
    report.is_cds = report.is_m_ds and report.is_connected
    return report
