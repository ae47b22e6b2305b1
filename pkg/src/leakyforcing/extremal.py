"""Structural classifiers for the extreme values ``Z_1(G) = 2`` and ``Z_1(G) = n-1``.

The classifiers only look at degrees, edge counts and connectivity. The exact
solver is used solely by :func:`exhaustive_audit`, which compares the two on
every labeled connected graph up to a given order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import DomainError
from .forts import enumerate_minimal_forts
from .graph import Graph, enumerate_connected_graphs, to_graph6
from .solver import leaky_forcing_number

FAMILY_TAGS = ("Path", "Cycle", "Complete", "Star", "CompleteMinusEdge", "CompleteJoinLeaf")


@dataclass(frozen=True)
class ExtremalVerdict:
    kind: str
    family_tag: str | None

    @property
    def matches(self) -> bool:
        return self.family_tag is not None

    def to_json(self) -> dict:
        return {"kind": self.kind, "matches": self.matches, "family_tag": self.family_tag}


def _require_connected(g: Graph, min_n: int) -> None:
    if g.n < min_n:
        raise DomainError(f"classifier needs n >= {min_n}, got n={g.n}")
    if not g.is_connected():
        raise DomainError("classifier needs a connected graph")


def classify_min(g: Graph) -> ExtremalVerdict:
    _require_connected(g, 2)
    degs = g.degrees()
    if g.edge_count == g.n - 1 and max(degs) <= 2:
        return ExtremalVerdict("min_is_2", "Path")
    if g.n >= 3 and all(d == 2 for d in degs):
        return ExtremalVerdict("min_is_2", "Cycle")
    return ExtremalVerdict("min_is_2", None)


def classify_max(g: Graph) -> ExtremalVerdict:
    _require_connected(g, 3)
    n, m = g.n, g.edge_count
    degs = g.degrees()
    full = n * (n - 1) // 2
    tag = None
    if m == full:
        tag = "Complete"
    elif m == n - 1 and max(degs) == n - 1:
        tag = "Star"
    elif m == (n - 1) * (n - 2) // 2 + 1 and degs.count(1) == 1 and degs.count(n - 1) == 1:
        # the leaf hangs off the only full-degree vertex; the rest must be a clique
        leaf = degs.index(1)
        rest, _ = g.induced(v for v in range(n) if v != leaf)
        if rest.edge_count == (n - 1) * (n - 2) // 2:
            tag = "CompleteJoinLeaf"
    if tag is None and m == full - 1:
        tag = "CompleteMinusEdge"
    return ExtremalVerdict("max_is_n_minus_1", tag)


def minimal_fort_profile(g: Graph, leaks: int) -> bool:
    """Are the minimal forts exactly the low-degree singletons plus all high-degree pairs?"""
    low = [v for v in range(g.n) if g.degree(v) <= leaks]
    high = [v for v in range(g.n) if g.degree(v) > leaks]
    expected = {frozenset([v]) for v in low}
    expected |= {frozenset([u, v]) for i, u in enumerate(high) for v in high[i + 1:]}
    actual = {f.members for f in enumerate_minimal_forts(g, leaks)}
    return actual == expected


@dataclass
class AuditReport:
    n_max: int
    counts: dict[int, int] = field(default_factory=dict)
    min_matches: dict[int, int] = field(default_factory=dict)
    max_matches: dict[int, int] = field(default_factory=dict)
    star_leaf_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    complete: bool = True
    progress: dict | None = None
    runtime: float = 0.0

    @property
    def ok(self) -> bool:
        return self.complete and not self.violations

    def to_json(self, with_runtime: bool = False) -> dict:
        out = {
            "n_max": self.n_max,
            "graphs": {str(n): c for n, c in sorted(self.counts.items())},
            "min_is_2_matches": {str(n): c for n, c in sorted(self.min_matches.items())},
            "max_is_n_minus_1_matches": {str(n): c for n, c in sorted(self.max_matches.items())},
            "star_leaf_checked": self.star_leaf_checked,
            "violations": sorted(self.violations, key=lambda v: (len(v["graph6"]), v["graph6"], v["check"])),
            "complete": self.complete,
            "progress": self.progress,
        }
        if with_runtime:
            out["runtime_seconds"] = round(self.runtime, 3)
        return out


def audit_graph(g: Graph) -> tuple[int, list[str]]:
    """Exact ``Z_1`` and the list of failed checks for one connected graph."""
    n = g.n
    z1 = leaky_forcing_number(g, 1).value
    failed = []
    if (z1 == 2) != classify_min(g).matches:
        failed.append("min_is_2")
    if n >= 3:
        if (z1 == n - 1) != classify_max(g).matches:
            failed.append("max_is_n_minus_1")
        leaves = g.degrees().count(1)
        if leaves >= 2 and z1 == n - 1 and not (g.edge_count == n - 1 and max(g.degrees()) == n - 1):
            failed.append("star_leaf")
    return z1, failed


def exhaustive_audit(n_max: int, budget: float | None = None) -> AuditReport:
    """Check both classifications and the star-leaf criterion on every labeled connected graph."""
    if not 2 <= n_max <= 7:
        raise DomainError(f"exhaustive audit supports 2 <= n_max <= 7, got {n_max}")
    t0 = time.monotonic()
    rep = AuditReport(n_max)
    for n in range(2, n_max + 1):
        count = mins = maxs = 0
        for g in enumerate_connected_graphs(n):
            if budget is not None and time.monotonic() - t0 > budget:
                rep.complete = False
                rep.progress = {"n": n, "graphs_done": count}
                rep.counts[n], rep.min_matches[n], rep.max_matches[n] = count, mins, maxs
                rep.runtime = time.monotonic() - t0
                return rep
            count += 1
            z1, failed = audit_graph(g)
            mins += z1 == 2
            if n >= 3:
                maxs += z1 == n - 1
                rep.star_leaf_checked += g.degrees().count(1) >= 2
            for check in failed:
                rep.violations.append({"graph6": to_graph6(g), "check": check, "z1": z1})
        rep.counts[n], rep.min_matches[n], rep.max_matches[n] = count, mins, maxs
    rep.runtime = time.monotonic() - t0
    return rep
