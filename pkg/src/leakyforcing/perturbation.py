"""How much the leaky forcing number moves when one edge or vertex is removed.

Edge deltas are ``Z(G) - Z(G-e)`` and lie in ``[-2, 2]``; vertex deltas are
``Z(G-v) - Z(G)`` and lie in ``[-1, deg v]``. Disconnected results are solved
per component and summed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NotFoundError
from .families import GADGET_KINDS, gadget_graph
from .forts import enumerate_minimal_forts, is_fort
from .graph import Graph
from .solver import leaky_forcing_number


@dataclass(frozen=True)
class DeltaReport:
    kind: str
    element: tuple[int, ...]
    leaks: int
    before: int
    after: int
    delta: int
    bound: tuple[int, int]

    @property
    def bound_ok(self) -> bool:
        return self.bound[0] <= self.delta <= self.bound[1]

    def to_json(self) -> dict:
        return {"kind": self.kind, "element": list(self.element), "leaks": self.leaks,
                "before": self.before, "after": self.after, "delta": self.delta,
                "bound": list(self.bound), "bound_ok": self.bound_ok}


def edge_delta(g: Graph, e: tuple[int, int], leaks: int, method: str = "subset_search") -> DeltaReport:
    u, v = e
    h = g.remove_edge(u, v)
    before = leaky_forcing_number(g, leaks, method).value
    after = leaky_forcing_number(h, leaks, method).value
    return DeltaReport("edge", (min(u, v), max(u, v)), leaks, before, after, before - after, (-2, 2))


def vertex_delta(g: Graph, v: int, leaks: int, method: str = "subset_search") -> DeltaReport:
    if not 0 <= v < g.n:
        raise NotFoundError(f"vertex {v} not in graph with n={g.n}")
    h, _ = g.remove_vertex(v)
    before = leaky_forcing_number(g, leaks, method).value
    after = leaky_forcing_number(h, leaks, method).value
    return DeltaReport("vertex", (v,), leaks, before, after, after - before, (-1, g.degree(v)))


@dataclass(frozen=True)
class Gadget:
    kind: str
    params: tuple[int, ...]
    graph: Graph
    leaks: int
    element: tuple[int, ...]
    element_kind: str
    expected_delta: int

    def check(self) -> DeltaReport:
        if self.element_kind == "edge":
            return edge_delta(self.graph, self.element, self.leaks)
        return vertex_delta(self.graph, self.element[0], self.leaks)


def gadget(kind: str, *params: int) -> Gadget:
    """A tightness gadget together with the element to remove and its advertised delta.

    ``double_star_bridge(l)`` edge delta -2; ``p6_plus_e()`` edge delta +2 at
    one leak; ``clique_leaf_quad(l)`` edge delta +2; ``shared_clique_leaf(l)``
    vertex delta -1; ``deep_star_tree(d, l)`` vertex delta ``d``.
    """
    if kind not in GADGET_KINDS:
        raise DomainError(f"unknown gadget kind {kind!r}; choose from {', '.join(GADGET_KINDS)}")
    g = gadget_graph(kind, params)
    if kind == "double_star_bridge":
        (l,) = params
        return Gadget(kind, params, g, l, (0, l + 1), "edge", -2)
    if kind == "p6_plus_e":
        return Gadget(kind, params, g, 1, (1, 4), "edge", 2)
    if kind == "clique_leaf_quad":
        (l,) = params
        return Gadget(kind, params, g, l, (0, 2), "edge", 2)
    if kind == "shared_clique_leaf":
        (l,) = params
        return Gadget(kind, params, g, l, (2 * l + 1,), "vertex", -1)
    d, l = params
    return Gadget(kind, params, g, l, (0,), "vertex", d)


def fort_transfer_check(g: Graph, e: tuple[int, int], leaks: int) -> bool:
    """Every minimal fort of one of ``G``, ``G-e`` meets ``e`` or is a fort of the other."""
    u, v = e
    h = g.remove_edge(u, v)
    ends = {u, v}
    for src, dst in ((h, g), (g, h)):
        for f in enumerate_minimal_forts(src, leaks):
            if not f.members & ends and not is_fort(dst, f.members, leaks):
                return False
    return True
