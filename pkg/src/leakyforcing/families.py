"""Named graph families, generalized Petersen layout, and random corpora.

Canonical labelings:

* ``path(n)``: ``0 - 1 - ... - n-1``; ``cycle(n)`` closes ``n-1 - 0``.
* ``star(n)``: center ``0``, leaves ``1..n-1``.
* ``complete_minus_edge(n)``: ``K_n`` without the edge ``{0, 1}``.
* ``complete_join_leaf(n)``: ``K_{n-1}`` on ``0..n-2`` plus leaf ``n-1`` on ``0``.
* ``generalized_petersen(n, k)``: outer ``y_i`` is vertex ``i-1``, inner
  ``x_i`` is vertex ``n+i-1`` (1-based ``i``, taken modulo ``n``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import DomainError
from .graph import Edge, Graph

FAMILY_NAMES = (
    "path", "cycle", "star", "complete", "complete_minus_edge", "complete_join_leaf",
    "petersen", "tree", "unicyclic", "gadget",
)

GADGET_KINDS = (
    "double_star_bridge", "p6_plus_e", "clique_leaf_quad", "shared_clique_leaf", "deep_star_tree",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    edges: tuple[Edge, ...] = ()
    kind: str = ""
    extra: dict = field(default_factory=dict, compare=False, hash=False)

    def __str__(self) -> str:
        if self.family == "gadget":
            return f"gadget:{self.kind}," + ",".join(map(str, self.params))
        if self.family in ("tree", "unicyclic"):
            return f"{self.family}[{len(self.edges)} edges]"
        return f"{self.family}:" + ",".join(map(str, self.params))


# ----------------------------------------------------------------------
# deterministic families


def path(n: int) -> Graph:
    if n < 2:
        raise DomainError(f"Path needs n >= 2, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"Cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    if n < 2:
        raise DomainError(f"Star needs n >= 2, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"Complete needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def complete_minus_edge(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"CompleteMinusEdge needs n >= 3, got {n}")
    return Graph(n, [e for e in combinations(range(n), 2) if e != (0, 1)])


def complete_join_leaf(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"CompleteJoinLeaf needs n >= 3, got {n}")
    return Graph(n, list(combinations(range(n - 1), 2)) + [(0, n - 1)])


def check_petersen_params(n: int, k: int) -> None:
    if n < 3:
        raise DomainError(f"GeneralizedPetersen needs n >= 3, got n={n}")
    if not 1 <= k <= (n - 1) // 2:
        raise DomainError(f"GeneralizedPetersen needs 1 <= k <= (n-1)/2, got n={n}, k={k}")


def outer(n: int, i: int) -> int:
    """Vertex id of ``y_i`` (1-based, modulo ``n``)."""
    return (i - 1) % n


def inner(n: int, i: int) -> int:
    """Vertex id of ``x_i`` (1-based, modulo ``n``)."""
    return n + (i - 1) % n


def petersen_label(n: int, v: int) -> str:
    return f"y{v + 1}" if v < n else f"x{v - n + 1}"


def generalized_petersen(n: int, k: int) -> Graph:
    check_petersen_params(n, k)
    edges = []
    for i in range(1, n + 1):
        edges.append((outer(n, i), outer(n, i + 1)))
        edges.append((inner(n, i), outer(n, i)))
        edges.append((inner(n, i), inner(n, i + k)))
    return Graph(2 * n, edges)


# ----------------------------------------------------------------------
# perturbation gadgets


def double_star_bridge(leaks: int) -> Graph:
    """Two copies of ``S_{leaks+1}`` with their centers joined.

    Centers are ``0`` and ``leaks+1``; the bridge edge is ``(0, leaks+1)``.
    """
    if leaks < 1:
        raise DomainError("double_star_bridge needs leaks >= 1")
    a, b = 0, leaks + 1
    edges = [(a, b)]
    edges += [(a, i) for i in range(1, leaks + 1)]
    edges += [(b, b + i) for i in range(1, leaks + 1)]
    return Graph(2 * leaks + 2, edges)


def p6_plus_e() -> Graph:
    """``P_6`` with the chord between its 2nd and 5th vertices, i.e. ``(1, 4)``."""
    return path(6).add_edge(1, 4)


def clique_leaf_quad(leaks: int) -> Graph:
    """K_4 core with pendant leaves and shared degree-2 vertices.

    Core: ``v11=0, v12=1, v21=2, v22=3``. Each ``v_{i,1}`` gets
    ``floor(leaks/2)`` leaves, each ``v_{i,2}`` gets ``ceil(leaks/2)`` leaves,
    and each pair ``i`` gets ``floor(leaks/2)`` vertices adjacent to both
    ``v_{i,1}`` and ``v_{i,2}``. The tight edge is ``v11 v21 = (0, 2)``.
    """
    if leaks < 2:
        raise DomainError("clique_leaf_quad needs leaks >= 2 (use p6_plus_e for leaks=1)")
    lo, hi = leaks // 2, (leaks + 1) // 2
    edges = list(combinations(range(4), 2))
    nxt = 4
    for core, count in ((0, lo), (1, hi), (2, lo), (3, hi)):
        for _ in range(count):
            edges.append((core, nxt))
            nxt += 1
    for a, b in ((0, 1), (2, 3)):
        for _ in range(lo):
            edges += [(a, nxt), (b, nxt)]
            nxt += 1
    return Graph(nxt, edges)


def shared_clique_leaf(leaks: int) -> Graph:
    """Two ``K_{leaks+1}`` sharing vertex ``0``, plus leaf ``w`` (the last vertex) on ``0``.

    Removing ``w`` lowers the leaky forcing number by exactly one.
    """
    if leaks < 1:
        raise DomainError("shared_clique_leaf needs leaks >= 1")
    left = [0] + list(range(1, leaks + 1))
    right = [0] + list(range(leaks + 1, 2 * leaks + 1))
    w = 2 * leaks + 1
    edges = list(combinations(left, 2)) + list(combinations(right, 2)) + [(0, w)]
    return Graph(w + 1, edges)


def deep_star_tree(d: int, leaks: int) -> Graph:
    """Height-2 tree: root ``0`` with ``d`` children, each with ``leaks`` children."""
    if leaks < 1 or d <= leaks:
        raise DomainError(f"deep_star_tree needs leaks >= 1 and d > leaks, got d={d}, leaks={leaks}")
    edges = []
    nxt = d + 1
    for c in range(1, d + 1):
        edges.append((0, c))
        for _ in range(leaks):
            edges.append((c, nxt))
            nxt += 1
    return Graph(nxt, edges)


def gadget_graph(kind: str, params: tuple[int, ...]) -> Graph:
    builders = {
        "double_star_bridge": double_star_bridge,
        "p6_plus_e": p6_plus_e,
        "clique_leaf_quad": clique_leaf_quad,
        "shared_clique_leaf": shared_clique_leaf,
        "deep_star_tree": deep_star_tree,
    }
    if kind not in builders:
        raise DomainError(f"unknown gadget kind {kind!r}; choose from {', '.join(GADGET_KINDS)}")
    try:
        return builders[kind](*params)
    except TypeError:
        raise DomainError(f"wrong number of parameters for gadget {kind!r}: {params}") from None


# ----------------------------------------------------------------------


def generate(spec: FamilySpec) -> Graph:
    p = spec.params
    simple = {
        "path": path, "cycle": cycle, "star": star, "complete": complete,
        "complete_minus_edge": complete_minus_edge, "complete_join_leaf": complete_join_leaf,
    }
    if spec.family in simple:
        if len(p) != 1:
            raise DomainError(f"{spec.family} takes exactly one parameter n")
        return simple[spec.family](p[0])
    if spec.family == "petersen":
        if len(p) != 2:
            raise DomainError("petersen takes parameters n,k")
        return generalized_petersen(*p)
    if spec.family in ("tree", "unicyclic"):
        n = 1 + max((max(e) for e in spec.edges), default=0)
        g = Graph(n, spec.edges)
        ok = g.is_tree() if spec.family == "tree" else g.is_unicyclic()
        if not ok:
            raise DomainError(f"edge list is not a {spec.family} graph")
        return g
    if spec.family == "gadget":
        return gadget_graph(spec.kind, p)
    raise DomainError(f"unknown family {spec.family!r}")


_ALIASES = {
    "gp": "petersen", "generalized_petersen": "petersen", "p": "path", "c": "cycle",
    "k": "complete", "kn-e": "complete_minus_edge", "kn+leaf": "complete_join_leaf",
}


def parse_family(text: str) -> FamilySpec:
    """Parse the ``name:p1,p2`` mini-grammar, e.g. ``petersen:5,2``.

    Gadgets take their kind first: ``gadget:deep_star_tree,4,1``.
    """
    name, _, rest = text.partition(":")
    name = name.strip().lower().replace("-", "_")
    name = _ALIASES.get(name, _ALIASES.get(name.replace("_", "-"), name))
    fields = [f.strip() for f in rest.split(",") if f.strip()]
    if name == "gadget":
        if not fields:
            raise DomainError("gadget needs a kind, e.g. gadget:p6_plus_e")
        kind, fields = fields[0], fields[1:]
    else:
        kind = ""
    if name not in FAMILY_NAMES or name in ("tree", "unicyclic"):
        raise DomainError(f"unknown family {name!r}")
    try:
        params = tuple(int(f) for f in fields)
    except ValueError:
        raise DomainError(f"non-integer family parameter in {text!r}") from None
    return FamilySpec(name, params, kind=kind)


# ----------------------------------------------------------------------
# random corpora


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree via a Pruefer sequence."""
    if n < 2:
        raise DomainError("random_tree needs n >= 2")
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Graph(n, edges)


def random_unicyclic(n: int, girth: int, rng: random.Random) -> Graph:
    """Cycle of the requested girth with random pendant trees, randomly relabeled.

    Each non-cycle vertex attaches to a uniformly chosen earlier vertex, so
    cycle degrees and pendant depths both vary.
    """
    if not 3 <= girth <= n:
        raise DomainError(f"girth must lie in 3..n, got girth={girth}, n={n}")
    edges = [(i, (i + 1) % girth) for i in range(girth)]
    edges += [(rng.randrange(v), v) for v in range(girth, n)]
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Erdos-Renyi sample conditioned on connectivity (rejection)."""
    if n < 1:
        raise DomainError("random_connected_graph needs n >= 1")
    if n == 1:
        return Graph(1)
    pairs = list(combinations(range(n), 2))
    while True:
        prob = p if p is not None else rng.uniform(0.25, 0.8)
        g = Graph(n, [e for e in pairs if rng.random() < prob])
        if g.is_connected():
            return g
