"""Immutable simple graphs on vertices ``0..n-1`` and structural queries.

Adjacency is stored twice: as sorted neighbor tuples for iteration and as
integer bitmasks (bit ``u`` of ``masks[v]`` is set iff ``uv`` is an edge) for
the set algebra the solvers rely on.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DomainError, GraphParseError, NotFoundError, NotUnicyclicError, SelfLoopError

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


class Graph:
    """Simple undirected graph with contiguous integer vertex ids."""

    __slots__ = ("n", "masks", "_nbrs", "edge_count")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise DomainError("vertex count must be non-negative")
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise SelfLoopError(f"self-loop on vertex {u}", 0)
            if not (0 <= u < n and 0 <= v < n):
                raise NotFoundError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.masks: tuple[int, ...] = tuple(masks)
        self._nbrs: tuple[tuple[int, ...], ...] = tuple(tuple(bits(m)) for m in masks)
        self.edge_count = sum(m.bit_count() for m in masks) // 2

    # basic queries -----------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._nbrs]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.masks[u] >> v & 1)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # derived graphs ----------------------------------------------------

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise NotFoundError(f"edge ({u}, {v}) not in graph")
        e = (min(u, v), max(u, v))
        return Graph(self.n, [f for f in self.edges() if f != e])

    def remove_vertex(self, v: int) -> tuple[Graph, dict[int, int]]:
        """Delete ``v``; returns the new graph and the old-id -> new-id map."""
        if not 0 <= v < self.n:
            raise NotFoundError(f"vertex {v} not in graph")
        relabel = {u: (u if u < v else u - 1) for u in range(self.n) if u != v}
        g = Graph(self.n - 1, [(relabel[a], relabel[b]) for a, b in self.edges() if v not in (a, b)])
        return g, relabel

    def add_edge(self, u: int, v: int) -> Graph:
        if self.has_edge(u, v):
            return self
        return Graph(self.n, self.edges() + [(u, v)])

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph; second item maps new ids back to old ids."""
        keep = sorted(set(vertices))
        index = {u: i for i, u in enumerate(keep)}
        edges = [(index[a], index[b]) for a, b in self.edges() if a in index and b in index]
        return Graph(len(keep), edges), keep

    # connectivity ------------------------------------------------------

    def component_masks(self) -> list[int]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.masks[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.component_masks()) == 1

    def is_tree(self) -> bool:
        return self.edge_count == self.n - 1 and self.is_connected()

    def is_unicyclic(self) -> bool:
        return self.edge_count == self.n and self.is_connected()


# ----------------------------------------------------------------------
# serialization


def to_edge_list(g: Graph) -> str:
    """One ``u v`` pair per line; isolated vertices get a line of their own."""
    lines = [f"{u} {v}" for u, v in g.edges()]
    lines += [str(v) for v in range(g.n) if g.degree(v) == 0]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_edge_list(text: str) -> Graph:
    edges: list[Edge] = []
    top = -1
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            parts = body.split()
            if len(parts) not in (1, 2):
                raise GraphParseError(f"expected 'u v' or a single vertex id, got {body!r}", offset)
            try:
                ids = [int(p) for p in parts]
            except ValueError:
                raise GraphParseError(f"non-integer vertex id in {body!r}", offset) from None
            if any(i < 0 for i in ids):
                raise GraphParseError("negative vertex id", offset)
            if len(ids) == 2:
                if ids[0] == ids[1]:
                    raise SelfLoopError(f"self-loop on vertex {ids[0]}", offset)
                edges.append((ids[0], ids[1]))
            top = max(top, *ids)
        offset += len(line.encode())
    return Graph(top + 1, edges)


def _g6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise DomainError("graph6 supports at most 258047 vertices here")


def to_graph6(g: Graph) -> str:
    out = bytearray(_g6_size(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.masks[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    data = text.strip().encode("ascii", errors="replace")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    base = len(text) - len(text.lstrip())
    if not data:
        raise GraphParseError("empty graph6 string", base)
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphParseError(f"byte {byte!r} outside the graph6 range 63..126", base + pos)
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise GraphParseError("unsupported or truncated graph6 size header", base)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphParseError(f"expected {need} adjacency bytes for n={n}, found {len(body)}", base + pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if n * (n - 1) // 2 % 6 and body[-1] - 63 & ((1 << (6 - k % 6)) - 1):
        raise GraphParseError("nonzero padding bits in final graph6 byte", base + pos + len(body) - 1)
    return Graph(n, edges)


def parse_graph(text: str, format: str = "edge_list") -> Graph:
    if format == "graph6":
        return parse_graph6(text)
    if format == "edge_list":
        return parse_edge_list(text)
    raise DomainError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "edge_list") -> str:
    if format == "graph6":
        return to_graph6(g)
    if format == "edge_list":
        return to_edge_list(g)
    raise DomainError(f"unknown graph format {format!r}")


# ----------------------------------------------------------------------
# unicyclic structure


@dataclass(frozen=True)
class CycleDecomposition:
    """The cycle ``c_1..c_g`` of a unicyclic graph and the trees hanging off it.

    ``trees[(i, j)]`` is the vertex set of the ``j``-th tree attached to
    ``cycle[i]`` (0-based, roots ordered by id); the cycle vertex itself is
    not part of the tree.
    """

    cycle: tuple[int, ...]
    trees: dict[tuple[int, int], frozenset[int]]
    cycle_degrees: tuple[int, ...]

    @property
    def girth(self) -> int:
        return len(self.cycle)

    def cycle_distance(self, i: int, j: int) -> int:
        d = abs(i - j) % self.girth
        return min(d, self.girth - d)

    def tree_root(self, i: int, j: int, g: Graph) -> int:
        """The vertex of ``T_{c_i,j}`` adjacent to ``c_i``."""
        (root,) = [u for u in g.neighbors(self.cycle[i]) if u in self.trees[(i, j)]]
        return root


def unique_cycle(g: Graph) -> CycleDecomposition:
    if g.n == 0 or g.edge_count != g.n or not g.is_connected():
        raise NotUnicyclicError(
            f"graph with n={g.n}, m={g.edge_count} is not connected with exactly one cycle")
    deg = g.degrees()
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        alive[v] = False
        for u in g.neighbors(v):
            if alive[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    queue.append(u)
    core = [v for v in range(g.n) if alive[v]]
    start = core[0]
    nxt = min(u for u in g.neighbors(start) if alive[u])
    cycle = [start]
    prev, cur = start, nxt
    while cur != start:
        cycle.append(cur)
        prev, cur = cur, next(u for u in g.neighbors(cur) if alive[u] and u != prev)
    on_cycle = set(cycle)
    trees: dict[tuple[int, int], frozenset[int]] = {}
    for i, c in enumerate(cycle):
        roots = [u for u in g.neighbors(c) if u not in on_cycle]
        for j, r in enumerate(roots):
            seen = {r}
            stack = [r]
            while stack:
                x = stack.pop()
                for y in g.neighbors(x):
                    if y != c and y not in seen:
                        seen.add(y)
                        stack.append(y)
            trees[(i, j)] = frozenset(seen)
    return CycleDecomposition(tuple(cycle), trees, tuple(g.degree(c) for c in cycle))


# ----------------------------------------------------------------------
# enumeration


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected simple graph on ``n`` vertices, in edge-mask order."""
    if not 2 <= n <= 7:
        raise DomainError(f"connected-graph enumeration needs 2 <= n <= 7, got {n}")
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for code in range(1 << len(pairs)):
        masks = [0] * n
        c = code
        idx = 0
        while c:
            if c & 1:
                a, b = pairs[idx]
                masks[a] |= 1 << b
                masks[b] |= 1 << a
            c >>= 1
            idx += 1
        reach = frontier = 1
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= masks[u]
            frontier = nxt & ~reach
            reach |= frontier
        if reach == full:
            yield Graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])
