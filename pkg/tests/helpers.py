"""Independent reference implementations used as test oracles."""

from __future__ import annotations

import random
from itertools import combinations

from leakyforcing.graph import Graph


def naive_closure(g: Graph, start, leaks, rng: random.Random | None = None) -> frozenset[int]:
    """Apply one randomly chosen valid force at a time until none remain."""
    blue = set(start)
    leak = set(leaks)
    while True:
        moves = []
        for u in sorted(blue - leak):
            white = [w for w in g.neighbors(u) if w not in blue]
            if len(white) == 1:
                moves.append(white[0])
        if not moves:
            return frozenset(blue)
        blue.add(rng.choice(moves) if rng else moves[0])


def naive_is_leaky(g: Graph, s, leaks: int) -> bool:
    size = min(leaks, g.n)
    return all(naive_closure(g, s, L) == frozenset(range(g.n))
               for L in combinations(range(g.n), size))


def naive_number(g: Graph, leaks: int) -> tuple[int, frozenset[int]]:
    """Smallest leaky forcing set, first in lexicographic order among that size."""
    for size in range(g.n + 1):
        for s in combinations(range(g.n), size):
            if naive_is_leaky(g, s, leaks):
                return size, frozenset(s)
    raise AssertionError("unreachable")


def naive_is_fort(g: Graph, f, leaks: int) -> bool:
    f = set(f)
    return sum(1 for u in range(g.n) if u not in f and len(f & set(g.neighbors(u))) == 1) <= leaks


def naive_minimal_forts(g: Graph, leaks: int) -> set[frozenset[int]]:
    forts = [frozenset(s) for r in range(1, g.n + 1) for s in combinations(range(g.n), r)
             if naive_is_fort(g, s, leaks)]
    return {f for f in forts if not any(h < f for h in forts)}
