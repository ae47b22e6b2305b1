"""Leaky forts and the minimum fort-hitting-set oracle.

An ``l``-leaky fort is a nonempty ``F`` such that at most ``l`` vertices
outside ``F`` have exactly one neighbor in ``F``. A set is an ``l``-leaky
forcing set exactly when it meets every such fort, so a minimum hitting set
of the minimal forts gives the leaky forcing number independently of the
forcing simulation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import DomainError, ResourceError
from .graph import Graph, bits, from_mask, to_mask

DEFAULT_FORT_CAP = 20


@dataclass(frozen=True)
class Fort:
    members: frozenset[int]
    exception_count: int

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return len(self.members), tuple(sorted(self.members))

    def as_list(self) -> list[int]:
        return sorted(self.members)


def exceptions(g: Graph, f: Iterable[int]) -> int:
    """Number of vertices outside ``f`` with exactly one neighbor in ``f``."""
    fm = to_mask(f)
    count = 0
    for u in range(g.n):
        if not fm >> u & 1 and (g.masks[u] & fm).bit_count() == 1:
            count += 1
    return count


def is_fort(g: Graph, f: Iterable[int], leaks: int) -> bool:
    fm = to_mask(f)
    if not fm:
        raise DomainError("a fort must be nonempty")
    if fm >> g.n:
        raise DomainError("fort candidate is not a subset of V(G)")
    return exceptions(g, from_mask(fm)) <= leaks


def _fort_table(g: Graph, leaks: int) -> tuple[np.ndarray, np.ndarray]:
    """Exception counts and fort indicator for every subset, indexed by bitmask."""
    subsets = np.arange(1 << g.n, dtype=np.uint32)
    exc = np.zeros(subsets.shape, dtype=np.uint8)
    for u in range(g.n):
        single = np.bitwise_count(subsets & np.uint32(g.masks[u])) == 1
        outside = (subsets >> np.uint32(u)) & np.uint32(1) == 0
        exc += single & outside
    forts = exc <= leaks
    forts[0] = False
    return exc, forts


def enumerate_minimal_forts(g: Graph, leaks: int, cap: int = DEFAULT_FORT_CAP) -> list[Fort]:
    """All inclusion-minimal ``leaks``-leaky forts, sorted by (size, members)."""
    if g.n > cap:
        raise ResourceError(
            f"fort enumeration scans 2^n subsets; n={g.n} exceeds the cap {cap}, "
            "use the subset-search solver instead")
    if g.n == 0:
        return []
    exc, forts = _fort_table(g, leaks)
    # has_sub[m]: some fort is a subset of m (down-set closure over the lattice)
    has_sub = forts.copy()
    for i in range(g.n):
        view = has_sub.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    proper = np.zeros_like(forts)
    for i in range(g.n):
        pv = proper.reshape(-1, 2, 1 << i)
        pv[:, 1, :] |= has_sub.reshape(-1, 2, 1 << i)[:, 0, :]
    minimal = np.flatnonzero(forts & ~proper)
    out = [Fort(from_mask(int(m)), int(exc[m])) for m in minimal]
    out.sort(key=Fort.sort_key)
    return out


def forts_of_size_at_most(g: Graph, leaks: int, size: int) -> list[int]:
    """Bitmasks of all forts with at most ``size`` vertices (no minimality filter)."""
    found = []
    for r in range(1, size + 1):
        for combo in combinations(range(g.n), r):
            if exceptions(g, combo) <= leaks:
                found.append(to_mask(combo))
    return found


def packing_bound(forts: Iterable[int]) -> int:
    """Greedy count of pairwise disjoint forts (smallest first); a lower bound."""
    used = 0
    count = 0
    for f in sorted(forts, key=lambda m: (m.bit_count(), m)):
        if not f & used:
            used |= f
            count += 1
    return count


def _greedy_hitting(forts: list[int]) -> int:
    chosen = 0
    unhit = list(forts)
    while unhit:
        tally: dict[int, int] = {}
        for f in unhit:
            for v in bits(f):
                tally[v] = tally.get(v, 0) + 1
        v = min(tally, key=lambda x: (-tally[x], x))
        chosen |= 1 << v
        unhit = [f for f in unhit if not f >> v & 1]
    return chosen


def _lex_first_hitting(forts: list[int], n: int, budget: int) -> int | None:
    """Lexicographically least hitting set with at most ``budget`` vertices, or None.

    Include-before-exclude DFS over vertices in id order visits fixed-size sets
    in lexicographic order.
    """
    def search(i: int, chosen: int, left: int, unhit: list[int]) -> int | None:
        if not unhit:
            return chosen
        if left == 0 or i >= n:
            return None
        above = ~((1 << i) - 1)
        if any(not f & above for f in unhit):
            return None
        if packing_bound(f & above for f in unhit) > left:
            return None
        bit = 1 << i
        if any(f & bit for f in unhit):
            res = search(i + 1, chosen | bit, left - 1, [f for f in unhit if not f & bit])
            if res is not None:
                return res
        return search(i + 1, chosen, left, unhit)

    return search(0, 0, budget, forts)


def min_hitting_set(forts: list[int], n: int) -> int:
    """Minimum-cardinality, lexicographically least transversal of ``forts``."""
    forced = 0
    for f in forts:
        if f.bit_count() == 1:
            forced |= f
    rest = [f for f in forts if not f & forced]
    low = packing_bound(rest)
    high = _greedy_hitting(rest).bit_count()
    for k in range(low, high + 1):
        hit = _lex_first_hitting(rest, n, k)
        if hit is not None:
            return forced | hit
    raise AssertionError("greedy transversal bounds the search")  # pragma: no cover


def min_fort_hitting_set(g: Graph, leaks: int, cap: int = DEFAULT_FORT_CAP) -> tuple[int, frozenset[int]]:
    forts = [to_mask(f.members) for f in enumerate_minimal_forts(g, leaks, cap)]
    witness = min_hitting_set(forts, g.n)
    return witness.bit_count(), from_mask(witness)
