"""Leaky color change rule: closure, adversarial verification, feasible forcers.

A blue vertex that is not a leak forces its unique white neighbor. Sets are
passed around as frozensets at the API boundary and as int bitmasks inside.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .errors import DomainError
from .graph import Graph, bits, from_mask, to_mask

Force = tuple[int, int]


def close_mask(masks: tuple[int, ...], blue: int, leaks: int = 0,
               target: int = -1, only_forcer: int = -1) -> int:
    """Bitmask closure of ``blue`` under the leaky rule.

    If ``target`` is given, that vertex may only be forced by ``only_forcer``.
    Worklist driven: a vertex is re-examined only when a neighbor turns blue.
    """
    tbit = 1 << target if target >= 0 else 0
    stack = []
    m = blue & ~leaks
    while m:
        low = m & -m
        stack.append(low.bit_length() - 1)
        m ^= low
    while stack:
        v = stack.pop()
        w = masks[v] & ~blue
        if not w or w & (w - 1):
            continue
        if w == tbit and v != only_forcer:
            continue
        blue |= w
        u = w.bit_length() - 1
        m = (masks[u] & blue | w) & ~leaks
        while m:
            low = m & -m
            stack.append(low.bit_length() - 1)
            m ^= low
    return blue


def closure(g: Graph, start: Iterable[int], leaks: Iterable[int] = ()) -> tuple[frozenset[int], tuple[Force, ...]]:
    """Final blue set and a reproducible chronology.

    Each round collects every force valid in the round's starting coloring and
    applies them in order of target id, each target taking its lowest-id
    forcer.
    """
    blue = to_mask(start)
    leak = to_mask(leaks)
    if blue >> g.n or leak >> g.n:
        raise DomainError("start and leak sets must be subsets of V(G)")
    steps: list[Force] = []
    while True:
        by_target: dict[int, int] = {}
        for v in bits(blue & ~leak):
            w = g.masks[v] & ~blue
            if w and not w & (w - 1):
                t = w.bit_length() - 1
                if t not in by_target or v < by_target[t]:
                    by_target[t] = v
        if not by_target:
            return from_mask(blue), tuple(steps)
        for t in sorted(by_target):
            steps.append((by_target[t], t))
            blue |= 1 << t


def replay(g: Graph, start: Iterable[int], leaks: Iterable[int], chronology: Iterable[Force]) -> frozenset[int]:
    """Apply a chronology step by step, validating each force; returns the blue set."""
    blue = set(start)
    leak = set(leaks)
    for u, v in chronology:
        white = [w for w in g.neighbors(u) if w not in blue]
        if u not in blue or u in leak or white != [v]:
            raise DomainError(f"invalid force {u} -> {v}")
        blue.add(v)
    return frozenset(blue)


def leak_sets(n: int, leaks: int):
    """Leak sets of size ``min(leaks, n)`` as bitmasks, in lexicographic order."""
    for combo in combinations(range(n), min(leaks, n)):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m


def is_leaky_forcing_set(g: Graph, s: Iterable[int], leaks: int) -> tuple[bool, frozenset[int] | None]:
    """Adversarial check over every leak set of size ``min(leaks, n)``.

    Returns ``(True, None)`` or ``(False, L)`` with ``L`` the lexicographically
    first leak set that stops ``s`` from coloring all of ``V``. Smaller leak
    sets need no check: removing leaks never shrinks the closure.
    """
    if leaks < 0:
        raise DomainError("number of leaks must be non-negative")
    blue = to_mask(s)
    if blue >> g.n:
        raise DomainError("forcing set must be a subset of V(G)")
    full = g.full_mask
    for lm in leak_sets(g.n, leaks):
        if close_mask(g.masks, blue, lm) != full:
            return False, from_mask(lm)
    return True, None


def feasible_forcers(g: Graph, s: Iterable[int], leaks: Iterable[int], v: int) -> frozenset[int]:
    """Neighbors ``u`` of ``v`` such that some valid chronology has ``u`` force ``v``."""
    blue = to_mask(s)
    if blue >> v & 1:
        raise DomainError(f"vertex {v} is already in the starting set")
    leak = to_mask(leaks)
    vbit = 1 << v
    return frozenset(
        u for u in g.neighbors(v)
        if not leak >> u & 1 and close_mask(g.masks, blue, leak, target=v, only_forcer=u) & vbit
    )


def forcer_counts(g: Graph, s: Iterable[int], leaks: Iterable[int] = ()) -> dict[int, int]:
    """Number of feasible forcers for every vertex outside ``s``."""
    sset = frozenset(s)
    return {v: len(feasible_forcers(g, sset, leaks, v)) for v in range(g.n) if v not in sset}


def is_zero_forcing_set(g: Graph, s: Iterable[int]) -> bool:
    return close_mask(g.masks, to_mask(s)) == g.full_mask
