"""Exact leaky forcing numbers.

``subset_search`` tries supersets of the mandatory vertices (degree at most
``l``) by increasing size, lexicographically, and returns the first set that
survives every leak placement. ``fort_hitting`` solves the dual hitting-set
problem over minimal forts. Disconnected graphs are solved per component.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .errors import DomainError, ResourceError
from .forcing import close_mask, is_leaky_forcing_set, leak_sets
from .forts import DEFAULT_FORT_CAP, forts_of_size_at_most, min_fort_hitting_set, packing_bound
from .graph import Graph, bits, from_mask

METHODS = ("subset_search", "fort_hitting")
SUBSET_CAP = 30


@dataclass
class SolveStats:
    candidates: int = 0
    leak_sets: int = 0


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: frozenset[int]
    method: str
    stats: SolveStats = field(default_factory=SolveStats, compare=False)

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "witness": sorted(self.witness),
            "method": self.method,
            "stats": {"candidates": self.stats.candidates, "leak_sets": self.stats.leak_sets},
        }


def mandatory_vertices(g: Graph, leaks: int) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) <= leaks)


class LeakChecker:
    """Adversarial verifier that tries recently failing leak sets first."""

    def __init__(self, g: Graph, leaks: int, stats: SolveStats | None = None):
        self.g = g
        self.masks = g.masks
        self.full = g.full_mask
        self.all_leaks = list(leak_sets(g.n, leaks))
        self.recent: list[int] = []
        self.stats = stats if stats is not None else SolveStats()

    def passes(self, blue: int) -> bool:
        masks, full = self.masks, self.full
        if close_mask(masks, blue) != full:
            return False
        for lm in self.recent:
            self.stats.leak_sets += 1
            if close_mask(masks, blue, lm) != full:
                return False
        tried = set(self.recent)
        for lm in self.all_leaks:
            if lm in tried:
                continue
            self.stats.leak_sets += 1
            if close_mask(masks, blue, lm) != full:
                self.recent.insert(0, lm)
                del self.recent[16:]
                return False
        return True


def _greedy_upper(g: Graph, leaks: int, checker: LeakChecker, start: int, deadline: float | None) -> int:
    """Shrink ``start`` one vertex at a time while it stays a leaky forcing set."""
    best = start
    for v in reversed(list(bits(start))):
        if deadline is not None and time.monotonic() > deadline:
            break
        if g.degree(v) <= leaks:
            continue
        trial = best & ~(1 << v)
        if checker.passes(trial):
            best = trial
    return best


def _subset_search(g: Graph, leaks: int, timeout: float | None) -> SolveResult:
    if g.n > SUBSET_CAP:
        raise ResourceError(f"subset search is capped at n={SUBSET_CAP}, got n={g.n}",
                            lower=len(mandatory_vertices(g, leaks)), upper=g.n)
    deadline = time.monotonic() + timeout if timeout is not None else None
    stats = SolveStats()
    checker = LeakChecker(g, leaks, stats)
    forced = mandatory_vertices(g, leaks)
    base = 0
    for v in forced:
        base |= 1 << v
    free = [v for v in range(g.n) if v not in forced]
    for size in range(len(free) + 1):
        for combo in combinations(free, size):
            stats.candidates += 1
            if deadline is not None and stats.candidates & 255 == 0 and time.monotonic() > deadline:
                raise _budget_error(g, leaks, checker, base, len(forced) + size, deadline)
            blue = base
            for v in combo:
                blue |= 1 << v
            if checker.passes(blue):
                return SolveResult(len(forced) + size, from_mask(blue), "subset_search", stats)
    raise AssertionError("V(G) is always a leaky forcing set")  # pragma: no cover


def _budget_error(g: Graph, leaks: int, checker: LeakChecker, base: int, exhausted: int,
                  deadline: float) -> ResourceError:
    small = forts_of_size_at_most(g, leaks, 2)
    lower = max(exhausted, packing_bound(small))
    best = _greedy_upper(g, leaks, checker, g.full_mask, deadline + 60.0)
    return ResourceError(
        f"time budget exhausted while testing sets of size {exhausted}",
        lower=lower, upper=best.bit_count(), best=from_mask(best))


def _solve_connected(g: Graph, leaks: int, method: str, timeout: float | None,
                     fort_cap: int) -> SolveResult:
    if method == "subset_search":
        return _subset_search(g, leaks, timeout)
    if method == "fort_hitting":
        value, witness = min_fort_hitting_set(g, leaks, fort_cap)
        return SolveResult(value, witness, "fort_hitting")
    raise DomainError(f"unknown method {method!r}; choose from {METHODS}")


def leaky_forcing_number(g: Graph, leaks: int, method: str = "subset_search",
                         timeout: float | None = None,
                         fort_cap: int = DEFAULT_FORT_CAP) -> SolveResult:
    """``Z_(leaks)(g)`` with a lexicographically least minimum witness."""
    if leaks < 0:
        raise DomainError("number of leaks must be non-negative")
    if g.n == 0:
        return SolveResult(0, frozenset(), method)
    comps = g.component_masks()
    if len(comps) == 1:
        return _solve_connected(g, leaks, method, timeout, fort_cap)
    value = 0
    witness: set[int] = set()
    stats = SolveStats()
    for comp in comps:
        sub, back = g.induced(bits(comp))
        res = _solve_connected(sub, leaks, method, timeout, fort_cap)
        value += res.value
        witness |= {back[v] for v in res.witness}
        stats.candidates += res.stats.candidates
        stats.leak_sets += res.stats.leak_sets
    return SolveResult(value, frozenset(witness), method, stats)


def solve_both(g: Graph, leaks: int, timeout: float | None = None) -> SolveResult:
    """Run both methods and insist they agree on value and witness."""
    a = leaky_forcing_number(g, leaks, "subset_search", timeout)
    b = leaky_forcing_number(g, leaks, "fort_hitting")
    if a.value != b.value:
        raise AssertionError(f"solver disagreement: subset_search={a.value}, fort_hitting={b.value}")
    return a


def monotonicity_audit(g: Graph, max_leaks: int, method: str = "subset_search") -> list[int]:
    """``[Z_0, ..., Z_max_leaks]``; raises if the sequence ever decreases."""
    values = [leaky_forcing_number(g, l, method).value for l in range(max_leaks + 1)]
    for l in range(1, len(values)):
        if values[l] < values[l - 1]:
            raise AssertionError(f"Z_{l}={values[l]} < Z_{l - 1}={values[l - 1]}")
    return values


def verify_witness(g: Graph, witness, leaks: int) -> bool:
    return is_leaky_forcing_set(g, witness, leaks)[0]
