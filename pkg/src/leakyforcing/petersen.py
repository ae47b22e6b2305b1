"""Generalized Petersen constructions and their adversarial verification.

Vertex layout follows :mod:`leakyforcing.families`: outer ``y_i`` is id
``i-1`` and inner ``x_i`` is id ``n+i-1``. Blocks have width ``4k+4``; block
``i`` covers indices ``(4k+4)(i-1)+1 .. (4k+4)i`` with

* ``A_i``: outer vertices at the first ``2k+2`` indices,
* ``B_i``: inner vertices at those indices,
* ``C_i``, ``D_i``: outer and inner vertices at the last ``2k+2`` indices.

Indices above ``n`` are simply absent, so the last block may be truncated.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

from .closed_forms import PRINTED_SMALL_TABLE
from .errors import DomainError, ResourceError
from .families import check_petersen_params, generalized_petersen, inner, outer, petersen_label
from .forcing import close_mask, forcer_counts, is_leaky_forcing_set
from .forts import forts_of_size_at_most, packing_bound
from .graph import Graph, to_mask
from .solver import leaky_forcing_number

SET_KINDS = ("one_leaky", "two_leaky", "all_A_blocks")


@dataclass(frozen=True)
class BlockPartition:
    n: int
    k: int
    blocks: tuple[tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]], ...]

    @property
    def block_width(self) -> int:
        return 4 * self.k + 4

    @property
    def complete_block_count(self) -> int:
        return self.n // self.block_width

    @property
    def truncated(self) -> bool:
        return self.n % self.block_width != 0

    def a_union(self) -> frozenset[int]:
        out: set[int] = set()
        for a, _, _, _ in self.blocks:
            out |= a
        return frozenset(out)


def block_partition(n: int, k: int) -> BlockPartition:
    check_petersen_params(n, k)
    width = 4 * k + 4
    half = 2 * k + 2
    count = -(-n // width)
    blocks = []
    for i in range(1, count + 1):
        base = width * (i - 1)
        first = [j for j in range(base + 1, base + half + 1) if j <= n]
        second = [j for j in range(base + half + 1, base + width + 1) if j <= n]
        blocks.append((
            frozenset(outer(n, j) for j in first),
            frozenset(inner(n, j) for j in first),
            frozenset(outer(n, j) for j in second),
            frozenset(inner(n, j) for j in second),
        ))
    return BlockPartition(n, k, tuple(blocks))


def one_leaky_set(n: int, k: int) -> frozenset[int]:
    """``{x_1, ..., x_2k, y_k, y_k+1}``."""
    check_petersen_params(n, k)
    return frozenset([inner(n, i) for i in range(1, 2 * k + 1)] + [outer(n, k), outer(n, k + 1)])


def all_A_blocks(n: int, k: int) -> frozenset[int]:
    """Union of the ``A_i``; requires ``n >= 6k+6`` (two complete blocks' worth)."""
    check_petersen_params(n, k)
    if n < 6 * k + 6:
        raise DomainError(f"the block set needs n >= 6k+6 = {6 * k + 6}, got n={n}")
    return block_partition(n, k).a_union()


def two_leaky_set(n: int, k: int) -> frozenset[int]:
    """Union of the ``A_i`` under the hypotheses ``7 <= k <= (n-1)/2``, ``n >= 10k+10``."""
    if k < 7:
        raise DomainError(f"the two-leak construction needs k >= 7, got k={k}")
    if 2 * k > n - 1:
        raise DomainError(f"the two-leak construction needs k <= (n-1)/2, got n={n}, k={k}")
    if n < 10 * k + 10:
        raise DomainError(f"the two-leak construction needs n >= 10k+10 = {10 * k + 10}, got n={n}")
    s = block_partition(n, k).a_union()
    assert len(s) <= -(-n // (4 * k + 4)) * (2 * k + 2)
    return s


def construction_set(n: int, k: int, set_kind: str) -> frozenset[int]:
    builders = {"one_leaky": one_leaky_set, "two_leaky": two_leaky_set, "all_A_blocks": all_A_blocks}
    if set_kind not in builders:
        raise DomainError(f"unknown set kind {set_kind!r}; choose from {', '.join(SET_KINDS)}")
    return builders[set_kind](n, k)


# ----------------------------------------------------------------------
# verification


@dataclass
class VerificationReport:
    n: int
    k: int
    leaks: int
    set_kind: str
    members: frozenset[int]
    ok: bool
    counterexample: frozenset[int] | None
    forcer_counts: dict[int, int] = field(default_factory=dict)

    @property
    def min_forcers(self) -> int | None:
        return min(self.forcer_counts.values(), default=None)

    def to_json(self) -> dict:
        n = self.n
        return {
            "n": n,
            "k": self.k,
            "leaks": self.leaks,
            "set_kind": self.set_kind,
            "size": len(self.members),
            "set": [petersen_label(n, v) for v in sorted(self.members)],
            "ok": self.ok,
            "counterexample": None if self.counterexample is None
            else [petersen_label(n, v) for v in sorted(self.counterexample)],
            "min_forcers": self.min_forcers,
            "forcer_counts": {petersen_label(n, v): c for v, c in sorted(self.forcer_counts.items())},
        }


def verify_construction(n: int, k: int, leaks: int, set_kind: str,
                        with_forcers: bool = True) -> VerificationReport:
    """Adversarially check a construction against every leak set of size ``leaks``.

    ``forcer_counts`` gives, under no leaks, how many neighbors of each
    vertex outside the set can be the one that forces it.
    """
    s = construction_set(n, k, set_kind)
    g = generalized_petersen(n, k)
    ok, bad = is_leaky_forcing_set(g, s, leaks)
    counts = forcer_counts(g, s) if with_forcers else {}
    return VerificationReport(n, k, leaks, set_kind, s, ok, bad, counts)


def complete_blocks_zero_forcing(n: int, k: int) -> list[bool]:
    """For each full-width ``A_i``: does it alone force the whole graph?"""
    g = generalized_petersen(n, k)
    part = block_partition(n, k)
    return [close_mask(g.masks, to_mask(a)) == g.full_mask
            for a, _, _, _ in part.blocks if len(a) == 2 * k + 2]


def gap_probe(k: int, ns=None) -> list[dict]:
    """Check the block set with two leaks for ``6k+6 <= n < 10k+10``; reports only."""
    if ns is None:
        ns = range(6 * k + 6, 10 * k + 10)
    out = []
    for n in ns:
        g = generalized_petersen(n, k)
        s = all_A_blocks(n, k)
        ok, bad = is_leaky_forcing_set(g, s, 2)
        out.append({
            "n": n, "k": k, "size": len(s), "two_leaky": ok,
            "counterexample": None if bad is None else [petersen_label(n, v) for v in sorted(bad)],
        })
    return out


# ----------------------------------------------------------------------
# small-case table


FAST_CELLS = [(n, 2) for n in range(5, 10)] + [(n, 3) for n in range(7, 10)]
SLOW_CELLS = [(10, 3), (11, 3)]


@dataclass
class TableCell:
    n: int
    k: int
    leaks: int
    printed: int
    computed: int | None
    status: str
    lower: int | None = None
    upper: int | None = None
    seconds: float = 0.0

    @property
    def diff(self) -> int | None:
        return None if self.computed is None else self.computed - self.printed

    def brackets_printed(self) -> bool:
        if self.computed is not None:
            return self.computed == self.printed
        return self.lower is not None and self.upper is not None and self.lower <= self.printed <= self.upper

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "leaks": self.leaks, "printed": self.printed,
                "computed": self.computed, "diff": self.diff, "status": self.status,
                "lower": self.lower, "upper": self.upper}


def table_cell(n: int, k: int, leaks: int, timeout: float | None = None) -> TableCell:
    printed = PRINTED_SMALL_TABLE[(n, k)][leaks]
    g = generalized_petersen(n, k)
    t0 = time.monotonic()
    try:
        res = leaky_forcing_number(g, leaks, timeout=timeout)
    except ResourceError as exc:
        return TableCell(n, k, leaks, printed, None, "timeout", exc.lower, exc.upper,
                         time.monotonic() - t0)
    return TableCell(n, k, leaks, printed, res.value, "ok", res.value, res.value, time.monotonic() - t0)


def small_case_table(slow: bool = False, timeout: float | None = None) -> list[TableCell]:
    """Recompute every small-table cell with the exact solver; timeouts are recorded."""
    cells = FAST_CELLS + (SLOW_CELLS if slow else [])
    return [table_cell(n, k, l, timeout) for n, k in cells for l in range(3)]


def table_csv(cells: list[TableCell]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "leaks", "printed", "computed", "diff", "status", "lower", "upper"])
    for c in cells:
        w.writerow([c.n, c.k, c.leaks, c.printed,
                    "" if c.computed is None else c.computed,
                    "" if c.diff is None else c.diff, c.status,
                    "" if c.lower is None else c.lower, "" if c.upper is None else c.upper])
    return buf.getvalue()


def table_json(cells: list[TableCell]) -> str:
    return json.dumps([c.to_json() for c in cells], sort_keys=True, indent=2)


def lower_bound_from_small_forts(g: Graph, leaks: int) -> int:
    return packing_bound(forts_of_size_at_most(g, leaks, 2))


# ----------------------------------------------------------------------
# DOT export


def to_dot(g: Graph, blue=(), labels=None, name: str = "G") -> str:
    """Graphviz source with the ``blue`` vertices filled."""
    blue = set(blue)
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        label = labels(v) if labels else str(v)
        style = ' style=filled fillcolor="#4a90d9"' if v in blue else ""
        lines.append(f'  {v} [label="{label}"{style}];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def petersen_dot(n: int, k: int, blue=()) -> str:
    return to_dot(generalized_petersen(n, k), blue, lambda v: petersen_label(n, v), f"P_{n}_{k}")
