from __future__ import annotations

import random

import pytest

from helpers import naive_number
from leakyforcing.errors import DomainError, ResourceError
from leakyforcing.families import (
    complete, cycle, generalized_petersen, path, random_connected_graph, star,
)
from leakyforcing.graph import Graph
from leakyforcing.solver import (
    SUBSET_CAP, leaky_forcing_number, mandatory_vertices, monotonicity_audit, solve_both,
    verify_witness,
)


@pytest.mark.parametrize("g,leaks,value", [
    (path(5), 0, 1), (path(5), 1, 2), (path(5), 2, 5),
    (cycle(6), 1, 2), (cycle(6), 2, 6),
    (complete(4), 2, 3), (complete(4), 3, 4),
    (star(5), 1, 4), (generalized_petersen(5, 2), 1, 5),
])
def test_known_values(g, leaks, value):
    res = leaky_forcing_number(g, leaks)
    assert res.value == value == len(res.witness)
    assert verify_witness(g, res.witness, leaks)


def test_monotonicity_lists():
    assert monotonicity_audit(complete(4), 4) == [3, 3, 3, 4, 4]
    assert monotonicity_audit(path(4), 3) == [1, 2, 4, 4]
    assert monotonicity_audit(cycle(5), 2) == [2, 2, 5]


def test_mandatory_vertices():
    assert mandatory_vertices(star(4), 1) == frozenset({1, 2, 3})
    assert mandatory_vertices(complete(4), 2) == frozenset()


def test_disconnected_sum():
    g = Graph(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)])
    res = leaky_forcing_number(g, 1)
    assert res.value == 2 + 2 + 1
    assert verify_witness(g, res.witness, 1)
    assert leaky_forcing_number(Graph(0, []), 1).value == 0


def test_witness_is_lex_least():
    rng = random.Random(11)
    for _ in range(60):
        g = random_connected_graph(rng.randint(2, 7), rng)
        leaks = rng.randint(0, 3)
        res = leaky_forcing_number(g, leaks)
        assert (res.value, res.witness) == naive_number(g, leaks)


def test_methods_agree():
    rng = random.Random(12)
    for _ in range(30):
        g = random_connected_graph(rng.randint(2, 9), rng)
        for leaks in range(3):
            a = solve_both(g, leaks)
            b = leaky_forcing_number(g, leaks, "fort_hitting")
            assert a.value == b.value


def test_timeout_bounds_bracket_truth():
    with pytest.raises(ResourceError) as info:
        leaky_forcing_number(generalized_petersen(11, 3), 2, timeout=1.0)
    exc = info.value
    assert exc.lower <= 9 <= exc.upper
    assert verify_witness(generalized_petersen(11, 3), exc.best, 2)
    assert len(exc.best) == exc.upper


def test_subset_cap():
    with pytest.raises(ResourceError) as info:
        leaky_forcing_number(path(SUBSET_CAP + 1), 1)
    assert info.value.lower == 2 and info.value.upper == SUBSET_CAP + 1


def test_errors():
    with pytest.raises(DomainError):
        leaky_forcing_number(path(3), -1)
    with pytest.raises(DomainError):
        leaky_forcing_number(path(3), 1, method="magic")


def test_result_json():
    out = leaky_forcing_number(path(3), 1).to_json()
    assert out["value"] == 2 and out["witness"] == [0, 2] and out["method"] == "subset_search"
