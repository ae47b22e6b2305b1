from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from helpers import naive_minimal_forts, naive_number
from leakyforcing.errors import DomainError, ResourceError
from leakyforcing.families import complete, cycle, path, random_connected_graph, star
from leakyforcing.forcing import is_leaky_forcing_set
from leakyforcing.forts import (
    enumerate_minimal_forts, exceptions, forts_of_size_at_most, is_fort, min_fort_hitting_set,
    min_hitting_set, packing_bound,
)
from leakyforcing.graph import Graph, to_mask
from leakyforcing.solver import leaky_forcing_number


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


def test_is_fort_examples():
    g = cycle(6)
    for leaks in range(3):
        assert is_fort(g, range(6), leaks)
    assert is_fort(complete(3), {0, 1}, 1)
    assert exceptions(complete(3), {0, 1}) == 0
    assert not is_fort(cycle(5), {0}, 1)
    assert exceptions(cycle(5), {0}) == 2
    with pytest.raises(DomainError):
        is_fort(g, set(), 1)
    with pytest.raises(DomainError):
        is_fort(g, {9}, 1)


def test_minimal_forts_star_and_triangle():
    forts = enumerate_minimal_forts(star(4), 1)
    assert {frozenset({v}) for v in (1, 2, 3)} <= {f.members for f in forts}
    assert [f.as_list() for f in enumerate_minimal_forts(complete(3), 1)] == [[0, 1], [0, 2], [1, 2]]


def test_minimal_forts_p3_no_leaks():
    assert {f.members for f in enumerate_minimal_forts(path(3), 0)} == naive_minimal_forts(path(3), 0)
    assert [f.as_list() for f in enumerate_minimal_forts(path(3), 0)] == [[0, 2]]


@settings(max_examples=80, deadline=None)
@given(small_graphs(), st.integers(0, 3))
def test_minimal_forts_match_brute_force(g, leaks):
    forts = enumerate_minimal_forts(g, leaks)
    assert {f.members for f in forts} == naive_minimal_forts(g, leaks)
    assert [f.sort_key() for f in forts] == sorted(f.sort_key() for f in forts)
    for f in forts:
        assert f.exception_count == exceptions(g, f.members) <= leaks
        for v in f.members:
            rest = f.members - {v}
            assert not rest or not is_fort(g, rest, leaks)


def test_fort_cap():
    with pytest.raises(ResourceError):
        enumerate_minimal_forts(path(21), 1)
    assert enumerate_minimal_forts(path(21), 1, cap=21)


def test_small_forts_and_packing():
    forts = forts_of_size_at_most(path(4), 1, 2)
    assert to_mask({0}) in forts and to_mask({3}) in forts
    assert packing_bound(forts) >= 2
    assert packing_bound([0b011, 0b110, 0b100]) == 2


@pytest.mark.parametrize("n", [2, 5, 8])
def test_hitting_path_one_leak(n):
    assert min_fort_hitting_set(path(n), 1)[0] == 2


@pytest.mark.parametrize("n", [3, 5, 7])
def test_hitting_complete_one_leak(n):
    assert min_fort_hitting_set(complete(n), 1)[0] == n - 1


def test_hitting_cycle_two_leaks():
    assert min_fort_hitting_set(cycle(4), 2) == (4, frozenset(range(4)))


def test_min_hitting_set_brute_force():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 9)
        sets = [to_mask(rng.sample(range(n), rng.randint(1, n))) for _ in range(rng.randint(0, 8))]
        best = None
        for r in range(n + 1):
            for c in combinations(range(n), r):
                m = to_mask(c)
                if all(m & s for s in sets):
                    best = m
                    break
            if best is not None:
                break
        assert min_hitting_set(sets, n) == best


def test_duality_with_subset_search():
    rng = random.Random(4)
    for _ in range(60):
        g = random_connected_graph(rng.randint(2, 9), rng)
        for leaks in range(4):
            value, witness = min_fort_hitting_set(g, leaks)
            exact = leaky_forcing_number(g, leaks)
            assert value == exact.value
            assert witness == exact.witness
            assert is_leaky_forcing_set(g, witness, leaks)[0]


def test_duality_against_naive_on_tiny_graphs():
    rng = random.Random(6)
    for _ in range(40):
        g = random_connected_graph(rng.randint(2, 6), rng)
        leaks = rng.randint(0, 2)
        assert min_fort_hitting_set(g, leaks) == naive_number(g, leaks)
