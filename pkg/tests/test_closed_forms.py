from __future__ import annotations

import random

import pytest

from leakyforcing.closed_forms import (
    SMALL_TABLE_CORRECTIONS, THEOREMS, family_value, small_table_value, structural_value,
    tree_value, unicyclic_Z1, unicyclic_Z2, unicyclic_Zl, unicyclic_value, z1_girth3_as_printed,
    z1_girth4plus_as_printed, z2_as_printed,
)
from leakyforcing.errors import DomainError, NotCoveredError, NotUnicyclicError
from leakyforcing.families import (
    cycle, generalized_petersen, generate, parse_family, path, random_tree, random_unicyclic,
)
from leakyforcing.graph import Graph
from leakyforcing.solver import leaky_forcing_number, verify_witness


def _exact(g, leaks):
    return leaky_forcing_number(g, leaks).value


def test_tree_values():
    assert tree_value(path(6), 1).value == 2
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    assert tree_value(g, 1).value == 3
    assert tree_value(g, 3).value == 5
    with pytest.raises(DomainError):
        tree_value(g, 0)
    with pytest.raises(DomainError):
        tree_value(cycle(4), 1)


def test_random_trees_match_exact():
    rng = random.Random(21)
    for _ in range(60):
        t = random_tree(rng.randint(2, 11), rng)
        for leaks in (1, 2, 3):
            rep = tree_value(t, leaks)
            assert rep.value == _exact(t, leaks)
            assert verify_witness(t, rep.witness, leaks)


def test_random_unicyclic_match_exact():
    rng = random.Random(22)
    labels = set()
    for _ in range(150):
        n = rng.randint(3, 11)
        g = random_unicyclic(n, rng.randint(3, min(n, 6)), rng)
        for leaks in (1, 2, 3):
            rep = unicyclic_value(g, leaks)
            labels.add(rep.case_label)
            assert rep.value == _exact(g, leaks), (g.edges(), leaks, rep)
            assert len(rep.witness) == rep.value and verify_witness(g, rep.witness, leaks)
    assert len(labels) >= 10


def test_girth3_statement_vs_proof():
    # triangle whose heavy vertex carries two leaves: cycle degrees (4, 2, 2)
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)])
    rep = unicyclic_Z1(g)
    assert rep.case_label == "girth3/case 3"
    assert rep.value == _exact(g, 1) == 3
    assert z1_girth3_as_printed(g) == 4


@pytest.mark.parametrize("girth,heavy", [(8, (0, 1, 4)), (9, (0, 1, 4)), (10, (0, 1, 5))])
def test_case_3_3(girth, heavy):
    edges = [(i, (i + 1) % girth) for i in range(girth)]
    edges += [(h, girth + j) for j, h in enumerate(heavy)]
    g = Graph(girth + len(heavy), edges)
    rep = unicyclic_Z1(g)
    assert rep.case_label == "girth4+/case 3.3"
    assert rep.value == _exact(g, 1) == z1_girth4plus_as_printed(g)
    assert verify_witness(g, rep.witness, 1)


def test_printed_two_leak_and_girth4_forms_agree():
    rng = random.Random(23)
    for _ in range(120):
        n = rng.randint(4, 11)
        g = random_unicyclic(n, rng.randint(3, min(n, 6)), rng)
        assert z2_as_printed(g) == unicyclic_Z2(g).value
        if unique_girth(g) >= 4:
            assert z1_girth4plus_as_printed(g) == unicyclic_Z1(g).value


def unique_girth(g):
    from leakyforcing.graph import unique_cycle
    return unique_cycle(g).girth


def test_unicyclic_domain():
    with pytest.raises(DomainError):
        unicyclic_Zl(cycle(5), 2)
    with pytest.raises(NotCoveredError):
        unicyclic_value(cycle(5), 0)
    with pytest.raises(NotUnicyclicError):
        unicyclic_Z1(path(4))


@pytest.mark.parametrize("spec,leaks,value", [
    ("path:7", 0, 1), ("path:7", 1, 2), ("path:7", 2, 7),
    ("complete:5", 3, 4), ("complete:5", 4, 5),
    ("cycle:6", 1, 2), ("cycle:6", 2, 6),
    ("complete_minus_edge:5", 1, 4), ("complete_join_leaf:5", 1, 4),
    ("petersen:5,2", 0, 5), ("petersen:7,2", 0, 6), ("petersen:12,2", 1, 6),
    ("petersen:13,3", 0, 8), ("petersen:6,1", 1, 4), ("petersen:3,1", 2, 4),
    ("petersen:9,4", 3, 18), ("star:5", 1, 4),
])
def test_family_values(spec, leaks, value):
    fs = parse_family(spec)
    rep = family_value(fs, leaks)
    assert rep.theorem in THEOREMS
    assert rep.value == value
    g = generate(fs)
    if g.n <= 16:
        assert rep.value == _exact(g, leaks)
    if rep.witness is not None:
        assert len(rep.witness) == rep.value and verify_witness(g, rep.witness, leaks)


@pytest.mark.parametrize("spec,leaks", [("petersen:9,1", 2), ("petersen:20,4", 1), ("cycle:5", -1)])
def test_family_not_covered(spec, leaks):
    with pytest.raises((NotCoveredError, DomainError)):
        family_value(parse_family(spec), leaks)


def test_small_table_correction():
    assert small_table_value(7, 2, 0) == SMALL_TABLE_CORRECTIONS[(7, 2, 0)] == 6
    assert _exact(generalized_petersen(7, 2), 0) == _exact(generalized_petersen(7, 3), 0) == 6


def test_structural_not_covered():
    with pytest.raises(NotCoveredError):
        structural_value(Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)]), 1)


def test_report_json():
    out = family_value(parse_family("cycle:5"), 1).to_json()
    assert out == {"value": 2, "theorem": "cycle", "case_label": "cycle/leaks<=1",
                   "base_count": None, "witness": [0, 1]}
