from __future__ import annotations

import pytest

from leakyforcing.errors import DomainError
from leakyforcing.extremal import (
    audit_graph, classify_max, classify_min, exhaustive_audit, minimal_fort_profile,
)
from leakyforcing.families import (
    complete, complete_join_leaf, complete_minus_edge, cycle, path, star,
)
from leakyforcing.graph import Graph


def test_classify_min():
    assert classify_min(path(5)).family_tag == "Path"
    assert classify_min(cycle(5)).family_tag == "Cycle"
    assert not classify_min(star(4)).matches
    with pytest.raises(DomainError):
        classify_min(Graph(3, [(0, 1)]))


@pytest.mark.parametrize("g,tag", [
    (complete(5), "Complete"), (star(5), "Star"), (complete_join_leaf(5), "CompleteJoinLeaf"),
    (complete_minus_edge(5), "CompleteMinusEdge"), (path(5), None), (complete(3), "Complete"),
])
def test_classify_max(g, tag):
    assert classify_max(g).family_tag == tag


def test_minimal_fort_profile_complete():
    assert minimal_fort_profile(complete(5), 1)
    assert not minimal_fort_profile(path(5), 1)


def test_audit_graph_clean():
    for g in (path(5), cycle(6), complete(5), star(5), complete_join_leaf(5)):
        assert audit_graph(g)[1] == []


def test_exhaustive_audit_small():
    rep = exhaustive_audit(5)
    assert rep.ok
    assert rep.counts == {2: 1, 3: 4, 4: 38, 5: 728}
    out = rep.to_json()
    assert out["violations"] == [] and out["complete"] and "runtime_seconds" not in out


def test_exhaustive_audit_budget():
    rep = exhaustive_audit(6, budget=0.0)
    assert not rep.complete and rep.progress is not None
    with pytest.raises(DomainError):
        exhaustive_audit(8)
