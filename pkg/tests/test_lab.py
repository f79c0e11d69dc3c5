import networkx as nx
import pytest

from hatlab import check_theorem, enumerate_digraphs, make_game
from hatlab.digraphs import weakly_connected
from hatlab.errors import HatError, TooManyNodes, UnknownTheorem
from hatlab.lab import useful_properties
from hatlab.search import decide_ps
from hatlab.evaluator import Goal


def test_digraph_counts():
    assert [len(list(enumerate_digraphs(n))) for n in (1, 2, 3)] == [1, 4, 64]
    assert list(enumerate_digraphs(2)) == [frozenset(), {(0, 1)}, {(1, 0)}, {(0, 1), (1, 0)}]
    with pytest.raises(TooManyNodes):
        list(enumerate_digraphs(6))


def _iso_classes(n):
    reps = []
    for edges in enumerate_digraphs(n):
        g = nx.DiGraph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        if not any(nx.is_isomorphic(g, h) for h in reps):
            reps.append(g)
    return len(reps)


@pytest.mark.parametrize("n", [2, 3])
def test_up_to_iso_against_networkx(n):
    assert len(list(enumerate_digraphs(n, "up-to-iso"))) == _iso_classes(n)


def test_connected_only():
    expected = []
    for edges in enumerate_digraphs(3):
        g = nx.Graph()
        g.add_nodes_from(range(3))
        g.add_edges_from(edges)
        if nx.is_connected(g):
            expected.append(edges)
    assert list(enumerate_digraphs(3, "connected-only")) == expected
    assert all(weakly_connected(e, 3) for e in expected)


def test_f2vcyclic():
    r = check_theorem("f2vcyclic", {"n": 3})
    assert (r.instances, r.consistent, r.violations) == (64, 64, [])


def test_ffvcomplete():
    r = check_theorem("ffvcomplete", {"n": 3})
    assert r.instances == 64 and r.ok


def test_average():
    r = check_theorem("average", {"n": 3, "k": 2, "count": 100, "seed": 0})
    assert (r.instances, r.consistent) == (100, 100)
    assert "12" in r.notes[0]


def test_after_ffva_and_fiva():
    assert check_theorem("after-ffva").ok
    r = check_theorem("after-fiva")
    assert r.ok and r.instances > 0 and r.notes


def test_first_group():
    r = check_theorem("first-group", {"ks": (2,)})
    assert r.ok and r.instances > 4


def test_robust_parity():
    r = check_theorem("robust-parity", {"seed": 1})
    assert r.ok and r.instances == 3


def test_useful_props_detects_violation():
    g = make_game(3, 2, [[1, 2], [2], []], [1, 2, 2])
    c = decide_ps(g, Goal("errors", 1))
    if c.sat:
        assert useful_properties(g, c.predictor()) == []
    # prisoner 0 missing an edge breaks clause 1 whenever the game is SAT
    h = make_game(3, 2, [[1], [2], [1]], [1, 2, 2])
    from hatlab.strategies import constant_predictor
    assert "1:first-speaker-sees-all" in useful_properties(h, constant_predictor(h))


def test_errors():
    with pytest.raises(UnknownTheorem):
        check_theorem("nope")
    with pytest.raises(HatError):
        check_theorem("average", {"bogus": 1})


def test_report_json_stable():
    r = check_theorem("f2vcyclic", {"n": 2})
    assert list(r.to_json()) == ["theorem", "params", "instances", "consistent", "violations", "notes"]
    assert r.consistent + len(r.violations) == r.instances
