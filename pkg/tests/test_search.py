import networkx as nx
import pytest

from hatlab import (
    ColorSpace,
    FamilySpec,
    Goal,
    decide_ps,
    enumerate_digraphs,
    evaluate_exhaustive,
    hunt,
    make_game,
    ps_membership,
    verify_certificate,
)
from hatlab.errors import HatError, SpaceTooLarge
from hatlab.search import SearchCertificate, enumerate_family

C1 = Goal("correct", 1)
E1 = Goal("errors", 1)


def _vis(edges, n):
    return [sorted(b for (x, b) in edges if x == a) for a in range(n)]


def _has_cycle(edges, n):
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return not nx.is_directed_acyclic_graph(g)


def test_spec_examples(g22):
    c = decide_ps(g22, C1)
    assert c.verdict == "SAT" and verify_certificate(c)
    assert decide_ps(make_game(2, 3), C1).verdict == "UNSAT"
    assert decide_ps(make_game(3, 2, [[], [0], [1]]), C1).verdict == "UNSAT"


def test_sat_tables_replay(g52):
    c = decide_ps(g52, E1)
    assert c.sat
    rep = evaluate_exhaustive(g52, c.predictor())
    assert ps_membership(rep, E1)


@pytest.mark.parametrize("n", [2, 3])
def test_cyclic_equivalence_against_networkx(n):
    for edges in enumerate_digraphs(n):
        g = make_game(n, 2, _vis(edges, n))
        c = decide_ps(g, C1)
        assert (c.verdict == "SAT") == _has_cycle(edges, n)
        if c.sat:
            assert verify_certificate(c)


def _corpus():
    for k in (2, 3):
        for edges in enumerate_digraphs(3):
            yield make_game(3, k, _vis(edges, 3)), C1
    fam = FamilySpec((3,), ColorSpace.mod(2), (2, 3), None, "all")
    for g in enumerate_family(fam):
        yield g, E1


def test_pruning_and_symmetry_preserve_verdicts():
    for g, goal in _corpus():
        plain = decide_ps(g, goal, prune=False)
        for kw in ({}, {"symmetry": True}, {"symmetry": True, "prune": False}):
            other = decide_ps(g, goal, **kw)
            assert other.verdict == plain.verdict, (g.to_spec(), kw)
            if other.sat:
                assert verify_certificate(other)


def test_symmetry_cross_check_mod3_multi_inning():
    fam = FamilySpec((3,), ColorSpace.mod(3), (2,), 1, "all")
    for g in enumerate_family(fam):
        assert decide_ps(g, E1).verdict == decide_ps(g, E1, symmetry=True).verdict


def test_deterministic(g52):
    a, b = decide_ps(g52, E1), decide_ps(g52, E1)
    assert a.to_json() == b.to_json()


def test_monotone():
    g = make_game(3, 2, [[1, 2], [0, 2], [0, 1]])
    verdicts = [decide_ps(g, Goal("correct", m)).verdict for m in range(4)]
    assert verdicts == ["SAT", "SAT", "UNSAT", "UNSAT"]
    for m in range(4):
        if verdicts[m] == "SAT":
            assert all(v == "SAT" for v in verdicts[:m])


def test_unknown_on_budget():
    c = decide_ps(make_game(3, 4), C1, budget=5, prune=False)
    assert c.verdict == "Unknown" and c.nodes_explored == 5 and c.tables is None


def test_pigeonhole_unsat():
    assert decide_ps(make_game(3, 4), C1).verdict == "UNSAT"


def test_trivial_goals(g22):
    assert decide_ps(g22, Goal("correct", 0)).sat
    assert decide_ps(g22, Goal("correct", 3)).verdict == "UNSAT"


def test_space_cap():
    with pytest.raises(SpaceTooLarge):
        decide_ps(make_game(5, 4), C1, cap=1000)
    with pytest.raises(HatError):
        decide_ps(make_game(3, ColorSpace.integers()), C1)


def test_certificate_json_roundtrip(g22):
    c = decide_ps(g22, C1)
    back = SearchCertificate.from_json(c.to_json())
    assert back.to_json() == c.to_json() and verify_certificate(back)


def test_default_zero_fill(g52chain):
    c = decide_ps(g52chain, E1)
    assert c.sat
    # every entry is a color; unreached ones default to 0
    assert all(0 <= x < 2 for t in c.tables for x in t.table)


def test_hunt_cyclic_rows():
    fam = FamilySpec((2, 3), ColorSpace.mod(2), (1,), None, "all")
    rows = list(hunt(fam, C1))
    assert len(rows) == 4 + 64
    for r in rows:
        assert (r["verdict"] == "SAT") == r["profile"]["cyclic"]
        assert not any(f.startswith("violates") for f in r["flags"])


def test_hunt_empty_family():
    assert list(hunt(FamilySpec((3,), ColorSpace.mod(2), (5,), None, "all"), C1)) == []


def test_hunt_question_one_family():
    fam = FamilySpec((3,), ColorSpace.mod(2), (2,), 2, "all")
    rows = list(hunt(fam, E1))
    assert len(rows) == 3 * 64
    assert all({"S4", "S5", "S6"} <= set(r["profile"]) for r in rows)
    assert not any(f.startswith("violates") for r in rows for f in r["flags"])


def test_family_up_to_iso_agrees():
    full = FamilySpec((3,), ColorSpace.mod(2), (1,), None, "all")
    iso = FamilySpec((3,), ColorSpace.mod(2), (1,), None, "up-to-iso")
    v_full = {r["verdict"] for r in hunt(full, C1)}
    rows = list(hunt(iso, C1))
    assert len(rows) == 16
    assert {r["verdict"] for r in rows} == v_full


def test_family_parse():
    f = FamilySpec.parse("n=2..3,colors=3,IN=1|2,first=1,vis=up-to-iso")
    assert f.prisoners == (2, 3) and f.innings == (1, 2) and f.first_size == 1
    with pytest.raises(HatError):
        FamilySpec.parse("n=3,bogus=1")


def test_unpruned_exhaustion_two_prisoners_three_colors():
    c = decide_ps(make_game(2, 3), C1, prune=False)
    assert c.verdict == "UNSAT" and c.nodes_explored > 0


def test_family_first_inning_default():
    auto = list(enumerate_family(FamilySpec.parse("n=3,colors=2,IN=2")))
    assert len(auto) == 3 * 64 and all(len(g.inning_set(1)) == 2 for g in auto)
    assert len(list(enumerate_family(FamilySpec.parse("n=3,colors=2,IN=2,first=any")))) == 6 * 64
    assert len(list(enumerate_family(FamilySpec.parse("n=3,colors=2,IN=1")))) == 64
