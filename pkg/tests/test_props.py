import itertools

import pytest
from hypothesis import given

from cbmg.digraph import image
from cbmg.gen import enumerate_bipartite
from cbmg.props import (
    QUOTIENT,
    RAW,
    check_hierarchy,
    check_n1,
    check_n2,
    check_n3,
    is_bitournament,
    is_bitransitive,
    reach_set,
    recognize_2cbmg,
)
from cbmg.quotient import quotient
from cbmg.report import PropertyReport, Verdict

from fixtures import bipartite_digraphs, c4, colored, gs, p2, sym, t1, t2

N = lambda g, s: image(g, s)  # noqa: E731


def replay_n2(g, witness):
    u, v = witness
    return v in N(g, N(g, N(g, {u}))) and v not in N(g, {u})


def replay_bitransitive(g, witness):
    x1, y1, x2, y2 = witness
    return g.has_edge(x1, y1) and g.has_edge(y1, x2) and g.has_edge(x2, y2) and not g.has_edge(x1, y2)


def test_n2_examples():
    assert check_n2(t1()).ok
    rep = check_n2(p2())
    assert rep.verdict is Verdict.VIOLATED and rep.witness == ("a", "d")
    assert check_n2(sym()).ok


def test_n1_examples():
    assert check_n1(t1()).ok
    g = colored([("a", "b"), ("c", "b"), ("b", "a")], {"a": "A", "b": "B", "c": "A"})
    assert check_n1(g).ok
    g = colored([("a", "b"), ("b", "c"), ("c", "b")], {"a": "A", "b": "B", "c": "A"})
    assert check_n1(g).ok
    g = colored([("a", "b"), ("b", "d"), ("c", "d"), ("d", "b")], {"a": "A", "b": "B", "c": "A", "d": "B"})
    rep = check_n1(g, RAW)
    assert rep.verdict is Verdict.VIOLATED and rep.witness == ("a", "c", "b")


def test_n3_examples():
    q = quotient(t2()).qgraph
    assert check_n3(q).ok
    g = colored([("a", "b"), ("c", "b")], {"a": "A", "b": "B", "c": "A"})
    assert check_n3(g, RAW).ok
    g = colored(
        [("a", "b"), ("c", "b"), ("c", "d"), ("x", "a")],
        {"a": "A", "c": "A", "b": "B", "d": "B", "x": "B"},
    )
    rep = check_n3(g, RAW)
    assert rep.verdict is Verdict.VIOLATED
    assert rep.witness == ("a", "c", "in-neighbourhoods differ")


def test_n1_n3_need_two_colors():
    g = colored([("a", "b")], {"a": "A", "b": "A"})
    assert check_n1(g).verdict is Verdict.PRECONDITION_FAILED
    assert check_n3(g).verdict is Verdict.PRECONDITION_FAILED


def test_recognize_examples():
    assert recognize_2cbmg(t1()).ok
    rep = recognize_2cbmg(p2())
    assert rep.verdict is Verdict.VIOLATED
    rep = recognize_2cbmg(c4())
    assert rep.verdict is Verdict.VIOLATED
    assert rep.witness == ("a1", "b2")


def test_recognize_preconditions():
    one_color = colored([("a", "b"), ("b", "a")], {"a": "A", "b": "A"})
    rep = recognize_2cbmg(one_color)
    assert rep.verdict is Verdict.PRECONDITION_FAILED
    assert rep.details["preconditions"]["two_colors"] is False


def test_bitransitive_examples():
    assert is_bitransitive(gs()).ok
    rep = is_bitransitive(p2())
    assert rep.verdict is Verdict.VIOLATED and rep.witness == ("a", "b", "c", "d")
    assert is_bitransitive(colored([("a", "b")], {"a": "A", "b": "B"})).ok
    assert is_bitransitive(t1()).verdict is Verdict.PRECONDITION_FAILED


def test_bitournament_examples():
    assert is_bitournament(gs()).ok
    rep = is_bitournament(p2())
    assert rep.verdict is Verdict.VIOLATED and rep.witness == ("a", "d")
    assert is_bitournament(colored([("a", "b")], {"a": "A", "b": "B"})).ok


def test_reach_sets_and_hierarchy():
    q = quotient(t2()).qgraph
    assert reach_set(q, "x1").members == {"x1", "y1"}
    assert reach_set(q, "y2").members == {"x1", "y1"}
    assert reach_set(p2(), "d").members == frozenset()
    assert check_hierarchy(q).ok
    g = colored([("a", "b"), ("c", "b"), ("a", "d")], {"a": "A", "c": "A", "b": "B", "d": "B"})
    assert check_hierarchy(g).ok
    g = colored(
        [("a", "b"), ("a", "c"), ("d", "c"), ("d", "e")],
        {"a": "A", "d": "A", "b": "B", "c": "B", "e": "B"},
    )
    rep = check_hierarchy(g)
    assert rep.verdict is Verdict.VIOLATED and rep.witness == ("a", "d")


def test_violated_needs_witness():
    with pytest.raises(ValueError):
        PropertyReport("x", Verdict.VIOLATED)


def test_n2_matches_bitransitive_on_enumerated_oriented_graphs():
    seen = 0
    for n_u, n_v in ((1, 1), (1, 2), (2, 2), (2, 3)):
        for g in enumerate_bipartite(n_u, n_v):
            bt = is_bitransitive(g)
            if bt.verdict is Verdict.PRECONDITION_FAILED:
                continue
            seen += 1
            n2 = check_n2(g)
            assert n2.ok == bt.ok
            if not n2.ok:
                assert replay_n2(g, n2.witness)
                assert replay_bitransitive(g, bt.witness)
    assert seen == 3 + 9 + 81 + 729


@given(bipartite_digraphs())
def test_scopes_agree_without_equivalent_vertices(g):
    if all(len(c) == 1 for c in quotient(g).classes):
        assert check_n1(g, RAW).ok == check_n1(g, QUOTIENT).ok
        assert check_n3(g, RAW).ok == check_n3(g, QUOTIENT).ok


@given(bipartite_digraphs())
def test_witnesses_replay(g):
    rep = check_n1(g, RAW)
    if not rep.ok:
        a, b, w = rep.witness
        assert a not in g.out(b) and b not in g.out(a)
        assert w in (N(g, {a}) & N(g, N(g, {b}))) | (N(g, {b}) & N(g, N(g, {a})))
    rep = check_n3(g, RAW)
    if not rep.ok:
        u, v, why = rep.witness
        assert N(g, {u}) & N(g, {v})
        assert u not in N(g, N(g, {v})) and v not in N(g, N(g, {u}))
        if why == "in-neighbourhoods differ":
            assert g.inn(u) != g.inn(v)
        else:
            assert not (g.out(u) <= g.out(v) or g.out(v) <= g.out(u))
    rep = check_hierarchy(g)
    if not rep.ok:
        ra, rb = (reach_set(g, x).members for x in rep.witness)
        assert ra & rb and not ra <= rb and not rb <= ra


def test_hierarchy_brute_force_on_small_graphs():
    for g in enumerate_bipartite(2, 2):
        sets = [N(g, {v}) | N(g, N(g, {v})) for v in g]
        laminar = all(a <= b or b <= a or not a & b for a, b in itertools.combinations(sets, 2))
        assert check_hierarchy(g).ok == laminar
