from hypothesis import given

from cbmg.digraph import Digraph, is_independent
from cbmg.quotient import check_chromatic_preserved, check_connectivity_preserved, equivalence_classes, quotient
from cbmg.report import Verdict

from fixtures import bipartite_digraphs, colored, digraphs, sym, t1, t2


def test_t2_classes_and_quotient():
    g = t2()
    assert equivalence_classes(g) == [("x1", "x2"), ("y1",), ("y2",)]
    q = quotient(g)
    assert q.representative == ("x1", "y1", "y2")
    assert set(q.qgraph.edges()) == {("x1", "y1"), ("y1", "x1"), ("y2", "x1")}
    assert q.rep_of("x2") == "x1"
    assert q.members("x1") == ("x1", "x2")
    assert q.qgraph.color("x1") == "A"


def test_symmetric_pair_stays_split():
    assert equivalence_classes(sym()) == [("u",), ("v",)]


def test_edgeless_graph_collapses():
    g = Digraph(["a", "b", "c"])
    assert equivalence_classes(g) == [("a", "b", "c")]
    q = quotient(g)
    assert q.qgraph.vertices == ("a",)
    assert q.qgraph.n_edges == 0


def test_all_singletons_is_identity():
    g = t1()
    assert quotient(g).qgraph == g


def test_connectivity_reports():
    assert check_connectivity_preserved(t2()).verdict is Verdict.HOLDS
    cherries = colored(
        [("x", "y"), ("y", "x"), ("p", "q"), ("q", "p")],
        {"x": "A", "y": "B", "p": "A", "q": "B"},
    )
    rep = check_connectivity_preserved(cherries)
    assert rep.ok and rep.details["components"] == 2
    # edgeless: outside the sink-free standing assumption
    rep = check_connectivity_preserved(Digraph(["a", "b"]))
    assert rep.verdict is Verdict.VIOLATED
    assert rep.details["sink_free"] is False
    assert rep.details["connected_iff_holds"] is False
    assert set(rep.witness) == {"a", "b"}


def test_chromatic_reports():
    rep = check_chromatic_preserved(t2())
    assert rep.ok and rep.details == {"chromatic": 2, "quotient_chromatic": 2}
    assert check_chromatic_preserved(Digraph(["a", "b", "c"])).ok
    tri = Digraph.from_edges([("a", "b"), ("b", "c"), ("c", "a")])
    rep = check_chromatic_preserved(tri)
    assert rep.ok and rep.details["chromatic"] == 3


@given(digraphs())
def test_quotient_invariants(g):
    q = quotient(g)
    members = [v for cls in q.classes for v in cls]
    assert sorted(members) == sorted(g.vertices)
    for cls in q.classes:
        for u in cls:
            assert g.out(u) == g.out(cls[0]) and g.inn(u) == g.inn(cls[0])
        for i, u in enumerate(cls):
            for v in cls[i + 1:]:
                assert is_independent(g, u, v)
    # well-definedness
    for u, v in g.edges():
        for a in q.members(u):
            for b in q.members(v):
                assert g.has_edge(a, b)
    # idempotence
    assert all(len(c) == 1 for c in quotient(q.qgraph).classes)


@given(bipartite_digraphs())
def test_chromatic_preserved_on_bipartite(g):
    assert check_chromatic_preserved(g).ok
