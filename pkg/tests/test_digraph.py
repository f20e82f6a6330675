import itertools

import pytest
from hypothesis import given, settings

from cbmg import digraph as dg
from cbmg.digraph import ColoredDigraph, Digraph
from cbmg.errors import CapacityError, InputError
from cbmg.gen import enumerate_bipartite

from fixtures import bipartite_digraphs, c4, colored, digraphs, p2, sym, t1, t2


def brute_longest(g, closed, distinct_vertices):
    """Exhaustive DFS over edge sequences; only for tiny graphs."""
    best = 0
    edges = g.edges()

    def walk(seq, used):
        nonlocal best
        if len(seq) > 1 and (not closed or seq[-1] == seq[0]):
            best = max(best, len(seq) - 1)
            if distinct_vertices and closed:
                return
        for a, b in edges:
            if a != seq[-1] or (a, b) in used:
                continue
            if distinct_vertices and b in seq and not (closed and b == seq[0]):
                continue
            walk(seq + [b], used | {(a, b)})

    for v in g:
        walk([v], frozenset())
    return best


def test_neighbourhoods_on_t1():
    g = t1()
    assert dg.neighbourhood(g, "x1", dg.OUT) == {"y1"}
    assert dg.neighbourhood(g, "x1", dg.IN) == {"y1", "y2"}
    assert dg.image(g, {"x1"}) == {"y1"}
    assert dg.image(g, dg.image(g, {"x1"})) == {"x1"}
    assert dg.image(g, set()) == frozenset()


def test_isolated_vertex_and_unknown_vertex():
    g = Digraph(["z"], [])
    assert dg.neighbourhood(g, "z") == frozenset()
    with pytest.raises(InputError):
        dg.neighbourhood(g, "q")
    with pytest.raises(InputError):
        dg.image(g, {"q"})
    with pytest.raises(InputError):
        dg.reachable(g, "z", "q")


def test_triple_image_on_path():
    g = p2()
    assert dg.image(g, dg.image(g, dg.image(g, {"a"}))) == {"d"}


def test_independence():
    g = t1()
    assert dg.is_independent(g, "y1", "y2")
    assert not dg.is_independent(g, "x1", "y2")
    assert not dg.is_independent(sym(), "u", "v")
    with pytest.raises(InputError):
        dg.is_independent(g, "x1", "x1")


def test_out_domination():
    g = t2()
    assert dg.is_out_dominated(g, "y2", "y1")
    assert dg.is_out_dominated(g, "x1", "x1")
    assert not dg.is_out_dominated(p2(), "a", "c")


def test_orientation():
    assert dg.is_oriented(p2())
    assert not dg.is_oriented(t1())
    assert dg.is_oriented(Digraph())


def test_reachability():
    g = p2()
    assert dg.reachable(g, "a", "d")
    assert not dg.reachable(g, "d", "a")
    assert not dg.reachable(g, "a", "a")
    assert dg.reachable(sym(), "u", "u")


def test_longest_path():
    assert dg.longest_directed_path(p2())[0] == 3
    assert dg.longest_directed_path(Digraph.from_edges([("u", "v")]))[0] == 1
    length, witness = dg.longest_directed_path(c4())
    assert length == 3
    assert dg.is_walk(c4(), witness, distinct_vertices=True)


def test_longest_cycle():
    assert dg.longest_directed_cycle(c4())[0] == 4
    assert dg.longest_directed_cycle(p2()) == (0, ())
    assert dg.longest_directed_cycle(sym())[0] == 2


def test_longest_closed_trail():
    assert dg.longest_closed_trail(c4())[0] == 4
    assert dg.longest_closed_trail(p2())[0] == 0
    star = Digraph.from_edges([("u", "v"), ("v", "u"), ("u", "w"), ("w", "u")])
    length, witness = dg.longest_closed_trail(star)
    assert length == 4
    assert dg.is_walk(star, witness, distinct_edges=True, closed=True)


def test_acyclic_longest_path_has_no_cap():
    n = 40
    g = Digraph.from_edges([(f"v{i:02d}", f"v{i + 1:02d}") for i in range(n - 1)])
    assert dg.longest_directed_path(g)[0] == n - 1


def test_capacity_errors():
    n = 21
    ring = Digraph.from_edges([(f"v{i:02d}", f"v{(i + 1) % n:02d}") for i in range(n)])
    with pytest.raises(CapacityError):
        dg.longest_directed_path(ring)
    with pytest.raises(CapacityError):
        dg.longest_directed_cycle(ring)
    with pytest.raises(CapacityError):
        dg.longest_closed_trail(ring)
    assert dg.longest_directed_cycle(ring, bound=30)[0] == n
    # odd undirected cycle forces the exact search
    with pytest.raises(CapacityError):
        dg.chromatic_number(ring)


def test_components():
    assert dg.underlying_components(t1()) == [frozenset({"x1", "y1", "y2"})]
    two = Digraph.from_edges([("a", "b"), ("c", "d")])
    assert dg.underlying_components(two) == [frozenset("ab"), frozenset("cd")]
    assert dg.underlying_components(Digraph()) == []


def test_chromatic_number():
    assert dg.chromatic_number(Digraph(["a", "b", "c"])) == 1
    assert dg.chromatic_number(sym()) == 2
    assert dg.chromatic_number(Digraph.from_edges([("a", "b"), ("b", "c"), ("c", "a")])) == 3
    k4 = Digraph.from_edges(itertools.combinations("abcd", 2))
    assert dg.chromatic_number(k4) == 4


def test_construction_errors():
    with pytest.raises(InputError):
        Digraph(["a"], [("a", "b")])
    with pytest.raises(InputError):
        Digraph(["a"], [("a", "a")])
    with pytest.raises(InputError):
        ColoredDigraph(["a", "b"], [], {"a": "A"})


def test_colored_graph_properness():
    assert t1().is_bipartite_proper()
    bad = colored([("a", "b")], {"a": "A", "b": "A"})
    assert not bad.is_bipartite_proper()


@given(digraphs())
def test_transpose_consistency(g):
    g.check_invariants()
    for u in g:
        for v in g:
            assert (v in g.out(u)) == (u in g.inn(v))


@given(digraphs())
def test_independence_matches_images(g):
    for u, v in itertools.permutations(g.vertices, 2):
        expected = v not in dg.image(g, {u}) and u not in dg.image(g, {v})
        assert dg.is_independent(g, u, v) == expected


@settings(max_examples=60, deadline=None)
@given(digraphs(max_vertices=5))
def test_searches_agree_with_brute_force(g):
    cycle, cw = dg.longest_directed_cycle(g)
    trail, tw = dg.longest_closed_trail(g)
    path, pw = dg.longest_directed_path(g)
    assert cycle <= trail
    assert trail == brute_longest(g, closed=True, distinct_vertices=False)
    assert path == brute_longest(g, closed=False, distinct_vertices=True)
    if cycle:
        assert dg.is_walk(g, cw + (cw[0],), distinct_vertices=True, closed=True)
        assert cycle == brute_longest(g, closed=True, distinct_vertices=True)
    if trail:
        assert dg.is_walk(g, tw, distinct_edges=True, closed=True)
    if path:
        assert dg.is_walk(g, pw, distinct_vertices=True)


@given(bipartite_digraphs())
def test_bipartite_chromatic_bound(g):
    chi = dg.chromatic_number(g)
    assert chi <= 2
    assert (chi == 2) == (g.n_edges > 0)


@pytest.mark.slow
def test_bipartite_cycles_and_trails_are_even():
    for n_u, n_v in ((1, 1), (1, 2), (2, 2), (2, 3)):
        for g in enumerate_bipartite(n_u, n_v):
            assert dg.longest_directed_cycle(g)[0] % 2 == 0
            assert dg.longest_closed_trail(g)[0] % 2 == 0
