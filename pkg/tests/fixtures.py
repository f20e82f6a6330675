"""Small hand-checked graphs and trees shared by the test modules."""

from hypothesis import strategies as st

from cbmg.digraph import ColoredDigraph, Digraph
from cbmg.phylo import build_cbmg, parse_newick

T1_NEWICK = "((x1#A,y1#B)I,y2#B)R;"
T2_NEWICK = "((x1#A,x2#A,y1#B)I,y2#B)R;"
CHERRY_NEWICK = "(x#A,y#B)R;"


def colored(edges, sigma, vertices=None):
    return ColoredDigraph(vertices or sorted(sigma), edges, sigma)


def t1():
    return build_cbmg(*parse_newick(T1_NEWICK))


def t2():
    return build_cbmg(*parse_newick(T2_NEWICK))


def p2():
    """Directed path a->b->c->d, colored alternately."""
    return colored([("a", "b"), ("b", "c"), ("c", "d")], {"a": "A", "b": "B", "c": "A", "d": "B"})


def c4():
    """Directed 4-cycle a1->b1->a2->b2->a1."""
    sigma = {"a1": "A", "a2": "A", "b1": "B", "b2": "B"}
    return colored([("a1", "b1"), ("b1", "a2"), ("a2", "b2"), ("b2", "a1")], sigma)


def gs():
    """Gamma_S for S={1,2,3,4}."""
    sigma = {"1": "odd", "2": "even", "3": "odd", "4": "even"}
    return colored([("1", "2"), ("1", "4"), ("2", "3"), ("3", "4")], sigma)


def sym(u="u", v="v"):
    return Digraph([u, v], [(u, v), (v, u)])


@st.composite
def digraphs(draw, max_vertices=6):
    n = draw(st.integers(0, max_vertices))
    labels = [f"v{i}" for i in range(n)]
    pairs = [(u, v) for u in labels for v in labels if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Digraph(labels, chosen)


@st.composite
def bipartite_digraphs(draw, max_side=3, oriented=False):
    """Properly 2-colored digraphs on sides a* / b*."""
    n_u = draw(st.integers(1, max_side))
    n_v = draw(st.integers(1, max_side))
    us = [f"a{i}" for i in range(1, n_u + 1)]
    vs = [f"b{i}" for i in range(1, n_v + 1)]
    edges = []
    for u in us:
        for v in vs:
            state = draw(st.integers(0, 2 if oriented else 3))
            if state in (1, 3):
                edges.append((u, v))
            if state in (2, 3):
                edges.append((v, u))
    sigma = {**{u: "A" for u in us}, **{v: "B" for v in vs}}
    return ColoredDigraph(us + vs, edges, sigma, ("A", "B"))
