"""Checkers for the neighbourhood properties N1-N3 and related structure.

Every checker returns a :class:`PropertyReport`. Violations carry a witness
tuple that can be replayed against the definition; ``checked_pairs`` counts
how often the property's premise actually fired.

N1 and N3 take a ``scope``: ``"raw"`` quantifies over vertex pairs from
different equivalence classes of the graph itself, ``"quotient"`` over
distinct vertices of the quotient graph.
"""

from dataclasses import dataclass
from itertools import combinations

from .digraph import (
    ColoredDigraph,
    Digraph,
    image,
    is_oriented,
    sinks,
    underlying_components,
)
from .quotient import quotient
from .report import PropertyReport, holds, precondition_failed, violated

RAW = "raw"
QUOTIENT = "quotient"


def n2(g, u):
    """N(N(u))."""
    return image(g, g.out(u))


def n3(g, u):
    return image(g, n2(g, u))


def _two_colored(g):
    return isinstance(g, ColoredDigraph) and len(g.colors) == 2


def _scope_pairs(g, scope):
    """(graph, pairs) to quantify over for N1/N3."""
    if scope == QUOTIENT:
        q = quotient(g).qgraph
        return q, list(combinations(q.sorted_vertices(), 2))
    if scope == RAW:
        cls = quotient(g).class_of
        return g, [(u, v) for u, v in combinations(g.sorted_vertices(), 2) if cls[u] != cls[v]]
    raise ValueError(f"scope must be 'raw' or 'quotient', not {scope!r}")


def check_n2(g: Digraph) -> PropertyReport:
    """N(N(N(u))) is contained in N(u) for every vertex; witness ``(u, v)``."""
    for u in g.sorted_vertices():
        extra = n3(g, u) - g.out(u)
        if extra:
            return violated("N2", (u, min(extra)), len(g))
    return holds("N2", len(g))


def check_n1(g: Digraph, scope=QUOTIENT) -> PropertyReport:
    """Independent pairs: N(u) misses N(N(v)) and N(v) misses N(N(u)).

    Witness ``(u, v, w)`` with ``w`` in one of the intersections.
    """
    pid = f"N1[{scope}]"
    if not _two_colored(g):
        return precondition_failed(pid, "graph must carry exactly two colors")
    h, pairs = _scope_pairs(g, scope)
    fired = 0
    for u, v in pairs:
        if v in h.out(u) or u in h.out(v):
            continue
        fired += 1
        for a, b in ((u, v), (v, u)):
            bad = h.out(a) & n2(h, b)
            if bad:
                return violated(pid, (a, b, min(bad)), fired)
    return holds(pid, fired)


def check_n3(g: Digraph, scope=QUOTIENT) -> PropertyReport:
    """Pairs with a common out-neighbour and no 2-step path either way must have
    equal in-neighbourhoods and nested out-neighbourhoods.

    Witness ``(u, v, reason)``.
    """
    pid = f"N3[{scope}]"
    if not _two_colored(g):
        return precondition_failed(pid, "graph must carry exactly two colors")
    h, pairs = _scope_pairs(g, scope)
    fired = 0
    for u, v in pairs:
        nu, nv = h.out(u), h.out(v)
        if not nu & nv or u in n2(h, v) or v in n2(h, u):
            continue
        fired += 1
        if h.inn(u) != h.inn(v):
            return violated(pid, (u, v, "in-neighbourhoods differ"), fired)
        if not (nu <= nv or nv <= nu):
            return violated(pid, (u, v, "out-neighbourhoods not nested"), fired)
    return holds(pid, fired)


def recognize_2cbmg(g: Digraph) -> PropertyReport:
    """Decide whether ``g`` satisfies N1, N2 and N3 on every connected component.

    Exactly two colors and a proper coloring are hard preconditions. A sink
    alone disqualifies the graph (every 2-cBMG is sink-free); it is reported
    as a violation with witness ``(sink,)`` unless an N-property already fails.
    """
    pid = "2cBMG"
    pre = {
        "two_colors": _two_colored(g),
        "bipartite_proper": isinstance(g, ColoredDigraph) and g.is_bipartite_proper(),
        "sink_free": not sinks(g),
    }
    if not pre["two_colors"]:
        return precondition_failed(pid, "graph must carry exactly two colors", preconditions=pre)
    if not pre["bipartite_proper"]:
        return precondition_failed(pid, "an arc joins two vertices of the same color", preconditions=pre)

    components = []
    first_failure = None
    checked = 0
    for comp in underlying_components(g):
        sub = g.subgraph(comp)
        reports = [check_n1(sub, RAW), check_n2(sub), check_n3(sub, RAW)]
        checked += sum(r.checked_pairs for r in reports)
        components.append(
            {"vertices": sorted(comp), **{r.property_id: r.verdict.value for r in reports}}
        )
        bad = next((r for r in reports if not r.ok), None)
        if bad is not None and first_failure is None:
            first_failure = bad
    details = {"preconditions": pre, "components": components}
    if first_failure is not None:
        details["failed"] = first_failure.property_id
        return violated(pid, first_failure.witness, checked, **details)
    if not pre["sink_free"]:
        details["failed"] = "sink-free"
        return violated(pid, (sinks(g)[0],), checked, **details)
    return holds(pid, checked, **details)


def _bipartite_preconditions(g, pid):
    if not isinstance(g, ColoredDigraph) or not g.is_bipartite_proper():
        return precondition_failed(pid, "graph must be properly colored (bipartite)")
    if not is_oriented(g):
        return precondition_failed(pid, "graph must be oriented")
    return None


def is_bitransitive(g: Digraph) -> PropertyReport:
    """Every 3-arc path ``x1 -> y1 -> x2 -> y2`` forces ``x1 -> y2``."""
    pid = "bitransitive"
    failed = _bipartite_preconditions(g, pid)
    if failed:
        return failed
    fired = 0
    for x1 in g.sorted_vertices():
        for y1 in sorted(g.out(x1)):
            for x2 in sorted(g.out(y1)):
                for y2 in sorted(g.out(x2)):
                    fired += 1
                    if y2 not in g.out(x1):
                        return violated(pid, (x1, y1, x2, y2), fired)
    return holds(pid, fired)


def is_bitournament(g: Digraph) -> PropertyReport:
    """Exactly one arc between every pair of differently colored vertices."""
    pid = "bitournament"
    failed = _bipartite_preconditions(g, pid)
    if failed:
        return failed
    if len(g.colors) != 2:
        return precondition_failed(pid, "graph must carry exactly two colors")
    first, second = (g.color_class(c) for c in g.colors)
    checked = 0
    for u in first:
        for v in second:
            checked += 1
            if v not in g.out(u) and u not in g.out(v):
                return violated(pid, (u, v), checked)
    return holds(pid, checked)


@dataclass(frozen=True)
class ReachSet:
    source: str
    members: frozenset


def reach_set(g: Digraph, u) -> ReachSet:
    """N(u) together with N(N(u))."""
    return ReachSet(u, g.out(u) | n2(g, u))


def check_hierarchy(g: Digraph) -> PropertyReport:
    """Any two reach sets are nested or disjoint; witness is a crossing pair."""
    pid = "hierarchy"
    sets = {v: reach_set(g, v).members for v in g.sorted_vertices()}
    checked = 0
    for a, b in combinations(sorted(sets), 2):
        ra, rb = sets[a], sets[b]
        checked += 1
        if ra & rb and not (ra <= rb or rb <= ra):
            return violated(pid, (a, b), checked)
    return holds(pid, checked)


CHECKERS = {
    "n1": lambda g, scope=QUOTIENT: check_n1(g, scope),
    "n2": lambda g, scope=QUOTIENT: check_n2(g),
    "n3": lambda g, scope=QUOTIENT: check_n3(g, scope),
    "2cbmg": lambda g, scope=QUOTIENT: recognize_2cbmg(g),
    "bitransitive": lambda g, scope=QUOTIENT: is_bitransitive(g),
    "bitournament": lambda g, scope=QUOTIENT: is_bitournament(g),
    "hierarchy": lambda g, scope=QUOTIENT: check_hierarchy(g),
}
