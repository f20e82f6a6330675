"""Quotient by the relation "same out- and same in-neighbourhood"."""

from dataclasses import dataclass

from .digraph import ColoredDigraph, Digraph, chromatic_number, is_sink_free, underlying_components
from .errors import InvariantError
from .report import PropertyReport, Verdict, holds


@dataclass(frozen=True)
class QuotientGraph:
    classes: tuple  # tuple of label-sorted tuples, ordered by smallest member
    representative: tuple  # class index -> smallest member
    qgraph: Digraph
    class_of: dict

    def rep_of(self, v):
        return self.representative[self.class_of[v]]

    def members(self, rep):
        return self.classes[self.class_of[rep]]

    def to_dict(self):
        return {
            "classes": [list(c) for c in self.classes],
            "representatives": list(self.representative),
            "edges": [list(e) for e in self.qgraph.edges()],
        }


def _key(g, v):
    if isinstance(g, ColoredDigraph):
        return g.out(v), g.inn(v), g.color(v)
    return g.out(v), g.inn(v)


def equivalence_classes(g: Digraph):
    """Partition of the vertices by the pair (out-neighbourhood, in-neighbourhood).

    On a colored graph the color is part of the key. It only separates
    isolated vertices: in a properly colored graph any shared neighbour
    forces a shared color. For properly colored sink-free graphs this is
    checked rather than assumed.
    """
    groups = {}
    for v in g.sorted_vertices():
        groups.setdefault(_key(g, v), []).append(v)
    classes = sorted(tuple(members) for members in groups.values())
    if isinstance(g, ColoredDigraph) and g.is_bipartite_proper() and is_sink_free(g):
        plain = {(g.out(v), g.inn(v)) for v in g}
        if len(plain) != len(classes):
            raise InvariantError("equivalent vertices with different colors in a sink-free proper graph")
    for members in classes:
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if v in g.out(u) or u in g.out(v):
                    raise InvariantError(f"equivalent vertices {u}, {v} are adjacent")
    return classes


def has_equivalent_vertices(g: Digraph) -> bool:
    return len({_key(g, v) for v in g}) < len(g)


def quotient(g: Digraph) -> QuotientGraph:
    classes = equivalence_classes(g)
    class_of = {v: i for i, members in enumerate(classes) for v in members}
    reps = tuple(members[0] for members in classes)

    arcs_between = {}
    for u, v in g.edges():
        key = class_of[u], class_of[v]
        arcs_between[key] = arcs_between.get(key, 0) + 1
    for (a, b), count in arcs_between.items():
        if count != len(classes[a]) * len(classes[b]):
            raise InvariantError(f"arcs between classes {reps[a]} and {reps[b]} are not all-or-nothing")
    edges = [(reps[a], reps[b]) for a, b in arcs_between]

    if isinstance(g, ColoredDigraph):
        qgraph = ColoredDigraph(reps, edges, {r: g.color(r) for r in reps}, g.colors)
    else:
        qgraph = Digraph(reps, edges)
    return QuotientGraph(tuple(classes), reps, qgraph, class_of)


def check_connectivity_preserved(g: Digraph) -> PropertyReport:
    """Compare component counts of ``g`` and its quotient.

    The weaker "connected iff quotient connected" form is reported in
    ``details``. Graphs with sinks (e.g. edgeless ones) fall outside the
    standing assumptions; they are evaluated anyway and flagged.
    """
    pid = "quotient.connectivity"
    q = quotient(g)
    comps_g = underlying_components(g)
    comps_q = underlying_components(q.qgraph)
    details = {
        "components": len(comps_g),
        "quotient_components": len(comps_q),
        "connected_iff_holds": (len(comps_g) <= 1) == (len(comps_q) <= 1),
        "sink_free": is_sink_free(g),
    }
    if len(comps_g) == len(comps_q):
        return holds(pid, len(g), **details)
    # two vertices of different components whose classes share a quotient component
    comp_index = {q.rep_of(v): i for i, comp in enumerate(comps_q) for v in comp}
    seen = {}
    witness = None
    for comp in comps_g:
        v = min(comp)
        k = comp_index[q.rep_of(v)]
        if k in seen:
            witness = (seen[k], v)
            break
        seen[k] = v
    return PropertyReport(pid, Verdict.VIOLATED, witness, len(g), details)


def check_chromatic_preserved(g: Digraph, bound=None) -> PropertyReport:
    pid = "quotient.chromatic"
    kwargs = {} if bound is None else {"bound": bound}
    q = quotient(g)
    chi_g = chromatic_number(g, **kwargs)
    chi_q = chromatic_number(q.qgraph, **kwargs)
    details = {"chromatic": chi_g, "quotient_chromatic": chi_q}
    if chi_g == chi_q:
        return holds(pid, 1, **details)
    return PropertyReport(pid, Verdict.VIOLATED, (str(chi_g), str(chi_q)), 1, details)
