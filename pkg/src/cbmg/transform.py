"""Structural constructions on colored digraphs.

Covers symmetric-edge removal, odd-even graphs, the number-set bitournaments
(arcs from smaller to larger numbers of opposite parity), searches for
representations of a given graph in either family, and the degree/path-length
report.
"""

from dataclasses import dataclass

from .digraph import (
    EXACT_SEARCH_BOUND,
    ColoredDigraph,
    is_acyclic,
    is_oriented,
    longest_directed_cycle,
    longest_directed_path,
    topological_order,
)
from .errors import CapacityError, InputError, InvariantError, PreconditionFailed
from .props import is_bitournament

U_COLOR, V_COLOR = "U", "V"
EVEN, ODD = "even", "odd"
ODD_EVEN_MAX_VERTICES = 8


@dataclass(frozen=True)
class OddEvenSpec:
    A: frozenset
    O: frozenset

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(int(a) for a in self.A))
        object.__setattr__(self, "O", frozenset(int(o) for o in self.O))
        bad_a = [a for a in self.A if a < 0 or a % 2]
        bad_o = [o for o in self.O if o < 1 or not o % 2]
        if bad_a:
            raise InputError(f"A must hold non-negative even integers, got {sorted(bad_a)}")
        if bad_o:
            raise InputError(f"O must hold positive odd integers, got {sorted(bad_o)}")

    def to_dict(self):
        return {"A": sorted(self.A), "O": sorted(self.O)}


@dataclass(frozen=True)
class NumberSetSpec:
    S: frozenset

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(int(s) for s in self.S))
        if not self.S:
            raise InputError("S must be non-empty")
        if min(self.S) < 1:
            raise InputError("S must hold natural numbers >= 1")

    def to_dict(self):
        return {"S": sorted(self.S)}


@dataclass(frozen=True)
class Representation:
    spec: object
    mapping: dict  # vertex label -> number

    def to_dict(self):
        return {**self.spec.to_dict(), "map": dict(sorted(self.mapping.items()))}


@dataclass(frozen=True)
class DegreeBoundReport:
    k: int
    h: int
    longest_cycle: int
    longest_path: int
    bound_met: bool
    cycle_witness: tuple = ()
    path_witness: tuple = ()

    def to_dict(self):
        return {
            "k": self.k,
            "h": self.h,
            "longest_cycle": self.longest_cycle,
            "longest_path": self.longest_path,
            "bound_met": self.bound_met,
            "cycle_witness": list(self.cycle_witness),
            "path_witness": list(self.path_witness),
        }


def remove_symmetric_edges(g):
    """Keep one arc of each 2-cycle: the one whose source label is smaller."""
    edges = [(u, v) for u, v in g.edges() if not (u in g.out(v) and u > v)]
    return g.with_edges(edges)


def build_odd_even(spec: OddEvenSpec) -> ColoredDigraph:
    """Vertices are the numbers in A; ``a -> b`` iff (a+b)/2 and (b-a)/2 are both in O."""
    A = sorted(spec.A)
    edges = [
        (str(a), str(b))
        for a in A
        for b in A
        if b > a and (a + b) // 2 in spec.O and (b - a) // 2 in spec.O
    ]
    sigma = {str(a): U_COLOR if a % 4 == 0 else V_COLOR for a in A}
    return ColoredDigraph([str(a) for a in A], edges, sigma, (U_COLOR, V_COLOR))


def build_gamma_s(spec: NumberSetSpec) -> ColoredDigraph:
    S = sorted(spec.S)
    edges = [(str(u), str(v)) for u in S for v in S if u < v and (u - v) % 2]
    sigma = {str(s): EVEN if s % 2 == 0 else ODD for s in S}
    return ColoredDigraph([str(s) for s in S], edges, sigma, (EVEN, ODD))


def is_arc_isomorphism(g, h, mapping) -> bool:
    """True iff ``mapping`` (vertex of g -> vertex of h) is a bijection preserving arcs both ways."""
    if len(set(mapping.values())) != len(mapping) or set(mapping) != set(g.vertices):
        return False
    if set(mapping.values()) != set(h.vertices) or g.n_edges != h.n_edges:
        return False
    return all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges())


def find_gamma_s_representation(g) -> Representation | None:
    """Number the vertices of an acyclic bitournament so it becomes a number-set graph.

    Returns ``None`` for cyclic input. Along any topological order, every pair
    of differently colored vertices is ordered by its arc, so the color
    sequence is forced; numbering greedily from 1 (next number of the required
    parity) gives the lexicographically smallest S.
    """
    report = is_bitournament(g)
    if not report.ok or report.verdict.value == "precondition_failed":
        raise PreconditionFailed(f"not a bitournament: {report.details.get('reason', report.witness)}")
    order = topological_order(g)
    if order is None:
        return None
    mapping = {}
    prev = 0
    prev_color = None
    for v in order:
        if prev_color is None:
            number = 1
        else:
            number = prev + (2 if g.color(v) == prev_color else 1)
        mapping[v] = number
        prev, prev_color = number, g.color(v)
    spec = NumberSetSpec(frozenset(mapping.values()))
    rebuilt = build_gamma_s(spec)
    if not is_arc_isomorphism(g, rebuilt, {v: str(n) for v, n in mapping.items()}):
        raise InvariantError("number-set representation does not reproduce the input")
    return Representation(spec, mapping)


def _odd_even_preconditions(g):
    if not isinstance(g, ColoredDigraph) or not g.is_bipartite_proper():
        raise PreconditionFailed("graph must be properly colored (bipartite)")
    if len(g.colors) > 2:
        raise PreconditionFailed("graph must use at most two colors")
    if not is_oriented(g):
        raise PreconditionFailed("graph must be oriented")
    if not is_acyclic(g):
        raise PreconditionFailed("graph must be acyclic")
    if len(g) > ODD_EVEN_MAX_VERTICES:
        raise PreconditionFailed(f"odd-even search is limited to {ODD_EVEN_MAX_VERTICES} vertices")


def find_odd_even_representation(g, max_value=64, start=None) -> Representation:
    """Backtracking search for an odd-even graph isomorphic to ``g``.

    One color class takes values 0 mod 4, the other 2 mod 4, so every arc gets
    odd half-sum and half-difference automatically. O is exactly the set of
    those halves; a partial assignment is pruned as soon as a non-arc pair
    ``a < b`` has both halves in O. The value cap grows from ``start``
    (default four times the vertex count) to ``max_value``.
    """
    _odd_even_preconditions(g)
    order = topological_order(g)
    if not order:
        return Representation(OddEvenSpec(frozenset(), frozenset()), {})
    colors = list(dict.fromkeys([g.color(order[0])] + list(g.colors)))
    residue_plans = [{colors[0]: 0, colors[1]: 2} if len(colors) > 1 else {colors[0]: 0}]
    if len(colors) > 1:
        residue_plans.append({colors[0]: 2, colors[1]: 0})
    cap = min(start if start is not None else 4 * len(order), max_value)
    while True:
        for plan in residue_plans:
            found = _odd_even_search(g, order, plan, cap)
            if found is not None:
                spec = OddEvenSpec(frozenset(found.values()), _required_odds(g, found))
                rebuilt = build_odd_even(spec)
                if not is_arc_isomorphism(g, rebuilt, {v: str(a) for v, a in found.items()}):
                    raise InvariantError("odd-even representation does not reproduce the input")
                return Representation(spec, found)
        if cap >= max_value:
            raise CapacityError(f"no odd-even representation with values <= {max_value}")
        cap = min(cap * 2, max_value)


def _required_odds(g, value):
    odds = set()
    for u, v in g.edges():
        a, b = value[u], value[v]
        odds.add((a + b) // 2)
        odds.add((b - a) // 2)
    return frozenset(odds)


def _odd_even_search(g, order, plan, cap):
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    # arcs and non-arc cross pairs whose later endpoint (in search order) is order[i]
    arcs_at = [[] for _ in range(n)]
    cross_at = [[] for _ in range(n)]
    for i, v in enumerate(order):
        for u in order[:i]:
            if g.color(u) == g.color(v):
                continue
            if g.has_edge(u, v) or g.has_edge(v, u):
                arcs_at[i].append((u, v) if g.has_edge(u, v) else (v, u))
            else:
                cross_at[i].append(u)
    candidates = {c: [a for a in range(r, cap + 1, 4)] for c, r in plan.items()}
    value = {}
    used = set()
    odds_count = {}
    nonarcs = []  # (a, b) value pairs, a < b, whose halves must not both be in O

    def add_odds(pairs):
        for o in pairs:
            odds_count[o] = odds_count.get(o, 0) + 1

    def remove_odds(pairs):
        for o in pairs:
            odds_count[o] -= 1
            if not odds_count[o]:
                del odds_count[o]

    def bad(a, b):
        lo, hi = min(a, b), max(a, b)
        return (lo + hi) // 2 in odds_count and (hi - lo) // 2 in odds_count

    def place(i):
        if i == n:
            return True
        v = order[i]
        for a in candidates[g.color(v)]:
            if a in used:
                continue
            value[v] = a
            ok = all(value[x] < value[y] for x, y in arcs_at[i])
            if not ok:
                continue
            new_odds = []
            for x, y in arcs_at[i]:
                new_odds += [(value[x] + value[y]) // 2, (value[y] - value[x]) // 2]
            add_odds(new_odds)
            new_nonarcs = [(value[u], a) for u in cross_at[i]]
            nonarcs.extend(new_nonarcs)
            if not any(bad(x, y) for x, y in nonarcs):
                used.add(a)
                if place(i + 1):
                    return True
                used.discard(a)
            del nonarcs[len(nonarcs) - len(new_nonarcs) :]
            remove_odds(new_odds)
        value.pop(v, None)
        return False

    if place(0):
        return {v: value[v] for v in order}
    return None


def degree_bound_report(g, bound=EXACT_SEARCH_BOUND) -> DegreeBoundReport:
    """Minimum out/in degree and exact longest cycle/path, with the bound test.

    ``bound_met`` is true when there is a cycle of length at least 2(k+h)
    (and at least 2), or a path of length at least 2(k+h)+3.
    """
    k = min((len(g.out(v)) for v in g), default=0)
    h = min((len(g.inn(v)) for v in g), default=0)
    cycle, cycle_w = longest_directed_cycle(g, bound)
    path, path_w = longest_directed_path(g, bound)
    met = (cycle >= 2 and cycle >= 2 * (k + h)) or path >= 2 * (k + h) + 3
    return DegreeBoundReport(k, h, cycle, path, met, cycle_w, path_w)
