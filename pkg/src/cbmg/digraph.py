"""Immutable digraphs and vertex-colored digraphs.

Vertices are string labels. Adjacency is stored as frozensets in both
directions so that ``out_adj`` and ``in_adj`` are always exact transposes.
Functions that return collections of vertices return sets; anything ordered
(edge lists, components, witnesses) is sorted by label.
"""

import heapq
from collections import deque
from collections.abc import Iterable, Mapping

from .errors import CapacityError, InputError, InvariantError

EXACT_SEARCH_BOUND = 20

OUT = "out"
IN = "in"


class Digraph:
    """Loop-free digraph without parallel edges. Frozen after construction."""

    __slots__ = ("_vertices", "_index", "_out", "_in", "_n_edges", "__weakref__")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()):
        order: list[str] = []
        index: dict[str, int] = {}
        for v in vertices:
            v = _label(v)
            if v not in index:
                index[v] = len(order)
                order.append(v)
        out: dict[str, set] = {v: set() for v in order}
        inn: dict[str, set] = {v: set() for v in order}
        for u, v in edges:
            u, v = _label(u), _label(v)
            if u not in index or v not in index:
                missing = u if u not in index else v
                raise InputError(f"edge {u}->{v} uses undeclared vertex {missing!r}")
            if u == v:
                raise InputError(f"loop at {u!r} is not allowed")
            out[u].add(v)
            inn[v].add(u)
        self._vertices = tuple(order)
        self._index = index
        self._out = {v: frozenset(s) for v, s in out.items()}
        self._in = {v: frozenset(s) for v, s in inn.items()}
        self._n_edges = sum(len(s) for s in out.values())

    @classmethod
    def from_edges(cls, edges, vertices=()):
        """Build from an edge list, declaring endpoints in first-seen order."""
        edges = [(_label(u), _label(v)) for u, v in edges]
        order = [_label(v) for v in vertices]
        for u, v in edges:
            order.extend((u, v))
        return cls(order, edges)

    # -- basic access ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._index

    def __iter__(self):
        return iter(self._vertices)

    def index(self, v):
        try:
            return self._index[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def out(self, u) -> frozenset:
        try:
            return self._out[u]
        except KeyError:
            raise InputError(f"unknown vertex {u!r}") from None

    def inn(self, u) -> frozenset:
        try:
            return self._in[u]
        except KeyError:
            raise InputError(f"unknown vertex {u!r}") from None

    def has_edge(self, u, v):
        return v in self.out(u)

    @property
    def n_edges(self):
        return self._n_edges

    def edges(self):
        """All arcs as a label-sorted list of pairs."""
        return sorted((u, v) for u in self._vertices for v in self._out[u])

    def sorted_vertices(self):
        return sorted(self._vertices)

    def subgraph(self, keep):
        keep = set(keep)
        vs = [v for v in self._vertices if v in keep]
        return self._rebuild(vs, [(u, v) for u in vs for v in self._out[u] if v in keep])

    def with_edges(self, edges):
        """Same vertex set (and coloring) with a new arc set."""
        return self._rebuild(self._vertices, edges)

    def _rebuild(self, vertices, edges):
        return Digraph(vertices, edges)

    def check_invariants(self):
        for u in self._vertices:
            if u in self._out[u]:
                raise InvariantError(f"loop at {u}")
            for v in self._out[u]:
                if v not in self._index:
                    raise InvariantError(f"dangling arc {u}->{v}")
        rebuilt = {v: set() for v in self._vertices}
        for u in self._vertices:
            for v in self._out[u]:
                rebuilt[v].add(u)
        if any(rebuilt[v] != self._in[v] for v in self._vertices):
            raise InvariantError("in-adjacency is not the transpose of out-adjacency")

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return set(self._vertices) == set(other._vertices) and self._out == other._out

    def __hash__(self):
        return hash((frozenset(self._vertices), frozenset(self.edges())))

    def __repr__(self):
        return f"{type(self).__name__}(vertices={len(self)}, edges={self.n_edges})"


class ColoredDigraph(Digraph):
    """Digraph plus a total vertex coloring ``sigma``.

    ``colors`` is the declared color set; it defaults to the colors in use.
    """

    __slots__ = ("_sigma", "_colors")

    def __init__(self, vertices=(), edges=(), sigma: Mapping[str, str] | None = None, colors=None):
        super().__init__(vertices, edges)
        sigma = dict(sigma or {})
        missing = [v for v in self._vertices if v not in sigma]
        if missing:
            raise InputError(f"no color for vertex {missing[0]!r}")
        self._sigma = {v: str(sigma[v]) for v in self._vertices}
        used = sorted(set(self._sigma.values()))
        if colors is None:
            colors = used
        colors = tuple(dict.fromkeys(str(c) for c in colors))
        unknown = set(used) - set(colors)
        if unknown:
            raise InputError(f"colors {sorted(unknown)} are not in the declared color set")
        self._colors = colors

    @classmethod
    def from_graph(cls, g: Digraph, sigma, colors=None):
        return cls(g.vertices, g.edges(), sigma, colors)

    @property
    def sigma(self) -> dict[str, str]:
        return dict(self._sigma)

    @property
    def colors(self) -> tuple[str, ...]:
        return self._colors

    def color(self, v):
        try:
            return self._sigma[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    @property
    def graph(self) -> Digraph:
        return Digraph(self._vertices, self.edges())

    def color_class(self, c):
        return sorted(v for v in self._vertices if self._sigma[v] == c)

    def is_bipartite_proper(self):
        return all(self._sigma[u] != self._sigma[v] for u in self._vertices for v in self._out[u])

    def _rebuild(self, vertices, edges):
        return ColoredDigraph(vertices, edges, {v: self._sigma[v] for v in vertices}, self._colors)

    def __eq__(self, other):
        if not isinstance(other, ColoredDigraph):
            return NotImplemented
        return Digraph.__eq__(self, other) and self._sigma == other._sigma

    __hash__ = Digraph.__hash__


def _label(v):
    if not isinstance(v, str):
        v = str(v)
    if not v:
        raise InputError("vertex labels must be non-empty")
    return v


# -- neighbourhood primitives -------------------------------------------------


def neighbourhood(g: Digraph, u, dir=OUT) -> frozenset:
    if dir == OUT:
        return g.out(u)
    if dir == IN:
        return g.inn(u)
    raise InputError(f"direction must be 'out' or 'in', not {dir!r}")


def image(g: Digraph, s, dir=OUT) -> frozenset:
    """Union of neighbourhoods over ``s``; ``image(image({u}))`` is N(N(u))."""
    result = set()
    for v in s:
        result |= neighbourhood(g, v, dir)
    return frozenset(result)


def is_independent(g: Digraph, u, v) -> bool:
    if u == v:
        raise InputError("independence is defined for distinct vertices")
    return v not in g.out(u) and u not in g.out(v)


def is_out_dominated(g: Digraph, u, v) -> bool:
    """True iff N(u) is a subset of N(v)."""
    return g.out(u) <= g.out(v)


def is_oriented(g: Digraph) -> bool:
    return not any(u in g.out(v) for u in g for v in g.out(u))


def symmetric_pairs(g: Digraph):
    return sorted((u, v) for u in g for v in g.out(u) if u < v and u in g.out(v))


def sinks(g: Digraph):
    return sorted(v for v in g if not g.out(v))


def is_sink_free(g: Digraph) -> bool:
    return all(g.out(v) for v in g)


def reach_from(g: Digraph, u) -> frozenset:
    """Every vertex reachable from ``u`` by a walk with at least one edge."""
    seen = set()
    queue = deque(g.out(u))
    seen.update(queue)
    while queue:
        w = queue.popleft()
        for x in g.out(w):
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return frozenset(seen)


def reachable(g: Digraph, u, v) -> bool:
    g.index(v)
    return v in reach_from(g, u)


# -- acyclicity and long walks ------------------------------------------------


def topological_order(g: Digraph):
    """Kahn's algorithm with label-ordered ties; None if the graph has a cycle."""
    indeg = {v: len(g.inn(v)) for v in g}
    heap = [v for v, d in indeg.items() if d == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in g.out(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order if len(order) == len(g) else None


def is_acyclic(g: Digraph) -> bool:
    return topological_order(g) is not None


def _check_bound(g, bound, what):
    if len(g) > bound:
        raise CapacityError(f"{what}: {len(g)} vertices exceeds the exact-search bound {bound}")


def longest_directed_path(g: Digraph, bound=EXACT_SEARCH_BOUND):
    """Maximum number of edges on a path with distinct vertices, plus a witness.

    Acyclic graphs use dynamic programming over a topological order and have
    no size cap; cyclic graphs fall back to exhaustive search.
    """
    if not len(g):
        return 0, ()
    order = topological_order(g)
    if order is not None:
        best = {v: (0, None) for v in order}
        for v in order:
            length = best[v][0]
            for w in sorted(g.out(v)):
                if length + 1 > best[w][0]:
                    best[w] = (length + 1, v)
        end = min(order, key=lambda v: (-best[v][0], v))
        path = [end]
        while best[path[-1]][1] is not None:
            path.append(best[path[-1]][1])
        return best[end][0], tuple(reversed(path))

    _check_bound(g, bound, "longest_directed_path")
    verts = g.sorted_vertices()
    idx = {v: i for i, v in enumerate(verts)}
    succ = [[idx[w] for w in sorted(g.out(v))] for v in verts]
    n = len(verts)
    best_len, best_path = 0, [0]
    path = []

    def dfs(v, mask):
        nonlocal best_len, best_path
        if len(path) - 1 > best_len:
            best_len, best_path = len(path) - 1, list(path)
            if best_len == n - 1:
                return True
        for w in succ[v]:
            if not mask >> w & 1:
                path.append(w)
                if dfs(w, mask | 1 << w):
                    return True
                path.pop()
        return False

    for s in range(n):
        path[:] = [s]
        if dfs(s, 1 << s):
            break
    return best_len, tuple(verts[i] for i in best_path)


def longest_directed_cycle(g: Digraph, bound=EXACT_SEARCH_BOUND):
    """Longest cycle (distinct interior vertices); ``(0, ())`` when acyclic.

    The witness lists the cycle's vertices once, starting at its smallest label.
    """
    if is_acyclic(g):
        return 0, ()
    _check_bound(g, bound, "longest_directed_cycle")
    verts = g.sorted_vertices()
    idx = {v: i for i, v in enumerate(verts)}
    succ = [[idx[w] for w in sorted(g.out(v))] for v in verts]
    n = len(verts)
    best_len, best_cycle = 0, []
    path = []

    # each cycle is found from its smallest vertex s, using only vertices > s
    def dfs(s, v, mask):
        nonlocal best_len, best_cycle
        for w in succ[v]:
            if w == s:
                if len(path) > best_len:
                    best_len, best_cycle = len(path), list(path)
            elif w > s and not mask >> w & 1:
                path.append(w)
                dfs(s, w, mask | 1 << w)
                path.pop()

    for s in range(n):
        if n - s <= best_len:
            break
        path[:] = [s]
        dfs(s, s, 1 << s)
    return best_len, tuple(verts[i] for i in best_cycle)


def longest_closed_trail(g: Digraph, bound=EXACT_SEARCH_BOUND):
    """Longest closed walk with pairwise distinct edges (a circuit); vertices may repeat.

    The witness is the vertex sequence with the start repeated at the end.
    """
    if is_acyclic(g):
        return 0, ()
    _check_bound(g, bound, "longest_closed_trail")
    verts = g.sorted_vertices()
    idx = {v: i for i, v in enumerate(verts)}
    edge_id = {}
    for u, v in g.edges():
        edge_id[idx[u], idx[v]] = len(edge_id)
    n = len(verts)
    succ = [[(idx[w], edge_id[i, idx[w]]) for w in sorted(g.out(verts[i]))] for i in range(n)]
    best_len, best_trail = 0, []
    trail = []

    # a closed trail is found from its smallest vertex s, staying on vertices >= s
    def dfs(s, v, used, cap):
        nonlocal best_len, best_trail
        for w, e in succ[v]:
            if w < s or used >> e & 1:
                continue
            trail.append(w)
            if w == s and len(trail) - 1 > best_len:
                best_len, best_trail = len(trail) - 1, list(trail)
                if best_len == cap:
                    return True
            if dfs(s, w, used | 1 << e, cap):
                return True
            trail.pop()
        return False

    for s in range(n):
        cap = sum(1 for (a, b) in edge_id if a >= s and b >= s)
        if cap <= best_len:
            continue
        trail[:] = [s]
        dfs(s, s, 0, cap)
    return best_len, tuple(verts[i] for i in best_trail)


def is_walk(g: Digraph, seq, distinct_edges=False, distinct_vertices=False, closed=False):
    """Validate a vertex sequence edge by edge against ``g``."""
    if len(seq) < 2:
        return False
    steps = list(zip(seq, seq[1:]))
    if not all(b in g.out(a) for a, b in steps):
        return False
    if distinct_edges and len(set(steps)) != len(steps):
        return False
    if closed and seq[0] != seq[-1]:
        return False
    if distinct_vertices:
        body = seq[:-1] if closed else seq
        if len(set(body)) != len(body):
            return False
    return True


# -- undirected structure -----------------------------------------------------


def underlying_components(g: Digraph):
    """Components of the underlying undirected graph, ordered by smallest label."""
    seen = set()
    comps = []
    for s in g.sorted_vertices():
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.out(v) | g.inn(v):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _undirected_adjacency(g):
    return {v: g.out(v) | g.inn(v) for v in g}


def two_coloring(g: Digraph):
    """A proper 2-coloring (vertex -> 0/1) of the underlying graph, or None."""
    adj = _undirected_adjacency(g)
    side = {}
    for s in g.sorted_vertices():
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in side:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return side


def chromatic_number(g: Digraph, bound=EXACT_SEARCH_BOUND) -> int:
    """Exact chromatic number of the underlying undirected graph (0 for no vertices)."""
    if not len(g):
        return 0
    if not g.n_edges:
        return 1
    if two_coloring(g) is not None:
        return 2
    _check_bound(g, bound, "chromatic_number")
    adj = _undirected_adjacency(g)
    # largest-degree-first ordering keeps the backtracking small
    order = sorted(g.vertices, key=lambda v: (-len(adj[v]), v))
    k = 3
    while not _colorable(order, adj, k):
        k += 1
    return k


def _colorable(order, adj, k):
    color = {}

    def place(i, used):
        if i == len(order):
            return True
        v = order[i]
        taken = {color[w] for w in adj[v] if w in color}
        # a fresh color is only tried once (symmetry breaking)
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
                del color[v]
        return False

    return place(0, 0)
