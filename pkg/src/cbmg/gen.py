"""Seeded instance generators and exhaustive enumerators.

All randomness comes from SplitMix64 (Steele, Lea & Flood 2014), a fixed
64-bit generator that is trivial to reproduce in any language. Trial ``i`` of
a run with seed ``s`` draws from the stream seeded with ``s + i``.
"""

from dataclasses import dataclass, asdict, replace

from .digraph import ColoredDigraph
from .errors import CapacityError, InputError
from .phylo import ColorMap, _compact

MASK64 = (1 << 64) - 1
COLOR_NAMES = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"

KINDS = ("tree", "bipartite", "bitournament", "enumerate_bipartite", "enumerate_bitournament")
ENUM_BIPARTITE_LIMIT = 9
ENUM_BITOURNAMENT_LIMIT = 12


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def substream(seed: int, trial: int) -> SplitMix64:
    return SplitMix64(seed + trial)


@dataclass(frozen=True)
class GenConfig:
    kind: str = "tree"
    leaves: int = 6
    leaves_max: int | None = None  # draw the leaf count per trial from [leaves, leaves_max]
    n_u: int = 2
    n_v: int = 2
    p: float = 0.5
    colors: int = 2
    seed: int = 0
    ensure_sink_free: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown generator kind {self.kind!r}; expected one of {KINDS}")
        if self.leaves < 1 or self.n_u < 1 or self.n_v < 1:
            raise InputError("sizes must be >= 1")
        if self.leaves_max is not None and self.leaves_max < self.leaves:
            raise InputError("leaves_max must be >= leaves")
        if not 0.0 <= self.p <= 1.0:
            raise InputError("edge probability must lie in [0, 1]")
        if self.kind == "tree" and self.colors < 2:
            raise InputError("tree generation needs at least 2 colors")
        if self.kind == "tree" and self.leaves < self.colors:
            raise InputError(f"{self.leaves} leaves cannot carry {self.colors} colors surjectively")

    def to_dict(self):
        return asdict(self)

    def with_seed(self, seed):
        return replace(self, seed=seed)


def _pad(prefix, count):
    width = len(str(count))
    return [f"{prefix}{i:0{width}d}" for i in range(1, count + 1)]


def random_tree(cfg: GenConfig, trial: int = 0):
    """Random rooted tree and surjective leaf coloring.

    Nodes split recursively into 2-4 children; the extra leaves beyond one per
    child are dealt uniformly among the children. Leaf labels ``t01, t02, ...``
    follow depth-first order.
    """
    if cfg.kind != "tree":
        raise InputError("random_tree needs a config of kind 'tree'")
    rng = substream(cfg.seed, trial)
    n = cfg.leaves if cfg.leaves_max is None else rng.between(cfg.leaves, cfg.leaves_max)
    if n < cfg.colors:
        raise InputError(f"{n} leaves cannot carry {cfg.colors} colors surjectively")

    parent, children, labels = [], [], []

    def grow(size, par):
        node = len(parent)
        parent.append(par)
        children.append([])
        labels.append(None)
        if par is not None:
            children[par].append(node)
        if size == 1:
            return
        k = rng.between(2, min(4, size))
        parts = [1] * k
        for _ in range(size - k):
            parts[rng.below(k)] += 1
        for part in parts:
            grow(part, node)

    grow(n, None)
    names = iter(_pad("t", n))
    for v in range(len(parent)):
        if not children[v]:
            labels[v] = next(names)
    tree = _compact(parent, children, labels, 0)

    palette = COLOR_NAMES[: cfg.colors]
    leaves = tree.leaves
    assignment = {x: palette[rng.below(cfg.colors)] for x in leaves}
    _patch_surjective(assignment, palette)
    return tree, ColorMap(assignment, tuple(palette))


def _patch_surjective(assignment, palette):
    """Recolor one leaf per missing color, taking the smallest label of a color used twice."""
    for color in palette:
        counts = {}
        for c in assignment.values():
            counts[c] = counts.get(c, 0) + 1
        if color in counts:
            continue
        donor = min(x for x, c in assignment.items() if counts[c] > 1)
        assignment[donor] = color


def _bipartite_frame(n_u, n_v):
    us, vs = _pad("a", n_u), _pad("b", n_v)
    sigma = {**{u: "A" for u in us}, **{v: "B" for v in vs}}
    return us, vs, sigma


def random_bipartite_digraph(cfg: GenConfig, trial: int = 0) -> ColoredDigraph:
    """Each cross pair independently gets no arc, one arc either way, or both.

    The states have probabilities (1-p)^2, p(1-p), (1-p)p, p^2. With
    ``ensure_sink_free`` every remaining sink gets one arc to a uniformly
    chosen vertex of the other side.
    """
    rng = substream(cfg.seed, trial)
    us, vs, sigma = _bipartite_frame(cfg.n_u, cfg.n_v)
    p = cfg.p
    cuts = ((1 - p) ** 2, (1 - p) ** 2 + p * (1 - p), (1 - p) ** 2 + 2 * p * (1 - p))
    edges = set()
    for u in us:
        for v in vs:
            r = rng.random()
            state = sum(r >= c for c in cuts) if p < 1 else 3
            if state in (1, 3):
                edges.add((u, v))
            if state in (2, 3):
                edges.add((v, u))
    if cfg.ensure_sink_free:
        out = {x for x, _ in edges}
        for x in us + vs:
            if x not in out:
                other = vs if sigma[x] == "A" else us
                edges.add((x, other[rng.below(len(other))]))
    return ColoredDigraph(us + vs, sorted(edges), sigma, ("A", "B"))


def random_bitournament(cfg: GenConfig, trial: int = 0) -> ColoredDigraph:
    rng = substream(cfg.seed, trial)
    us, vs, sigma = _bipartite_frame(cfg.n_u, cfg.n_v)
    edges = [(u, v) if rng.below(2) == 0 else (v, u) for u in us for v in vs]
    return ColoredDigraph(us + vs, edges, sigma, ("A", "B"))


def bipartite_count(n_u: int, n_v: int) -> int:
    return 4 ** (n_u * n_v)


def bitournament_count(n_u: int, n_v: int) -> int:
    return 2 ** (n_u * n_v)


def _digits(index, base, width):
    """Base-``base`` digits of ``index``, most significant first."""
    out = [0] * width
    for k in range(width - 1, -1, -1):
        index, out[k] = divmod(index, base)
    return out


def bipartite_from_index(n_u: int, n_v: int, index: int) -> ColoredDigraph:
    """The ``index``-th graph of :func:`enumerate_bipartite`."""
    us, vs, sigma = _bipartite_frame(n_u, n_v)
    pairs = [(u, v) for u in us for v in vs]
    edges = []
    for (u, v), s in zip(pairs, _digits(index, 4, len(pairs))):
        if s & 1:
            edges.append((u, v))
        if s & 2:
            edges.append((v, u))
    return ColoredDigraph(us + vs, edges, sigma, ("A", "B"))


def bitournament_from_index(n_u: int, n_v: int, index: int) -> ColoredDigraph:
    """The ``index``-th graph of :func:`enumerate_bitournaments`."""
    us, vs, sigma = _bipartite_frame(n_u, n_v)
    pairs = [(u, v) for u in us for v in vs]
    edges = [(u, v) if b == 0 else (v, u) for (u, v), b in zip(pairs, _digits(index, 2, len(pairs)))]
    return ColoredDigraph(us + vs, edges, sigma, ("A", "B"))


def _check_sides(n_u, n_v, limit, what):
    if n_u < 1 or n_v < 1:
        raise InputError("side sizes must be >= 1")
    if n_u * n_v > limit:
        raise CapacityError(f"{what}: {n_u}x{n_v} exceeds {limit} cross pairs")


def enumerate_bipartite(n_u: int, n_v: int):
    """All 4^(n_u*n_v) labeled bipartite digraphs on sides ``a*`` / ``b*``.

    Cross pairs are taken row-major; the first pair's state varies slowest,
    with states ordered none, a->b, b->a, both.
    """
    _check_sides(n_u, n_v, ENUM_BIPARTITE_LIMIT, "enumerate_bipartite")
    for i in range(bipartite_count(n_u, n_v)):
        yield bipartite_from_index(n_u, n_v, i)


def enumerate_bitournaments(n_u: int, n_v: int):
    """All 2^(n_u*n_v) orientations of the complete bipartite graph."""
    _check_sides(n_u, n_v, ENUM_BITOURNAMENT_LIMIT, "enumerate_bitournaments")
    for i in range(bitournament_count(n_u, n_v)):
        yield bitournament_from_index(n_u, n_v, i)


def generate(cfg: GenConfig, trial: int = 0):
    """One random instance: ``(tree, colors)`` for trees, a graph otherwise."""
    if cfg.kind == "tree":
        return random_tree(cfg, trial)
    if cfg.kind == "bipartite":
        return random_bipartite_digraph(cfg, trial)
    if cfg.kind == "bitournament":
        return random_bitournament(cfg, trial)
    raise InputError(f"kind {cfg.kind!r} is an enumerator; use enumerate_bipartite / enumerate_bitournaments")
