"""Rooted phylogenetic trees with leaf colors, and their colored best match graphs."""

from dataclasses import dataclass, field
from collections.abc import Mapping

from .digraph import ColoredDigraph
from .errors import InputError, InvariantError, ParseError

_DELIMS = set("(),:;")


@dataclass(frozen=True)
class PhyloTree:
    """Rooted tree on nodes ``0..n-1``.

    ``labels[i]`` is the node label (``None`` for unlabeled internal nodes);
    ``depth`` is the edge count from the root.
    """

    parent: tuple
    children: tuple
    labels: tuple
    root: int
    depth: tuple = field(init=False)
    leaf_index: Mapping = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.parent)
        if len(self.children) != n or len(self.labels) != n:
            raise InvariantError("parent/children/labels lengths differ")
        depth = [0] * n
        stack = [self.root]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for c in self.children[v]:
                if self.parent[c] != v:
                    raise InvariantError(f"child {c} of {v} has parent {self.parent[c]}")
                depth[c] = depth[v] + 1
                stack.append(c)
        if seen != n or self.parent[self.root] is not None:
            raise InvariantError("not a rooted tree")
        leaf_index = {}
        for v in range(n):
            if not self.children[v]:
                label = self.labels[v]
                if not label:
                    raise InvariantError(f"leaf node {v} has no label")
                if label in leaf_index:
                    raise InvariantError(f"duplicate leaf label {label!r}")
                leaf_index[label] = v
        object.__setattr__(self, "depth", tuple(depth))
        object.__setattr__(self, "leaf_index", leaf_index)

    @property
    def leaves(self):
        return sorted(self.leaf_index)

    def is_leaf(self, node):
        return not self.children[self.node(node)]

    def node(self, ref) -> int:
        """Resolve a node index or a unique node label to an index."""
        if isinstance(ref, int) and not isinstance(ref, bool):
            if 0 <= ref < len(self.parent):
                return ref
            raise InputError(f"unknown node index {ref}")
        if ref in self.leaf_index:
            return self.leaf_index[ref]
        hits = [i for i, lab in enumerate(self.labels) if lab == ref]
        if len(hits) == 1:
            return hits[0]
        if hits:
            raise InputError(f"node label {ref!r} is ambiguous")
        raise InputError(f"unknown node {ref!r}")

    def leaf(self, label) -> int:
        try:
            return self.leaf_index[label]
        except KeyError:
            raise InputError(f"unknown leaf {label!r}") from None

    def label(self, node):
        return self.labels[node]

    def ancestors(self, node):
        """``node`` followed by its ancestors up to the root."""
        v = self.node(node)
        out = []
        while v is not None:
            out.append(v)
            v = self.parent[v]
        return out


@dataclass(frozen=True)
class ColorMap:
    assignment: Mapping
    color_set: tuple

    def __post_init__(self):
        object.__setattr__(self, "assignment", dict(self.assignment))
        object.__setattr__(self, "color_set", tuple(dict.fromkeys(self.color_set)))
        unused = set(self.color_set) - set(self.assignment.values())
        if unused:
            raise InputError(f"color(s) {sorted(unused)} assigned to no leaf (color map must be surjective)")
        undeclared = set(self.assignment.values()) - set(self.color_set)
        if undeclared:
            raise InputError(f"color(s) {sorted(undeclared)} used but not declared")

    @classmethod
    def from_assignment(cls, assignment):
        return cls(assignment, tuple(sorted(set(assignment.values()))))

    def __getitem__(self, leaf):
        return self.assignment[leaf]


# -- Newick ---------------------------------------------------------------------


class _NewickReader:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.parent = []
        self.children = []
        self.labels = []
        self.positions = []

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def new_node(self, parent, pos):
        self.parent.append(parent)
        self.children.append([])
        self.labels.append(None)
        self.positions.append(pos)
        if parent is not None:
            self.children[parent].append(len(self.parent) - 1)
        return len(self.parent) - 1

    def read_label(self):
        self.skip_ws()
        if self.pos < len(self.text) and self.text[self.pos] == "'":
            end = self.text.find("'", self.pos + 1)
            if end < 0:
                raise ParseError("unterminated quoted label", self.pos)
            label = self.text[self.pos + 1 : end]
            self.pos = end + 1
            return label
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in _DELIMS:
            self.pos += 1
        return self.text[start : self.pos].strip()

    def read_length(self):
        if self.peek() != ":":
            return
        self.pos += 1
        start = self.pos
        self.read_label()
        try:
            float(self.text[start : self.pos])
        except ValueError:
            raise ParseError("branch length is not a number", start) from None

    def subtree(self, parent):
        self.skip_ws()
        node = self.new_node(parent, self.pos)
        if self.peek() == "(":
            open_pos = self.pos
            self.pos += 1
            self.subtree(node)
            while self.peek() == ",":
                self.pos += 1
                self.subtree(node)
            if self.peek() != ")":
                raise ParseError("unbalanced parentheses: expected ')' or ','", open_pos if not self.peek() else self.pos)
            self.pos += 1
        label = self.read_label()
        self.labels[node] = label or None
        self.read_length()
        return node

    def parse(self):
        if not self.text.strip():
            raise ParseError("empty Newick string", 0)
        self.subtree(None)
        if self.peek() != ";":
            what = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected ';' but found {what}", self.pos)
        self.pos += 1
        if self.peek():
            raise ParseError("trailing text after ';'", self.pos)
        return self


def parse_color_table(text: str) -> dict:
    """``leaf<TAB>color`` per line, ``#`` comments."""
    table = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("\t") if "\t" in line else line.split()
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise ParseError(f"expected 'leaf<TAB>color', got {line!r}", f"line {lineno}")
        leaf, color = parts[0].strip(), parts[1].strip()
        if leaf in table:
            raise ParseError(f"leaf {leaf!r} listed twice", f"line {lineno}")
        table[leaf] = color
    return table


def parse_newick(text: str, colors: Mapping | None = None, color_set=None, collapse_unary=False):
    """Parse ``text`` into ``(PhyloTree, ColorMap)``.

    Leaf colors come from a ``#color`` suffix on the leaf label or from the
    ``colors`` table, which takes precedence. ``color_set`` optionally declares
    the color set; every declared color must be used. Unary internal nodes are
    an error unless ``collapse_unary`` is set.
    """
    # whole-line '#' comments (provenance headers) are blanked, keeping offsets
    text = "\n".join(" " * len(line) if line.lstrip().startswith("#") else line for line in text.split("\n"))
    r = _NewickReader(text).parse()
    n = len(r.parent)
    labels = list(r.labels)
    suffix = {}
    for v in range(n):
        if r.children[v]:
            continue
        raw = labels[v] or ""
        name, sep, color = raw.rpartition("#")
        if not sep:
            name, color = raw, None
        if not name:
            raise ParseError("leaf without a label", r.positions[v])
        labels[v] = name
        if color:
            suffix[name] = color
        elif sep:
            raise ParseError(f"empty color suffix on leaf {name!r}", r.positions[v])

    seen = {}
    for v in range(n):
        if not r.children[v]:
            if labels[v] in seen:
                raise ParseError(f"duplicate leaf label {labels[v]!r}", r.positions[v])
            seen[labels[v]] = v

    parent, children = list(r.parent), [list(c) for c in r.children]
    unary = [v for v in range(n) if len(children[v]) == 1]
    root = 0
    if unary:
        if not collapse_unary:
            v = unary[0]
            raise ParseError(f"internal node with a single child (label {labels[v]!r})", r.positions[v])
        root = _collapse_unary(parent, children, unary, root)
    tree = _compact(parent, children, labels, root)

    colors = dict(colors or {})
    unknown = sorted(set(colors) - set(tree.leaf_index))
    if unknown:
        raise InputError(f"color table names unknown leaf {unknown[0]!r}")
    assignment = {}
    for leaf, node in seen.items():
        c = colors.get(leaf, suffix.get(leaf))
        if c is None:
            raise ParseError(f"leaf {leaf!r} has no color", r.positions[node])
        assignment[leaf] = c
    if color_set is None:
        color_set = sorted(set(assignment.values()))
    return tree, ColorMap(assignment, tuple(color_set))


def _collapse_unary(parent, children, unary, root):
    for v in unary:
        (child,) = children[v]
        p = parent[v]
        parent[child] = p
        if p is None:
            root = child
        else:
            children[p][children[p].index(v)] = child
        children[v] = []
        parent[v] = -1  # detached
    return root


def _compact(parent, children, labels, root):
    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(children[v]))
    new = {v: i for i, v in enumerate(order)}
    return PhyloTree(
        parent=tuple(None if v == root else new[parent[v]] for v in order),
        children=tuple(tuple(new[c] for c in children[v]) for v in order),
        labels=tuple(labels[v] for v in order),
        root=0,
    )


def to_newick(t: PhyloTree, c: ColorMap | None = None) -> str:
    def fmt(v):
        if not t.children[v]:
            label = t.labels[v]
            return f"{label}#{c[label]}" if c is not None else label
        inner = ",".join(fmt(ch) for ch in t.children[v])
        return f"({inner}){t.labels[v] or ''}"

    return fmt(t.root) + ";"


# -- ancestry -----------------------------------------------------------------


def lca(t: PhyloTree, x, y) -> int:
    """Last common ancestor of leaves ``x`` and ``y`` (node index)."""
    a, b = t.leaf(x), t.leaf(y)
    while t.depth[a] > t.depth[b]:
        a = t.parent[a]
    while t.depth[b] > t.depth[a]:
        b = t.parent[b]
    while a != b:
        a, b = t.parent[a], t.parent[b]
    return a


def precedes(t: PhyloTree, p, q) -> bool:
    """True iff ``q`` is a strict ancestor of ``p``."""
    p, q = t.node(p), t.node(q)
    if t.depth[q] >= t.depth[p]:
        return False
    while t.depth[p] > t.depth[q]:
        p = t.parent[p]
    return p == q


def is_ancestor_or_self(t: PhyloTree, p, q) -> bool:
    return t.node(p) == t.node(q) or precedes(t, p, q)


# -- best match graph ---------------------------------------------------------


def build_cbmg(t: PhyloTree, c: ColorMap) -> ColoredDigraph:
    """Colored best match graph of ``(t, c)``.

    ``x -> y`` iff ``y`` has another color than ``x`` and ``lca(x, y)`` is as
    deep as ``lca(x, y')`` for every leaf ``y'`` of ``y``'s color. Ties are all
    kept, so several best matches per color are possible.
    """
    leaves = t.leaves
    missing = [x for x in leaves if x not in c.assignment]
    if missing:
        raise InputError(f"leaf {missing[0]!r} has no color")
    n = len(t.parent)
    # colors present below each node, and leaves of each color below each node
    below: list[dict] = [dict() for _ in range(n)]
    for x in leaves:
        col = c[x]
        v = t.leaf(x)
        while v is not None:
            below[v].setdefault(col, []).append(x)
            v = t.parent[v]

    edges = []
    for x in leaves:
        cx = c[x]
        path = t.ancestors(x)
        for col in c.color_set:
            if col == cx:
                continue
            anchor = next((v for v in path if col in below[v]), None)
            if anchor is None:
                continue
            matches = below[anchor][col]
            _assert_lca_chain(t, x, matches, anchor, path)
            edges.extend((x, y) for y in matches)
    return ColoredDigraph(leaves, edges, dict(c.assignment), c.color_set)


def _assert_lca_chain(t, x, matches, anchor, path):
    on_path = set(path)
    for y in matches:
        a = lca(t, x, y)
        if a != anchor or a not in on_path:
            raise InvariantError(f"lca({x},{y}) is not the expected ancestor of {x}")
