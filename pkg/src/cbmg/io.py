"""Graph serialization: canonical JSON, tab-separated edge lists, DOT."""

import json

from .digraph import ColoredDigraph, Digraph
from .errors import InputError, ParseError

DOT_PALETTE = ("lightblue", "salmon", "palegreen", "gold", "plum", "lightgrey", "orange", "cyan")


def graph_to_dict(g: Digraph) -> dict:
    colored = isinstance(g, ColoredDigraph)
    vertices = []
    for v in g.sorted_vertices():
        entry = {"id": v}
        if colored:
            entry["color"] = g.color(v)
        vertices.append(entry)
    return {"vertices": vertices, "edges": [list(e) for e in g.edges()]}


def graph_from_dict(data) -> Digraph:
    if not isinstance(data, dict) or "vertices" not in data:
        raise InputError("graph JSON must be an object with a 'vertices' list")
    try:
        ids = [str(v["id"]) for v in data["vertices"]]
        colors = [v.get("color") for v in data["vertices"]]
        edges = [(str(u), str(v)) for u, v in data.get("edges", [])]
    except (TypeError, KeyError, ValueError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from None
    if all(c is None for c in colors):
        return Digraph(ids, edges)
    if any(c is None for c in colors):
        raise InputError("either every vertex carries a color or none does")
    return ColoredDigraph(ids, edges, dict(zip(ids, map(str, colors))))


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dumps_graph(g: Digraph) -> str:
    return dumps_canonical(graph_to_dict(g))


def loads_graph(text: str) -> Digraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    return graph_from_dict(data)


def parse_edgelist(text: str) -> Digraph:
    """``src<TAB>dst`` per line; a lone label declares an isolated vertex; ``#`` starts a comment."""
    vertices, edges = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("\t") if "\t" in line else line.split()
        parts = [p.strip() for p in parts if p.strip()]
        if len(parts) == 1:
            vertices.append(parts[0])
        elif len(parts) == 2:
            edges.append((parts[0], parts[1]))
        else:
            raise ParseError(f"expected 'src<TAB>dst', got {line!r}", f"line {lineno}")
    try:
        return Digraph.from_edges(edges, vertices)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def format_edgelist(g: Digraph) -> str:
    lines = [f"{u}\t{v}" for u, v in g.edges()]
    lines += [v for v in g.sorted_vertices() if not g.out(v) and not g.inn(v)]
    return "\n".join(lines) + ("\n" if lines else "")


def to_dot(g: Digraph, name="G") -> str:
    """One arc per directed edge; vertex colors become ``fillcolor``."""
    lines = [f"digraph {name} {{"]
    if isinstance(g, ColoredDigraph):
        palette = {c: DOT_PALETTE[i % len(DOT_PALETTE)] for i, c in enumerate(g.colors)}
        for v in g.sorted_vertices():
            c = g.color(v)
            lines.append(f'  "{v}" [style=filled, fillcolor={palette[c]}, color_label="{c}"];')
    else:
        for v in g.sorted_vertices():
            lines.append(f'  "{v}";')
    for u, v in g.edges():
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
