"""Command-line entry point.

Exit codes: 0 ok, 1 a property was violated, 2 input error, 3 capacity error.
"""

import argparse
import json
import sys
from pathlib import Path

from . import digraph as dg
from .errors import CapacityError, InputError, PreconditionFailed
from .gen import GenConfig, generate
from .io import (
    dumps_canonical,
    dumps_graph,
    format_edgelist,
    graph_from_dict,
    graph_to_dict,
    loads_graph,
    parse_edgelist,
    to_dot,
)
from .phylo import build_cbmg, parse_color_table, parse_newick, to_newick
from .props import CHECKERS, QUOTIENT, RAW, is_bitournament, is_bitransitive
from .quotient import check_chromatic_preserved, check_connectivity_preserved, quotient
from .report import Verdict
from .transform import (
    NumberSetSpec,
    OddEvenSpec,
    build_gamma_s,
    build_odd_even,
    degree_bound_report,
    find_gamma_s_representation,
    find_odd_even_representation,
    remove_symmetric_edges,
)
from .verify import REGISTRY, default_run_dir, run_suite

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_graph(path, fmt=None):
    text = _read(path)
    fmt = fmt or _guess_format(path)
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "newick":
        return build_cbmg(*parse_newick(text))
    return loads_graph(text)


def _guess_format(path):
    suffix = Path(path).suffix.lower() if path not in (None, "-") else ""
    return {".tsv": "edgelist", ".txt": "edgelist", ".nwk": "newick", ".newick": "newick"}.get(suffix, "json")


def _format_graph(g, fmt):
    if fmt == "edgelist":
        return format_edgelist(g)
    if fmt == "dot":
        return to_dot(g)
    return dumps_graph(g)


def cmd_build(args):
    colors = parse_color_table(_read(args.colors)) if args.colors else None
    tree, cmap = parse_newick(_read(args.input), colors, collapse_unary=args.collapse_unary)
    g = build_cbmg(tree, cmap)
    _write(args.out, _format_graph(g, args.format))
    hist = {c: len(g.color_class(c)) for c in g.colors}
    print(f"vertices: {len(g)}  edges: {g.n_edges}  colors: {json.dumps(hist, sort_keys=True)}",
          file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_OK


def cmd_check(args):
    g = _load_graph(args.input, args.input_format)
    names = [p.strip().lower() for p in args.props.split(",") if p.strip()]
    unknown = [p for p in names if p not in CHECKERS]
    if unknown:
        raise InputError(f"unknown property {unknown[0]!r}; choose from {sorted(CHECKERS)}")
    reports = [CHECKERS[name](g, args.scope) for name in names]
    _write(args.out, dumps_canonical([r.to_dict() for r in reports]))
    for r in reports:
        witness = f"  witness {r.witness}" if r.witness else ""
        print(f"{r.property_id:<16}{r.verdict.value}{witness}", file=sys.stderr)
    return EXIT_VIOLATED if any(r.verdict is Verdict.VIOLATED for r in reports) else EXIT_OK


def cmd_quotient(args):
    g = _load_graph(args.input, args.input_format)
    q = quotient(g)
    data = q.to_dict()
    data["connectivity"] = check_connectivity_preserved(g).to_dict()
    data["chromatic"] = check_chromatic_preserved(g, args.bound).to_dict()
    _write(args.out, dumps_canonical(data))
    return EXIT_OK


def cmd_reduce(args):
    g = _load_graph(args.input, args.input_format)
    tilde = remove_symmetric_edges(quotient(g).qgraph)
    _write(args.out, _format_graph(tilde, args.format))
    return EXIT_OK


def cmd_analyze(args):
    g = _load_graph(args.input, args.input_format)
    trail, trail_w = dg.longest_closed_trail(g, args.bound)
    report = degree_bound_report(g, args.bound)
    data = {
        "vertices": len(g),
        "edges": g.n_edges,
        "components": [sorted(c) for c in dg.underlying_components(g)],
        "oriented": dg.is_oriented(g),
        "acyclic": dg.is_acyclic(g),
        "sink_free": dg.is_sink_free(g),
        "longest_path": {"length": report.longest_path, "witness": list(report.path_witness)},
        "longest_cycle": {"length": report.longest_cycle, "witness": list(report.cycle_witness)},
        "longest_closed_trail": {"length": trail, "witness": list(trail_w)},
        "degree_bound": report.to_dict(),
    }
    if isinstance(g, dg.ColoredDigraph):
        data["bitournament"] = is_bitournament(g).verdict.value
        data["bitransitive"] = is_bitransitive(g).verdict.value
    _write(args.out, dumps_canonical(data))
    return EXIT_OK


def _load_json(path):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg} (at position {exc.pos})") from None


def cmd_oddeven(args):
    data = _load_json(args.input)
    if isinstance(data, dict) and "A" in data:
        g = build_odd_even(OddEvenSpec(data["A"], data.get("O", ())))
        _write(args.out, _format_graph(g, args.format))
        return EXIT_OK
    rep = find_odd_even_representation(graph_from_dict(data), max_value=args.bound or 64)
    _write(args.out, dumps_canonical(rep.to_dict()))
    return EXIT_OK


def cmd_gammas(args):
    data = _load_json(args.input)
    if isinstance(data, dict) and "S" in data:
        g = build_gamma_s(NumberSetSpec(data["S"]))
        _write(args.out, _format_graph(g, args.format))
        return EXIT_OK
    rep = find_gamma_s_representation(graph_from_dict(data))
    _write(args.out, dumps_canonical(rep.to_dict() if rep else None))
    return EXIT_OK


def _config_from(args, kind):
    n_u, n_v = _sides(args.sides)
    return GenConfig(
        kind=kind,
        leaves=args.leaves,
        leaves_max=args.leaves_max,
        n_u=n_u,
        n_v=n_v,
        p=args.p,
        colors=args.colors,
        seed=args.seed,
        ensure_sink_free=args.sink_free,
    )


def _sides(text):
    try:
        a, b = text.lower().split("x")
        return int(a), int(b)
    except ValueError:
        raise InputError(f"--sides expects NxM, got {text!r}") from None


def cmd_gen(args):
    cfg = _config_from(args, args.kind.replace("-", "_"))
    header = json.dumps(cfg.to_dict(), sort_keys=True)
    outputs = []
    for trial in range(args.trials):
        made = generate(cfg, trial)
        if cfg.kind == "tree":
            outputs.append(("nwk", f"# config: {header} trial: {trial}\n{to_newick(*made)}\n"))
        else:
            data = {"config": {**cfg.to_dict(), "trial": trial}, **graph_to_dict(made)}
            outputs.append(("json", dumps_canonical(data)))
    if args.out in (None, "-"):
        for _, text in outputs:
            sys.stdout.write(text)
    else:
        target = Path(args.out)
        target.mkdir(parents=True, exist_ok=True)
        for trial, (ext, text) in enumerate(outputs):
            (target / f"{cfg.kind}-{cfg.seed}-{trial:05d}.{ext}").write_text(text)
    return EXIT_OK


SOURCES = {
    "tree": "tree",
    "bipartite": "bipartite",
    "bitournament": "bitournament",
    "enumerate-bipartite": "enumerate_bipartite",
    "enumerate-bitournament": "enumerate_bitournament",
}


def cmd_verify(args):
    cfg = _config_from(args, SOURCES[args.source])
    props = [p.strip() for p in args.props.split(",")] if args.props else None
    run_dir = Path(args.run_dir) if args.run_dir else default_run_dir()
    trials = args.trials if not cfg.kind.startswith("enumerate") or args.trials else None
    report = run_suite(cfg, props, trials, args.seed, run_dir=run_dir, workers=args.workers)
    _write(args.out, report.to_json())
    print(report.table(), file=sys.stderr)
    return EXIT_VIOLATED if report.violations else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="cbmg", description="Colored best match graphs: build, check, verify.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        p.add_argument("--in", dest="input", default="-", help="input file ('-' for stdin)")
        p.add_argument("--out", default="-", help="output file ('-' for stdout)")
        if fmt:
            p.add_argument("--format", choices=("json", "edgelist", "dot"), default="json",
                           help="output graph format")
        return p

    def graph_input(p):
        p.add_argument("--input-format", choices=("json", "edgelist", "newick"),
                       help="input format (default: by file extension, else JSON)")
        return p

    p = common(sub.add_parser("build", help="build the best match graph of a colored Newick tree"))
    p.add_argument("--colors", help="leaf<TAB>color table overriding '#color' suffixes")
    p.add_argument("--collapse-unary", action="store_true", help="contract single-child internal nodes")
    p.set_defaults(func=cmd_build)

    p = graph_input(common(sub.add_parser("check", help="run property checkers on a graph"), fmt=False))
    p.add_argument("--props", default="n1,n2,n3", help=f"comma-separated: {','.join(sorted(CHECKERS))}")
    p.add_argument("--scope", choices=(QUOTIENT, RAW), default=QUOTIENT)
    p.set_defaults(func=cmd_check)

    p = graph_input(common(sub.add_parser("quotient", help="quotient graph and preservation checks"), fmt=False))
    p.add_argument("--bound", type=int, default=dg.EXACT_SEARCH_BOUND)
    p.set_defaults(func=cmd_quotient)

    p = graph_input(common(sub.add_parser("reduce", help="quotient, then drop one arc of every symmetric pair")))
    p.set_defaults(func=cmd_reduce)

    p = graph_input(common(sub.add_parser("analyze", help="paths, cycles, circuits, degrees"), fmt=False))
    p.add_argument("--bound", type=int, default=dg.EXACT_SEARCH_BOUND)
    p.set_defaults(func=cmd_analyze)

    p = common(sub.add_parser("oddeven", help='build from {"A":..,"O":..} or find a representation of a graph'))
    p.add_argument("--bound", type=int, help="largest value tried by the representation search (default 64)")
    p.set_defaults(func=cmd_oddeven)

    p = common(sub.add_parser("gammas", help='build from {"S":..} or find a representation of a bitournament'))
    p.set_defaults(func=cmd_gammas)

    def gen_options(p):
        p.add_argument("--leaves", type=int, default=6)
        p.add_argument("--leaves-max", type=int)
        p.add_argument("--sides", default="2x2", help="side sizes NxM for bipartite sources")
        p.add_argument("--p", type=float, default=0.5, help="edge probability")
        p.add_argument("--colors", type=int, default=2)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--sink-free", action="store_true")
        return p

    p = gen_options(sub.add_parser("gen", help="write random trees or graphs"))
    p.add_argument("--kind", choices=("tree", "bipartite", "bitournament"), default="tree")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--out", default="-", help="output directory ('-' for stdout)")
    p.set_defaults(func=cmd_gen)

    p = gen_options(sub.add_parser("verify", help="run the theorem registry over a source"))
    p.add_argument("--source", choices=sorted(SOURCES), default="tree")
    p.add_argument("--props", help=f"comma-separated property ids (default all): {','.join(REGISTRY)}")
    p.add_argument("--trials", type=int, help="instances for random sources; optional cap for enumerations")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--run-dir", help="counterexample directory (default $CBMG_RUN_DIR or ./runs)")
    p.add_argument("--out", default="-", help="report JSON ('-' for stdout)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "verify" and args.source in ("tree", "bipartite", "bitournament"):
        if args.trials is None:
            args.trials = 100
    try:
        return args.func(args)
    except (InputError, PreconditionFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
