"""Registry of theorem properties and the harness that runs them over instances.

Each :class:`TheoremProperty` pairs a tuple of named hypotheses with a
decidable claim. :func:`evaluate_property` checks the hypotheses on a graph
(``precondition_failed`` when one is unmet) and then the claim. Claims with an
internal premise ("for all u, v with ...") report ``vacuous`` when the premise
never fires on the instance.

:func:`run_suite` evaluates properties over a generated or enumerated source.
Each instance is checked both as given (view ``raw``) and after quotienting
(view ``quotient``); hypotheses such as ``no-equivalent-vertices`` select the
view where they apply.
"""

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path

from . import digraph as dg
from .errors import CapacityError, InputError, InvariantError, PreconditionFailed
from .gen import (
    GenConfig,
    bipartite_count,
    bipartite_from_index,
    bitournament_count,
    bitournament_from_index,
    generate,
    ENUM_BIPARTITE_LIMIT,
    ENUM_BITOURNAMENT_LIMIT,
)
from .io import dumps_canonical, graph_from_dict, graph_to_dict
from .phylo import build_cbmg
from .props import RAW, check_hierarchy, check_n1, check_n2, check_n3, is_bitransitive, is_bitournament, recognize_2cbmg
from .quotient import check_chromatic_preserved, check_connectivity_preserved, has_equivalent_vertices, quotient
from .report import PropertyReport, Verdict
from .transform import find_gamma_s_representation, find_odd_even_representation, remove_symmetric_edges

VIEWS = ("raw", "quotient")
CAPACITY = "capacity"
ODD_EVEN_MAX_VALUE = 64


class Instance:
    """A graph plus lazily computed neighbourhood data shared by all claims."""

    def __init__(self, g, origin="graph"):
        self.g = g
        self.origin = origin
        self.vertices = g.sorted_vertices()

    @cached_property
    def out(self):
        return {v: self.g.out(v) for v in self.vertices}

    @cached_property
    def inn(self):
        return {v: self.g.inn(v) for v in self.vertices}

    @cached_property
    def out2(self):
        out = self.out
        return {v: frozenset().union(*(out[w] for w in out[v])) for v in self.vertices}

    @cached_property
    def reach(self):
        return {v: dg.reach_from(self.g, v) for v in self.vertices}

    @cached_property
    def color(self):
        sigma = getattr(self.g, "color", None)
        return {v: sigma(v) if sigma else "" for v in self.vertices}

    @cached_property
    def equivalent(self):
        return {v: (self.out[v], self.inn[v]) for v in self.vertices}

    def partners(self, u):
        return sorted(v for v in self.out[u] if u in self.out[v])

    @cached_property
    def hypothesis_cache(self):
        return {}


# -- hypotheses -----------------------------------------------------------------


def _balanced_even(inst):
    g = inst.g
    if len(getattr(g, "colors", ())) != 2:
        return False
    sides = [g.color_class(c) for c in g.colors]
    if len(sides[0]) != len(sides[1]) or len(sides[0]) % 2:
        return False
    return all(len(inst.out[v]) == len(inst.inn[v]) for v in inst.vertices)


HYPOTHESES = {
    "bipartite-proper": lambda i: isinstance(i.g, dg.ColoredDigraph)
    and len(i.g.colors) <= 2
    and i.g.is_bipartite_proper(),
    "N1": lambda i: check_n1(i.g, RAW).ok,
    "N2": lambda i: check_n2(i.g).ok,
    "N3": lambda i: check_n3(i.g, RAW).ok,
    "sink-free": lambda i: all(i.out[v] for v in i.vertices),
    "no-equivalent-vertices": lambda i: not has_equivalent_vertices(i.g),
    "oriented": lambda i: dg.is_oriented(i.g),
    "acyclic": lambda i: dg.is_acyclic(i.g),
    "bitournament": lambda i: isinstance(i.g, dg.ColoredDigraph) and is_bitournament(i.g).verdict is Verdict.HOLDS,
    "balanced-even-regular": _balanced_even,
    "at-most-8-vertices": lambda i: len(i.g) <= 8,
    "tree-built": lambda i: i.origin == "tree",
}


def hypothesis_holds(name, inst):
    cache = inst.hypothesis_cache
    if name not in cache:
        cache[name] = bool(HYPOTHESES[name](inst))
    return cache[name]


# -- claims ---------------------------------------------------------------------


@dataclass
class Outcome:
    verdict: Verdict
    witness: tuple | None = None
    fired: int = 0
    details: dict = field(default_factory=dict)


def _ok(fired=0, **details):
    return Outcome(Verdict.HOLDS, None, fired, details)


def _bad(witness, fired=0, **details):
    return Outcome(Verdict.VIOLATED, tuple(witness), fired, details)


def claim_lem1(inst):
    out, inn, col = inst.out, inst.inn, inst.color
    fired = 0
    for a1 in inst.vertices:
        for b2 in sorted(out[a1]):
            for a2 in sorted(out[b2]):
                if col[a1] != col[a2]:
                    continue
                fired += 1
                if not out[a2] <= out[a1] or not inn[a1] <= inn[a2]:
                    return _bad((a1, b2, a2), fired)
    return _ok(fired)


def claim_lem2(inst):
    out, inn, col = inst.out, inst.inn, inst.color
    fired = 0
    for a1, a2 in combinations(inst.vertices, 2):
        if col[a1] != col[a2]:
            continue
        b1s = inn[a1] & out[a2]
        b2s = out[a1] & inn[a2]
        if b1s and b2s:
            fired += 1
            if inst.equivalent[a1] != inst.equivalent[a2]:
                return _bad((a1, a2, min(b1s), min(b2s)), fired)
    return _ok(fired)


def claim_lem4(inst):
    for u in inst.vertices:
        p = inst.partners(u)
        if len(p) > 1:
            return _bad((u, p[0], p[1]), len(inst.vertices))
    return _ok(len(inst.vertices))


def claim_lem3(inst):
    out = inst.out
    for v0 in inst.vertices:
        for v1 in sorted(out[v0]):
            for v2 in sorted(out[v1]):
                for v3 in sorted(out[v2]):
                    if v0 in out[v3]:
                        steps = [(v0, v1), (v1, v2), (v2, v3), (v3, v0)]
                        if len(set(steps)) == 4:
                            return _bad((v0, v1, v2, v3, v0), 1)
    return _ok(1)


def claim_prop11(inst):
    length, trail = dg.longest_closed_trail(inst.g)
    if length > 2:
        return _bad(trail, 1, longest_closed_trail=length)
    return _ok(1, longest_closed_trail=length)


def claim_lem24(inst):
    out, out2 = inst.out, inst.out2
    fired = 0
    for u, v in combinations(inst.vertices, 2):
        if out[u] & out[v]:
            continue
        fired += 1
        common = out2[u] & out2[v]
        if common:
            return _bad((u, v, min(common)), fired)
    return _ok(fired)


def _no_common_target(inst, pairs, same_color_w):
    reach, col = inst.reach, inst.color
    fired = 0
    fired_w_endpoint = 0
    for u, v in pairs:
        for w in inst.vertices:
            if same_color_w and col[w] != col[u]:
                continue
            fired += 1
            if w in (u, v):
                fired_w_endpoint += 1
            if w in reach[u] and w in reach[v]:
                return _bad((u, v, w), fired, w_endpoint_cases=fired_w_endpoint)
    return _ok(fired, w_endpoint_cases=fired_w_endpoint)


def _disjoint_same_color_pairs(inst):
    out, col = inst.out, inst.color
    return [(u, v) for u, v in combinations(inst.vertices, 2) if col[u] == col[v] and not out[u] & out[v]]


def claim_lem21(inst):
    return _no_common_target(inst, _disjoint_same_color_pairs(inst), same_color_w=True)


def claim_lem22(inst):
    return _no_common_target(inst, _disjoint_same_color_pairs(inst), same_color_w=False)


def claim_lem33(inst):
    out, reach = inst.out, inst.reach
    fired = 0
    for u in inst.vertices:
        for v in inst.vertices:
            if u == v or not out[u] <= out[v]:
                continue
            for w in sorted(reach[u]):
                fired += 1
                if w not in reach[v]:
                    return _bad((u, v, w), fired)
    return _ok(fired)


def _independent(inst, u, v):
    return v not in inst.out[u] and u not in inst.out[v]


def _n1_disjunction_failures(inst):
    """Pairs from different classes joined by at most one arc that break the one-sided N1 form.

    Recorded for information only; the asserted claims use full independence.
    """
    out, out2, eq = inst.out, inst.out2, inst.equivalent
    count = 0
    for u, v in combinations(inst.vertices, 2):
        if eq[u] == eq[v] or (v in out[u] and u in out[v]):
            continue
        if out[u] & out2[v] or out[v] & out2[u]:
            count += 1
    return count


def claim_lem23(inst):
    col = inst.color
    pairs = [
        (u, v) for u, v in combinations(inst.vertices, 2) if col[u] != col[v] and _independent(inst, u, v)
    ]
    result = _no_common_target(inst, pairs, same_color_w=False)
    result.details["n1_disjunction_failures"] = _n1_disjunction_failures(inst)
    return result


def claim_prop4(inst):
    out = inst.out
    pairs = [
        (u, v)
        for u, v in combinations(inst.vertices, 2)
        if _independent(inst, u, v) and not out[u] & out[v]
    ]
    result = _no_common_target(inst, pairs, same_color_w=False)
    result.details["n1_disjunction_failures"] = _n1_disjunction_failures(inst)
    return result


def claim_dec1(inst):
    out, out2, eq = inst.out, inst.out2, inst.equivalent
    fired = 0
    for u, v in combinations(inst.vertices, 2):
        if eq[u] == eq[v] or not out[u] & out[v] or u in out2[v] or v in out2[u]:
            continue
        fired += 1
        if inst.partners(u) and inst.partners(v):
            return _bad((u, v), fired)
    return _ok(fired)


def claim_cor1(inst):
    length, cycle = dg.longest_directed_cycle(inst.g)
    if length > 2:
        return _bad(cycle, 1, longest_cycle=length)
    return _ok(1, longest_cycle=length)


def claim_tilde_acyclic(inst):
    tilde = remove_symmetric_edges(inst.g)
    length, cycle = dg.longest_directed_cycle(tilde)
    if length:
        return _bad(cycle, 1, longest_cycle=length)
    return _ok(1)


def _from_report(report: PropertyReport):
    return Outcome(report.verdict, report.witness, report.checked_pairs, dict(report.details))


def claim_lem01(inst):
    return _from_report(check_connectivity_preserved(inst.g))


def claim_lem02(inst):
    return _from_report(check_chromatic_preserved(inst.g))


def claim_hier(inst):
    return _from_report(check_hierarchy(inst.g))


def claim_cbmg(inst):
    return _from_report(recognize_2cbmg(inst.g))


def claim_res25(inst):
    bitrans = is_bitransitive(inst.g)
    acyclic = dg.is_acyclic(inst.g)
    if (bitrans.verdict is Verdict.HOLDS) != acyclic:
        if acyclic:
            return _bad(bitrans.witness, 1, bitransitive=False, acyclic=True)
        _, cycle = dg.longest_directed_cycle(inst.g)
        return _bad(cycle, 1, bitransitive=True, acyclic=False)
    details = {"bitransitive": acyclic, "acyclic": acyclic}
    if acyclic:
        try:
            rep = find_gamma_s_representation(inst.g)
        except InvariantError:
            return _bad(tuple(inst.vertices), 1, representation="round-trip failed", **details)
        if rep is None:
            return _bad(tuple(inst.vertices), 1, representation="missing", **details)
        details["S"] = sorted(rep.spec.S)
    return _ok(1, **details)


def claim_res29(inst):
    if is_bitransitive(inst.g).verdict is Verdict.HOLDS:
        return _bad(tuple(inst.vertices), 1)
    return _ok(1)


def claim_res34(inst):
    try:
        rep = find_odd_even_representation(inst.g, max_value=ODD_EVEN_MAX_VALUE)
    except InvariantError:
        return _bad(tuple(inst.vertices), 1, representation="round-trip failed")
    return _ok(1, A=sorted(rep.spec.A), O=sorted(rep.spec.O))


# -- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremProperty:
    id: str
    hypotheses: tuple
    claim: object
    quantifier: str
    conditional: bool = True  # claim has an internal premise that may never fire


BIP = "bipartite-proper"

REGISTRY = {
    p.id: p
    for p in [
        TheoremProperty("P-CBMG", ("tree-built",), claim_cbmg,
                        "graphs built from a tree satisfy N1, N2, N3 on every component", False),
        TheoremProperty("P-LEM1", (BIP, "N2"), claim_lem1,
                        "same-color a1, a2 and b2 with a1->b2->a2: N(a2) in N(a1) and N-(a1) in N-(a2)"),
        TheoremProperty("P-LEM2", (BIP, "N2"), claim_lem2,
                        "distinct same-color a1, a2 with a1->b2->a2 and a2->b1->a1 are equivalent"),
        TheoremProperty("P-LEM4", (BIP, "N2", "no-equivalent-vertices"), claim_lem4,
                        "every vertex has at most one symmetric partner", False),
        TheoremProperty("P-LEM3", (BIP, "N2", "no-equivalent-vertices"), claim_lem3,
                        "no closed trail of length 4", False),
        TheoremProperty("P-PROP11", (BIP, "N2", "no-equivalent-vertices"), claim_prop11,
                        "every closed trail has length at most 2", False),
        TheoremProperty("P-LEM24", (BIP, "N2", "sink-free"), claim_lem24,
                        "u != v with disjoint N(u), N(v) have disjoint N(N(u)), N(N(v))"),
        TheoremProperty("P-LEM21", (BIP, "N2", "sink-free"), claim_lem21,
                        "same-color u != v with disjoint out-sets never both reach a same-color w"),
        TheoremProperty("P-LEM22", (BIP, "N2", "sink-free"), claim_lem22,
                        "same-color u != v with disjoint out-sets never both reach any w"),
        TheoremProperty("P-LEM33", (), claim_lem33,
                        "N(u) in N(v) and u reaches w imply v reaches w"),
        TheoremProperty("P-LEM23", (BIP, "N1", "N2", "sink-free"), claim_lem23,
                        "independent u, v of different colors never both reach any w"),
        TheoremProperty("P-PROP4", (BIP, "N1", "N2", "sink-free"), claim_prop4,
                        "independent u, v with disjoint out-sets never both reach any w"),
        TheoremProperty("P-DEC1", (BIP, "N2", "N3"), claim_dec1,
                        "non-equivalent u, v with a common out-neighbour and no 2-path between them: "
                        "at most one has a symmetric partner"),
        TheoremProperty("P-COR1", (BIP, "N2", "no-equivalent-vertices"), claim_cor1,
                        "every directed cycle has length 2", False),
        TheoremProperty("P-TILDE-ACYCLIC", (BIP, "N2", "no-equivalent-vertices"), claim_tilde_acyclic,
                        "dropping one arc of each symmetric pair leaves an acyclic graph", False),
        TheoremProperty("P-LEM01", ("sink-free",), claim_lem01,
                        "graph and quotient have the same number of components", False),
        TheoremProperty("P-LEM02", (), claim_lem02,
                        "graph and quotient have the same chromatic number", False),
        TheoremProperty("P-HIER", (BIP, "sink-free", "N1", "N2", "N3"), claim_hier,
                        "reach sets N(v) + N(N(v)) are pairwise nested or disjoint", False),
        TheoremProperty("P-RES25", ("bitournament",), claim_res25,
                        "bitransitive iff acyclic; acyclic ones have a number-set representation", False),
        TheoremProperty("P-RES29", ("bitournament", "balanced-even-regular"), claim_res29,
                        "balanced bitournament with even sides and in-degree = out-degree is not bitransitive",
                        False),
        TheoremProperty("P-RES34", (BIP, "oriented", "acyclic", "at-most-8-vertices"), claim_res34,
                        "acyclic oriented bipartite graphs have an odd-even representation", False),
    ]
}

LEMMA_SWEEP = (
    "P-LEM1", "P-LEM2", "P-LEM4", "P-LEM3", "P-PROP11", "P-LEM24", "P-LEM21",
    "P-LEM22", "P-LEM33", "P-LEM23", "P-PROP4", "P-DEC1",
)
N2_FAMILY = LEMMA_SWEEP + ("P-COR1", "P-TILDE-ACYCLIC", "P-LEM01", "P-LEM02", "P-HIER", "P-CBMG")
BITOURNAMENT_FAMILY = ("P-RES25", "P-RES29")


def get_property(pid) -> TheoremProperty:
    try:
        return REGISTRY[pid]
    except KeyError:
        raise InputError(f"unknown property {pid!r}; known: {sorted(REGISTRY)}") from None


def _evaluate(prop, inst, drop=()):
    unmet = [h for h in prop.hypotheses if h not in drop and not hypothesis_holds(h, inst)]
    if unmet:
        return PropertyReport(prop.id, Verdict.PRECONDITION_FAILED, None, 0, {"unmet": unmet})
    try:
        out = prop.claim(inst)
    except PreconditionFailed as exc:
        return PropertyReport(prop.id, Verdict.PRECONDITION_FAILED, None, 0, {"reason": str(exc)})
    verdict = out.verdict
    if verdict is Verdict.HOLDS and prop.conditional and out.fired == 0:
        verdict = Verdict.VACUOUS
    return PropertyReport(prop.id, verdict, out.witness, out.fired, out.details)


def evaluate_property(pid, g, origin="graph", drop=()) -> PropertyReport:
    """Check the hypotheses of ``pid`` on ``g`` and then its claim.

    ``drop`` names hypotheses to ignore (falsification probes). Capacity
    errors from exact searches propagate.
    """
    prop = get_property(pid)
    unknown = set(drop) - set(prop.hypotheses)
    if unknown:
        raise InputError(f"{pid} has no hypothesis {sorted(unknown)}")
    return _evaluate(prop, g if isinstance(g, Instance) else Instance(g, origin), drop)


# -- suite ----------------------------------------------------------------------


@dataclass
class SuiteReport:
    source: dict
    seed: int
    properties: tuple
    instances: int
    counts: dict
    counterexamples: list
    vacuous_flags: list
    wall_time: float = 0.0  # not serialized: reports must be reproducible byte for byte

    @property
    def violations(self):
        return sum(c["violated"] for per_view in self.counts.values() for c in per_view.values())

    def totals(self, pid):
        total = _empty_counts()
        for c in self.counts[pid].values():
            for k, v in c.items():
                total[k] += v
        return total

    def to_dict(self):
        return {
            "source": self.source,
            "seed": self.seed,
            "properties": list(self.properties),
            "instances": self.instances,
            "counts": self.counts,
            "counterexamples": self.counterexamples,
            "vacuous_flags": self.vacuous_flags,
            "violations": self.violations,
        }

    def to_json(self):
        return dumps_canonical(self.to_dict())

    def table(self):
        rows = [f"{'property':<18}{'view':<10}{'holds':>7}{'vacuous':>9}{'violated':>10}{'precond':>9}{'capacity':>10}"]
        for pid in self.properties:
            for view, c in self.counts[pid].items():
                rows.append(
                    f"{pid:<18}{view:<10}{c['holds']:>7}{c['vacuous']:>9}{c['violated']:>10}"
                    f"{c['precondition_failed']:>9}{c['capacity']:>10}"
                )
        rows.append(f"instances: {self.instances}  violations: {self.violations}  wall time: {self.wall_time:.2f}s")
        if self.vacuous_flags:
            rows.append("never exercised: " + ", ".join(self.vacuous_flags))
        return "\n".join(rows)


def _empty_counts():
    return {"instances": 0, "holds": 0, "vacuous": 0, "violated": 0, "precondition_failed": 0, CAPACITY: 0}


def source_size(cfg: GenConfig, trials=None):
    if cfg.kind == "enumerate_bipartite":
        if cfg.n_u * cfg.n_v > ENUM_BIPARTITE_LIMIT:
            raise CapacityError(f"enumerate_bipartite: {cfg.n_u}x{cfg.n_v} is too large")
        total = bipartite_count(cfg.n_u, cfg.n_v)
    elif cfg.kind == "enumerate_bitournament":
        if cfg.n_u * cfg.n_v > ENUM_BITOURNAMENT_LIMIT:
            raise CapacityError(f"enumerate_bitournaments: {cfg.n_u}x{cfg.n_v} is too large")
        total = bitournament_count(cfg.n_u, cfg.n_v)
    else:
        if trials is None:
            raise InputError("random sources need a trial count")
        return trials
    return total if trials is None else min(trials, total)


def make_instance(cfg: GenConfig, index: int):
    """The ``index``-th instance of a source, as ``(graph, origin)``."""
    if cfg.kind == "enumerate_bipartite":
        return bipartite_from_index(cfg.n_u, cfg.n_v, index), "enumerated"
    if cfg.kind == "enumerate_bitournament":
        return bitournament_from_index(cfg.n_u, cfg.n_v, index), "enumerated"
    made = generate(cfg, index)
    if cfg.kind == "tree":
        return build_cbmg(*made), "tree"
    return made, "random"


def _views(g, origin, views):
    out = []
    if "raw" in views:
        out.append(("raw", Instance(g, origin)))
    if "quotient" in views:
        out.append(("quotient", Instance(quotient(g).qgraph, origin)))
    return out


def _run_one(cfg, index, pids, views):
    """Evaluate every property on one instance; returns plain data (picklable)."""
    g, origin = make_instance(cfg, index)
    results = []
    for view, inst in _views(g, origin, views):
        for pid in pids:
            try:
                report = _evaluate(REGISTRY[pid], inst)
            except CapacityError as exc:
                results.append((pid, view, CAPACITY, None, {"error": str(exc)}))
                continue
            results.append((pid, view, report.verdict.value, report.witness, report.details))
    return index, graph_to_dict(g), results


def _run_chunk(args):
    cfg, indices, pids, views = args
    return [_run_one(cfg, i, pids, views) for i in indices]


def run_suite(source: GenConfig, properties=None, trials=None, seed=None, views=VIEWS, run_dir=None, workers=1):
    """Evaluate ``properties`` on every instance of ``source``.

    Random sources draw ``trials`` instances; enumerators visit every graph
    (or the first ``trials``). ``seed`` overrides the config's seed.
    Counterexamples are written as Graph JSON under ``run_dir/seed-<seed>``
    when ``run_dir`` is given. The report does not depend on ``workers``.
    """
    started = time.perf_counter()
    if seed is not None:
        source = source.with_seed(seed)
    pids = tuple(properties) if properties else tuple(REGISTRY)
    for pid in pids:
        get_property(pid)
    views = tuple(v for v in VIEWS if v in views)
    n = source_size(source, trials)

    if workers > 1 and n > 1:
        chunk = max(1, n // (workers * 4))
        jobs = [(source, range(i, min(i + chunk, n)), pids, views) for i in range(0, n, chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [row for part in pool.map(_run_chunk, jobs) for row in part]
    else:
        rows = _run_chunk((source, range(n), pids, views))
    rows.sort(key=lambda r: r[0])

    counts = {pid: {view: _empty_counts() for view in views} for pid in pids}
    counterexamples = []
    for index, gdict, results in rows:
        for pid, view, verdict, witness, details in results:
            c = counts[pid][view]
            c["instances"] += 1
            c[verdict] += 1
            if verdict == Verdict.VIOLATED.value:
                counterexamples.append(
                    {"property": pid, "view": view, "index": index, "graph": gdict,
                     "witness": list(witness), "details": details}
                )
    flags = [
        pid for pid in pids
        if REGISTRY[pid].conditional
        and sum(counts[pid][v]["holds"] + counts[pid][v]["violated"] for v in views) == 0
    ]
    report = SuiteReport(source.to_dict(), source.seed, pids, n, counts, counterexamples, flags)
    if run_dir is not None and counterexamples:
        save_counterexamples(report, run_dir)
    report.wall_time = time.perf_counter() - started
    return report


def default_run_dir():
    return Path(os.environ.get("CBMG_RUN_DIR", "runs"))


def save_counterexamples(report: SuiteReport, run_dir):
    target = Path(run_dir) / f"seed-{report.seed}"
    target.mkdir(parents=True, exist_ok=True)
    paths = []
    for cx in report.counterexamples:
        path = target / f"{cx['property']}-{cx['view']}-{cx['index']:06d}.json"
        path.write_text(dumps_canonical(cx))
        paths.append(path)
    return paths


def replay_counterexample(path) -> PropertyReport:
    """Re-evaluate a saved counterexample in its recorded view."""
    data = json.loads(Path(path).read_text())
    g = graph_from_dict(data["graph"])
    if data.get("view") == "quotient":
        g = quotient(g).qgraph
    origin = "tree" if data["property"] == "P-CBMG" else "graph"
    return evaluate_property(data["property"], g, origin)


def find_counterexample(pid, source: GenConfig, budget=None, drop=None, views=VIEWS):
    """Search ``source`` for a graph violating ``pid`` with hypothesis ``drop`` removed.

    Returns ``(graph, report)`` for the first hit, or ``None`` once the budget
    (instance count) is exhausted.
    """
    prop = get_property(pid)
    dropped = () if drop is None else (drop,)
    if drop is not None and drop not in prop.hypotheses:
        raise InputError(f"{pid} has no hypothesis {drop!r}")
    n = source_size(source, budget if budget is not None else (None if source.kind.startswith("enumerate") else 1000))
    for index in range(n):
        g, origin = make_instance(source, index)
        for view, inst in _views(g, origin, views):
            try:
                report = _evaluate(prop, inst, dropped)
            except CapacityError:
                continue
            if report.verdict is Verdict.VIOLATED:
                return inst.g, report
    return None
