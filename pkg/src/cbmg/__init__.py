"""Colored best match graphs: construction from trees, recognition, quotients,
structural transforms, and executable checks of their graph-theoretic properties."""

from .digraph import ColoredDigraph, Digraph
from .errors import CapacityError, CbmgError, InputError, InvariantError, ParseError, PreconditionFailed
from .phylo import ColorMap, PhyloTree, build_cbmg, lca, parse_newick, precedes
from .quotient import QuotientGraph, equivalence_classes, quotient
from .report import PropertyReport, Verdict

__all__ = [
    "CapacityError",
    "CbmgError",
    "ColorMap",
    "ColoredDigraph",
    "Digraph",
    "InputError",
    "InvariantError",
    "ParseError",
    "PhyloTree",
    "PreconditionFailed",
    "PropertyReport",
    "QuotientGraph",
    "Verdict",
    "build_cbmg",
    "equivalence_classes",
    "lca",
    "parse_newick",
    "precedes",
    "quotient",
]
