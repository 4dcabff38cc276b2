"""Homological invariants of monomial ideals and edge ideals of weighted graphs."""

from .betti import (
    BettiTable,
    Invariants,
    betti_table,
    betti_taylor_strand,
    betti_upper_koszul,
    ideal_invariants,
    invariants,
)
from .closure import closure_generators, closure_witness, forbidden_subgraph_verdict, in_newton_polyhedron, is_integrally_closed
from .errors import ContextMismatchError, ParseError, ResourceLimitError, UnitIdealError
from .formulas import Prediction, Quantity, predict
from .graph import WeightedGraph, build_cycle, build_family, build_path, build_star, edge_ideal
from .ideal import MonomialIdeal, parse_ideal
from .linalg import FieldSpec
from .monomial import Monomial, VariableContext
from .polarize import PolarizationMap, polarize

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "Invariants", "betti_table", "betti_taylor_strand", "betti_upper_koszul",
    "ideal_invariants", "invariants", "closure_generators", "closure_witness",
    "forbidden_subgraph_verdict", "in_newton_polyhedron", "is_integrally_closed",
    "ContextMismatchError", "ParseError", "ResourceLimitError", "UnitIdealError",
    "Prediction", "Quantity", "predict", "WeightedGraph", "build_cycle", "build_family",
    "build_path", "build_star", "edge_ideal", "MonomialIdeal", "parse_ideal", "FieldSpec",
    "Monomial", "VariableContext", "PolarizationMap", "polarize",
]
