"""Exact Tutte polynomials of multigraphs, their specializations, and brute-force cross-checks."""

from .engine import TutteEngine, canonical_key, tg_invariant_eval, tutte, tutte_eval
from .errors import BudgetExceededError, GraphInputError, NotConnectedError, ParseError
from .multigraph import MultiGraph, contract_edge, delete_edge, format_edge_list, parse_edge_list, read_edge_list
from .oracles import Budgets
from .polynomial import BiPoly, UniPoly

__all__ = [
    "BiPoly",
    "Budgets",
    "BudgetExceededError",
    "GraphInputError",
    "MultiGraph",
    "NotConnectedError",
    "ParseError",
    "TutteEngine",
    "UniPoly",
    "canonical_key",
    "contract_edge",
    "delete_edge",
    "format_edge_list",
    "parse_edge_list",
    "read_edge_list",
    "tg_invariant_eval",
    "tutte",
    "tutte_eval",
]
