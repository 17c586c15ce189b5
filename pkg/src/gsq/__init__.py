"""Chordality of graph squares and line-graph squares.

Bitset graphs, chordality certificates, flower and sprout witnesses,
small-graph corpora and an exhaustive theorem-checking harness.
"""

__version__ = "0.1.0"

from .chordality import ChordalityCertificate, find_hole, is_chordal, is_hole, mcs_order
from .corpus import CorpusSpec, generate_all, generate_random, parse_graph6, write_dot, write_graph6
from .errors import FormatError, GraphError, InvalidWitnessError, NotAHoleError, TheoremViolation
from .graph import Graph, from_edge_list, line_graph, power, square
from .harness import TheoremId, check_theorem, mine_obstructions, verify_corpus
from .patterns import (
    check_sufficient_chordalsq,
    find_claw,
    find_f4,
    find_flower,
    find_sprout,
    find_sunflower,
    find_unwithered_flower,
    is_withered,
)
from .witnesses import extract_flower, extract_sprout, verify_flower, verify_sprout

__all__ = [
    "ChordalityCertificate", "CorpusSpec", "FormatError", "Graph", "GraphError",
    "InvalidWitnessError", "NotAHoleError", "TheoremId", "TheoremViolation",
    "check_sufficient_chordalsq", "check_theorem", "extract_flower", "extract_sprout",
    "find_claw", "find_f4", "find_flower", "find_hole", "find_sprout", "find_sunflower",
    "find_unwithered_flower", "from_edge_list", "generate_all", "generate_random",
    "is_chordal", "is_hole", "is_withered", "line_graph", "mcs_order", "mine_obstructions",
    "parse_graph6", "power", "square", "verify_corpus", "verify_flower", "verify_sprout",
    "write_dot", "write_graph6",
]
