"""Hamiltonian cycle solving parameterized by split-matching-width."""

from .graph import Graph, parse_edge_list, format_edge_list
from .cuts import mm_value, sm_value, is_split, mm_cut_function, sm_cut_function
from .splitdec import SplitDecomposition, split_decompose, LiftedContext
from .branchdec import BranchDecomposition, SizeLimitExceeded
from .pipeline import approx_sm_decomposition
from .solver import solve_hc

__all__ = [
    "Graph", "parse_edge_list", "format_edge_list",
    "mm_value", "sm_value", "is_split", "mm_cut_function", "sm_cut_function",
    "SplitDecomposition", "split_decompose", "LiftedContext",
    "BranchDecomposition", "SizeLimitExceeded",
    "approx_sm_decomposition", "solve_hc",
]

__version__ = "0.1.0"
