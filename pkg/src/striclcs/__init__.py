"""Longest common subsequence with a substring constraint (STR-IC-LCS)."""
from .core import Match, MatchSet, enumerate_matches, is_subsequence, is_substring
from .dp import DpMatrix, backtrack_forward, backtrack_reverse, forward_matrix, reverse_matrix
from .multi import MultiInstance, multi_solve
from .oracle import cubic_str_ic_lcs, exhaustive_multi, exhaustive_str_ic_lcs
from .preprocess import CompactAppearanceTable, build_table, count_compact_appearances
from .solver import StrIcLcsResult, solve, solve_length_only
from .sparse import SparseDpValues, solve_sparse, sparse_forward, sparse_reverse

__all__ = [
    "CompactAppearanceTable", "DpMatrix", "Match", "MatchSet", "MultiInstance",
    "SparseDpValues", "StrIcLcsResult", "backtrack_forward", "backtrack_reverse",
    "build_table", "count_compact_appearances", "cubic_str_ic_lcs", "enumerate_matches",
    "exhaustive_multi", "exhaustive_str_ic_lcs", "forward_matrix", "is_subsequence",
    "is_substring", "multi_solve", "reverse_matrix", "solve", "solve_length_only",
    "solve_sparse", "sparse_forward", "sparse_reverse",
]
