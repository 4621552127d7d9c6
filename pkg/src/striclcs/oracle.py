"""Reference solvers for testing: exhaustive enumeration and the O(nmr) DP.

Neither shares code with the quadratic solver beyond the core primitives.
"""
from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

from . import _kernels
from .core import encode, is_subsequence, is_substring, rebuild

EXHAUSTIVE_LIMIT = 16


def exhaustive_multi(mains: Sequence[Sequence], p: Sequence) -> Optional[int]:
    """Brute force over all subsequences of the shortest main."""
    if any(len(s) > EXHAUSTIVE_LIMIT for s in mains):
        raise ValueError(f"exhaustive search is limited to length {EXHAUSTIVE_LIMIT}")
    k_short = min(range(len(mains)), key=lambda k: len(mains[k]))
    short = mains[k_short]
    others = [s for k, s in enumerate(mains) if k != k_short]
    r = len(p)
    for size in range(len(short), r - 1, -1):
        for pos in combinations(range(len(short)), size):
            cand = rebuild(short, (short[k] for k in pos))
            if is_substring(p, cand) and all(is_subsequence(cand, s) for s in others):
                return size
    return None


def exhaustive_str_ic_lcs(a: Sequence, b: Sequence, p: Sequence) -> Optional[int]:
    return exhaustive_multi((a, b), p)


def cubic_str_ic_lcs(a: Sequence, b: Sequence, p: Sequence) -> Optional[int]:
    """O(nmr) DP tracking how much of ``p`` closes the current subsequence."""
    if len(p) == 0:
        raise ValueError("constraint must be non-empty")
    ac, bc, pc = encode(a, b, p)
    best = _kernels.cubic_str_ic(ac, bc, pc)
    return None if best < 0 else int(best)
