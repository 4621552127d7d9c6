"""Quadratic-time STR-IC-LCS: longest common subsequence containing P as a substring."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .core import Match, Trace, encode, take
from .preprocess import build_codes


@dataclass(frozen=True)
class StrIcLcsResult:
    """Outcome of a solve.

    ``length is None`` means no common subsequence contains the constraint.
    ``anchor`` is the match of the constraint's first symbol (a z-tuple for
    the multi-sequence solver); it is ``None`` for an empty constraint.
    ``trace`` lists the index tuple of every witness symbol.
    """

    length: Optional[int]
    anchor: Optional[tuple[int, ...]] = None
    sequence: Optional[Sequence] = None
    trace: Optional[Sequence[tuple[int, ...]]] = None

    @property
    def found(self) -> bool:
        return self.length is not None


NO_SOLUTION = StrIcLcsResult(None)


def greedy_positions(s: Sequence, p: Sequence, start: int) -> list[int]:
    """1-based positions of the compact appearance of ``p`` in ``s`` from ``start``."""
    out = [start]
    k, x = 1, start
    while k < len(p):
        while s[x] != p[k]:
            x += 1
        x += 1
        out.append(x)
        k += 1
    return out


# tables up to this many cells each are carved from a per-thread buffer kept
# between calls; fresh multi-megabyte arrays cost a page fault per 4 KB
SCRATCH_CELLS = 1 << 23
_scratch = threading.local()


def _tables(n: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    # entries never exceed min(n, m), so 16 bits usually suffice
    dtype = np.int16 if max(n, m) < 32767 else np.int32
    cells = (n + 2) * (m + 2)
    if cells > SCRATCH_CELLS:
        return np.empty((n + 2, m + 2), dtype), np.empty((n + 2, m + 2), dtype)
    buf = getattr(_scratch, "buf", None)
    if buf is None or buf.dtype != dtype or buf.size < 2 * cells:
        buf = np.empty(max(2 * cells, 1 << 16), dtype)
        _scratch.buf = buf
    return buf[:cells].reshape(n + 2, m + 2), buf[cells:2 * cells].reshape(n + 2, m + 2)


def _result(a, ac, length, anchor, trace) -> StrIcLcsResult:
    seq = take(a, ac, trace[:, 0] - 1)
    return StrIcLcsResult(length, anchor, seq, Trace(trace))


def solve(a: Sequence, b: Sequence, p: Sequence) -> StrIcLcsResult:
    """Longest common subsequence of ``a`` and ``b`` that contains ``p`` contiguously.

    The witness is the forward backtrack to the anchor, the compact
    appearances of ``p`` in both inputs, then the reverse backtrack from
    their ends.  An empty ``p`` gives the plain LCS.

    Both LCS tables are materialized in full; their rows are computed 64
    cells at a time and then expanded.
    """
    ac, bc, pc = encode(a, b, p)
    if pc.size == 0:
        trace = _kernels.lcs_trace(ac, bc)
        return _result(a, ac, len(trace), None, trace)
    best, i, j, trace = _kernels.solve_codes(ac, bc, pc, *_tables(ac.size, bc.size))
    if best < 0:
        return NO_SOLUTION
    return _result(a, ac, int(best), Match(int(i), int(j)), trace)


def solve_length_only(a: Sequence, b: Sequence, p: Sequence) -> Optional[int]:
    """Same length as :func:`solve` using row-by-row sweeps (O(m + d*) memory)."""
    ac, bc, pc = encode(a, b, p)
    if pc.size == 0:
        return int(_kernels.bit_llcs(ac, bc))
    ta, tb = build_codes(ac, pc), build_codes(bc, pc)
    best = _kernels.length_only(ac, bc, ta.raw, tb.raw, pc.size)
    return None if best < 0 else int(best)
