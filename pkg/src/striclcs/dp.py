"""Forward and reverse LCS matrices and backtracking over them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from . import _kernels
from .core import Match, encode, rebuild


@dataclass(frozen=True, eq=False)
class DpMatrix:
    """LCS lengths over an ``(n+2) x (m+2)`` grid with both sentinel borders.

    Forward: ``cells[i, j] = LLCS(A[1..i], B[1..j])``.
    Reverse: ``cells[i, j] = LLCS(A[i..n], B[j..m])``.
    """

    direction: Literal["forward", "reverse"]
    cells: np.ndarray
    n: int
    m: int

    def __getitem__(self, ij) -> int:
        return int(self.cells[ij])

    @property
    def llcs(self) -> int:
        if self.direction == "forward":
            return int(self.cells[self.n, self.m])
        return int(self.cells[1, 1])


def _freeze(cells: np.ndarray) -> np.ndarray:
    cells.flags.writeable = False
    return cells


def forward_codes(a: np.ndarray, b: np.ndarray) -> DpMatrix:
    return DpMatrix("forward", _freeze(_kernels.fill_forward(a, b)), a.size, b.size)


def reverse_codes(a: np.ndarray, b: np.ndarray) -> DpMatrix:
    return DpMatrix("reverse", _freeze(_kernels.fill_reverse(a, b)), a.size, b.size)


def forward_matrix(a: Sequence, b: Sequence) -> DpMatrix:
    return forward_codes(*encode(a, b))


def reverse_matrix(a: Sequence, b: Sequence) -> DpMatrix:
    return reverse_codes(*encode(a, b))


def forward_trace(f: DpMatrix, ac: np.ndarray, bc: np.ndarray, i: int, j: int) -> list[Match]:
    """Matches of an optimal common subsequence of ``A[1..i]``, ``B[1..j]``.

    Works on token codes.  Takes the diagonal at matches; otherwise steps up
    on ties.
    """
    return [Match(x, y) for x, y in _kernels.trace_forward(f.cells, ac, bc, i, j).tolist()]


def reverse_trace(g: DpMatrix, ac: np.ndarray, bc: np.ndarray, i: int, j: int) -> list[Match]:
    return [Match(x, y) for x, y in _kernels.trace_reverse(g.cells, ac, bc, i, j).tolist()]


def _check_match(a: Sequence, b: Sequence, start) -> tuple[int, int]:
    i, j = start
    if not (1 <= i <= len(a) and 1 <= j <= len(b)) or a[i - 1] != b[j - 1]:
        raise ValueError(f"({i}, {j}) is not a match")
    return i, j


def backtrack_forward(f: DpMatrix, a: Sequence, b: Sequence, start) -> Sequence:
    """Optimal common subsequence of the prefixes ending with the match ``start``."""
    i, j = _check_match(a, b, start)
    ac, bc = encode(a, b)
    return rebuild(a, (a[t.i - 1] for t in forward_trace(f, ac, bc, i, j)))


def backtrack_reverse(g: DpMatrix, a: Sequence, b: Sequence, start) -> Sequence:
    """Optimal common subsequence of the suffixes starting with the match ``start``."""
    i, j = _check_match(a, b, start)
    ac, bc = encode(a, b)
    return rebuild(a, (a[t.i - 1] for t in reverse_trace(g, ac, bc, i, j)))
