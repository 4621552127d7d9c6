"""STR-IC-LCS over z >= 2 main sequences with z-dimensional LCS tensors."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .core import encode, rebuild
from .preprocess import build_codes
from .solver import NO_SOLUTION, StrIcLcsResult, greedy_positions

MAX_CELLS = 20_000_000


@dataclass(frozen=True)
class MultiInstance:
    mains: tuple
    constraint: Sequence

    def __post_init__(self):
        object.__setattr__(self, "mains", tuple(self.mains))
        if len(self.mains) < 2:
            raise ValueError("need at least two main sequences")

    @property
    def z(self) -> int:
        return len(self.mains)


class _Tensor:
    """Flat tensor with mixed-radix indexing over ``0..n_k+1`` per axis."""

    def __init__(self, cells: np.ndarray, lens: np.ndarray):
        self.cells = cells
        dims = lens + 2
        self.strides = [int(np.prod(dims[k + 1:])) for k in range(lens.size)]

    def flat(self, coord) -> int:
        return sum(c * s for c, s in zip(coord, self.strides))

    def __getitem__(self, coord) -> int:
        return int(self.cells[self.flat(coord)])


def _tokens_equal(mains, coord) -> bool:
    tok = mains[0][coord[0] - 1]
    return all(s[c - 1] == tok for s, c in zip(mains[1:], coord[1:]))


def _walk(t: _Tensor, mains, coord, step: int) -> list[tuple[int, ...]]:
    # step=-1 walks towards the origin (forward tensor), +1 towards the far corner.
    lens = [len(s) for s in mains]
    coord = list(coord)
    out = []
    inside = (lambda c: all(x > 0 for x in c)) if step < 0 else (
        lambda c: all(x <= n for x, n in zip(c, lens)))
    while inside(coord):
        if _tokens_equal(mains, coord):
            out.append(tuple(coord))
            coord = [x + step for x in coord]
            continue
        here = t[coord]
        for k in range(len(coord)):
            coord[k] += step
            if t[coord] == here:
                break
            coord[k] -= step
    if step < 0:
        out.reverse()
    return out


def multi_solve(instance: MultiInstance, max_cells: int = MAX_CELLS) -> StrIcLcsResult:
    """Longest common subsequence of every main that contains the constraint."""
    mains, p = instance.mains, instance.constraint
    lens = np.array([len(s) for s in mains], dtype=np.int64)
    cells = int(np.prod(lens + 2, dtype=np.float64))
    if cells > max_cells:
        raise ValueError(f"tensor of {cells} cells exceeds the cap of {max_cells}")
    codes = encode(*mains, p)
    mc, pc = codes[:-1], codes[-1]
    packed = np.zeros((len(mc), max(1, int(lens.max()))), dtype=np.int32)
    for k, c in enumerate(mc):
        packed[k, :c.size] = c

    if pc.size == 0:
        fwd = _Tensor(_kernels.fill_multi(packed, lens, True), lens)
        trace = tuple(_walk(fwd, mains, tuple(lens.tolist()), -1))
        return StrIcLcsResult(fwd[tuple(lens.tolist())], None,
                              rebuild(mains[0], (mains[0][t[0] - 1] for t in trace)), trace)

    tables = [build_codes(c, pc).as_dict() for c in mc]
    if not all(tables):
        return NO_SOLUTION
    fwd = _Tensor(_kernels.fill_multi(packed, lens, True), lens)
    rev = _Tensor(_kernels.fill_multi(packed, lens, False), lens)
    r = pc.size
    best: Optional[int] = None
    anchor = None
    # every start in a table holds the constraint's first symbol, so each tuple is a match
    for start in product(*(sorted(t) for t in tables)):
        end = tuple(t[s] for t, s in zip(tables, start))
        val = fwd[start] + rev[end] + r - 2
        if best is None or val > best:
            best, anchor = val, start
    mids = [greedy_positions(s, p, a) for s, a in zip(mains, anchor)]
    mid = list(zip(*mids))
    head = _walk(fwd, mains, anchor, -1)
    tail = _walk(rev, mains, mid[-1], +1)
    trace = tuple(head[:-1] + mid + tail[1:])
    seq = rebuild(mains[0], (mains[0][t[0] - 1] for t in trace))
    return StrIcLcsResult(best, anchor, seq, trace)
