"""Hunt-Szymanski evaluation of F and R at match points only.

Thresholds are kept in a sorted list searched with :mod:`bisect`, so each
match costs O(log m).
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Collection, Literal, Optional, Sequence

from .core import Match, Token, encode
from .preprocess import build_codes
from .solver import NO_SOLUTION, StrIcLcsResult, solve


@dataclass
class SparseDpValues:
    """F (or R) values stored at the kept matches only."""

    direction: Literal["forward", "reverse"]
    values: dict[Match, int] = field(default_factory=dict)
    ops: int = 0

    def __getitem__(self, key) -> int:
        return self.values[Match(*key)]

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        if isinstance(other, dict):
            return self.values == other
        if isinstance(other, SparseDpValues):
            return self.direction == other.direction and self.values == other.values
        return NotImplemented


def _columns(b) -> dict:
    occ: dict = {}
    for j, tok in enumerate(b, 1):
        occ.setdefault(tok, []).append(j)
    return occ


def _sweep(a, b, keep, rows: Optional[Collection[int]], cols: Optional[Collection[int]]):
    """Row-major threshold sweep; yields ``(i, j, F[i][j])`` at kept matches."""
    occ = _columns(b)
    desc = {tok: js[::-1] for tok, js in occ.items()}
    kept_cols = [j for j in occ.get(keep, ()) if cols is None or j in cols]
    thresholds: list[int] = []
    out = []
    ops = 0
    for i, tok in enumerate(a, 1):
        js = desc.get(tok)
        if not js:
            continue
        for j in js:
            k = bisect_left(thresholds, j)
            if k == len(thresholds):
                thresholds.append(j)
            else:
                thresholds[k] = j
        ops += len(js)
        if tok == keep and (rows is None or i in rows):
            for j in kept_cols:
                out.append((i, j, bisect_right(thresholds, j)))
            ops += len(kept_cols)
    return out, ops


def sparse_forward(a: Sequence, b: Sequence, keep: Token,
                   rows: Optional[Collection[int]] = None,
                   cols: Optional[Collection[int]] = None) -> SparseDpValues:
    """``F[i][j]`` at every match with ``A[i] == keep``.

    ``rows``/``cols`` further restrict which matches are stored.
    """
    cells, ops = _sweep(a, b, keep, rows, cols)
    return SparseDpValues("forward", {Match(i, j): v for i, j, v in cells}, ops)


def sparse_reverse(a: Sequence, b: Sequence, keep: Token,
                   rows: Optional[Collection[int]] = None,
                   cols: Optional[Collection[int]] = None) -> SparseDpValues:
    """``R[i][j]`` at every match with ``A[i] == keep``, via a forward sweep
    over the reversed inputs."""
    n, m = len(a), len(b)
    rrows = None if rows is None else {n + 1 - i for i in rows}
    rcols = None if cols is None else {m + 1 - j for j in cols}
    cells, ops = _sweep(a[::-1], b[::-1], keep, rrows, rcols)
    return SparseDpValues("reverse", {Match(n + 1 - i, m + 1 - j): v for i, j, v in cells}, ops)


def solve_sparse(a: Sequence, b: Sequence, p: Sequence, witness: bool = False) -> StrIcLcsResult:
    """Length and anchor of an STR-IC-LCS from sparse F/R values.

    With ``witness=True`` the sequence is reconstructed by the dense solver.
    """
    if len(p) == 0:
        raise ValueError("constraint must be non-empty")
    ac, bc, pc = encode(a, b, p)
    ta, tb = build_codes(ac, pc), build_codes(bc, pc)
    starts_a, starts_b = ta.as_dict(), tb.as_dict()
    if not starts_a or not starts_b:
        return NO_SOLUTION
    # integer codes keep token comparisons cheap in the sweep
    al, bl, pl = ac.tolist(), bc.tolist(), pc.tolist()
    fwd = sparse_forward(al, bl, pl[0], starts_a.keys(), starts_b.keys())
    rev = sparse_reverse(al, bl, pl[-1], set(starts_a.values()), set(starts_b.values()))
    r = len(pl)
    best, anchor = -1, None
    for i, qa in starts_a.items():
        for j, qb in starts_b.items():
            val = fwd.values[(i, j)] + rev.values[(qa, qb)] + r - 2
            if val > best:
                best, anchor = val, Match(i, j)
    if not witness:
        return StrIcLcsResult(best, anchor)
    dense = solve(a, b, p)
    return StrIcLcsResult(best, anchor, dense.sequence, dense.trace)
