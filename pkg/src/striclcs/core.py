"""Sequence and match primitives.

Sequences are any indexable run of hashable tokens (``str``, ``bytes``,
tuples, lists).  Positions in every public contract are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Sequence as SequenceABC
from typing import Hashable, NamedTuple, Optional, Sequence

import numpy as np

Token = Hashable


class Match(NamedTuple):
    """A pair of 1-based positions ``(i, j)`` with ``A[i] == B[j]``."""

    i: int
    j: int


class Trace(SequenceABC):
    """Read-only sequence of 1-based index tuples backed by a ``(k, z)`` int array.

    Compares equal to any sequence holding the same tuples.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = np.array(rows, dtype=np.int64)
        if rows.ndim != 2:
            rows = rows.reshape(0, 2)
        rows.flags.writeable = False
        self._rows = rows

    @property
    def array(self) -> np.ndarray:
        return self._rows

    def __len__(self) -> int:
        return self._rows.shape[0]

    def __getitem__(self, k):
        if isinstance(k, slice):
            return Trace(self._rows[k])
        return tuple(self._rows[k].tolist())

    def __iter__(self):
        return map(tuple, self._rows.tolist())

    def __eq__(self, other) -> bool:
        if isinstance(other, Trace):
            return np.array_equal(self._rows, other._rows)
        if isinstance(other, SequenceABC) and not isinstance(other, (str, bytes)):
            return len(other) == len(self) and all(tuple(x) == y for x, y in zip(other, self))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self))

    def __repr__(self) -> str:
        return f"Trace({list(self)!r})"


@dataclass(frozen=True)
class MatchSet:
    matches: tuple[Match, ...]
    d: int
    d_star: int = field(default=0)

    def __len__(self) -> int:
        return len(self.matches)

    def __iter__(self):
        return iter(self.matches)

    def __contains__(self, item) -> bool:
        return tuple(item) in set(self.matches)


def is_subsequence(x: Sequence, y: Sequence) -> bool:
    """True iff ``x`` can be obtained from ``y`` by deleting tokens."""
    it = iter(y)
    return all(any(tok == other for other in it) for tok in x)


def is_substring(x: Sequence, y: Sequence) -> bool:
    """True iff ``x`` occurs contiguously in ``y``."""
    if isinstance(x, str) and isinstance(y, str) or isinstance(x, bytes) and isinstance(y, bytes):
        return x in y
    x, y = tuple(x), tuple(y)
    r = len(x)
    return any(y[o:o + r] == x for o in range(len(y) - r + 1))


def enumerate_matches(a: Sequence, b: Sequence, keep: Optional[Token] = None) -> MatchSet:
    """All matches of ``a`` and ``b`` in row-major order.

    With ``keep`` the set is restricted to matches on that token; ``d_star``
    counts matches on ``keep`` (equal to ``d`` when no token is given).
    """
    cols: dict = {}
    for j, tok in enumerate(b, 1):
        cols.setdefault(tok, []).append(j)
    out = []
    for i, tok in enumerate(a, 1):
        if keep is not None and tok != keep:
            continue
        out.extend(Match(i, j) for j in cols.get(tok, ()))
    return MatchSet(tuple(out), len(out), len(out))


def rebuild(template: Sequence, tokens) -> Sequence:
    """Pack ``tokens`` back into the container kind of ``template``."""
    if isinstance(template, str):
        return "".join(tokens)
    if isinstance(template, (bytes, bytearray)):
        return bytes(tokens)
    return tuple(tokens)


def take(template: Sequence, codes: np.ndarray, idx: np.ndarray) -> Sequence:
    """Tokens of ``template`` at the 0-based positions ``idx``, in its container kind.

    ``codes`` must be ``encode``'s output for ``template``.
    """
    if isinstance(template, str):
        return codes[idx].astype("<i4").tobytes().decode("utf-32-le")
    if isinstance(template, (bytes, bytearray)):
        return codes[idx].astype(np.uint8).tobytes()
    return tuple(template[k] for k in idx.tolist())


def encode(*seqs: Sequence) -> list[np.ndarray]:
    """Map the tokens of all ``seqs`` onto shared int32 codes."""
    kinds = {type(s) for s in seqs}
    if kinds == {str}:
        return [np.frombuffer(s.encode("utf-32-le"), dtype=np.int32) for s in seqs]
    if kinds <= {bytes, bytearray}:
        return [np.frombuffer(s, dtype=np.uint8).astype(np.int32) for s in seqs]
    codes: dict = {}
    return [np.fromiter((codes.setdefault(tok, len(codes)) for tok in s), dtype=np.int32, count=len(s))
            for s in seqs]
