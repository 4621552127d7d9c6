"""Compact appearances of the constraint inside a main sequence."""
from __future__ import annotations

from typing import Iterator, Optional, Sequence

import numpy as np

from . import _kernels
from .core import encode


class CompactAppearanceTable:
    """End positions of the compact appearances of ``P`` in a sequence.

    ``table[i]`` is the smallest ``q`` such that ``P`` is a subsequence of
    ``S[i..q]`` with ``S[i] == P[1]``, or ``None`` when ``S[i] != P[1]`` or no
    appearance starting at ``i`` completes.  Indexing is 1-based.
    """

    __slots__ = ("_ends", "size", "work", "count")

    def __init__(self, ends: np.ndarray, work: int, count: int):
        self._ends = ends
        self._ends.flags.writeable = False
        self.size = ends.size - 1
        self.work = work
        self.count = count

    def __getitem__(self, i: int) -> Optional[int]:
        if not 1 <= i <= self.size:
            raise IndexError(i)
        q = int(self._ends[i])
        return None if q == _kernels.ABSENT else q

    def __len__(self) -> int:
        return self.size

    def items(self) -> Iterator[tuple[int, int]]:
        """Defined ``(start, end)`` pairs in increasing start order."""
        for i in np.flatnonzero(self._ends != _kernels.ABSENT):
            yield int(i), int(self._ends[i])

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())

    @property
    def raw(self) -> np.ndarray:
        # absent entries are -1; index 0 unused
        return self._ends


def build_codes(s_codes: np.ndarray, p_codes: np.ndarray) -> CompactAppearanceTable:
    if p_codes.size == 0:
        raise ValueError("constraint must be non-empty")
    ends, work, count = _kernels.compact_ends(s_codes, p_codes)
    return CompactAppearanceTable(ends, int(work), int(count))


def build_table(s: Sequence, p: Sequence) -> CompactAppearanceTable:
    if len(p) == 0:
        raise ValueError("constraint must be non-empty")
    s_codes, p_codes = encode(s, p)
    return build_codes(s_codes, p_codes)


def count_compact_appearances(table: CompactAppearanceTable) -> int:
    return table.count
