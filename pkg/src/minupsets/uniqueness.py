"""Deciding whether a score sequence has exactly one minimum-upset tournament.

Uniqueness holds iff the normalized vector splits into zero runs and
symmetric segments ``(p, p-1, ..., 1, 0 * t, -1, ..., -p)`` with t >= 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .score_core import NormalizedVector, ScoreSequence, normalize, require_feasible
from .tournaments import FeasibleTuple, TournamentMatrix, apply_tuple


@dataclass(frozen=True)
class ZeroRun:
    length: int

    def expand(self) -> List[int]:
        return [0] * self.length

    def __str__(self) -> str:
        return f"ZeroRun({self.length})"


@dataclass(frozen=True)
class Segment:
    peak: int
    middle_zeros: int

    def expand(self) -> List[int]:
        p = self.peak
        return list(range(p, 0, -1)) + [0] * self.middle_zeros + list(range(-1, -p - 1, -1))

    def __len__(self) -> int:
        return 2 * self.peak + self.middle_zeros

    def __str__(self) -> str:
        return f"Seg({self.peak},{self.middle_zeros})"


Item = Union[ZeroRun, Segment]


@dataclass(frozen=True)
class Decomposition:
    items: Tuple[Item, ...]

    def expand(self) -> List[int]:
        out: List[int] = []
        for item in self.items:
            out.extend(item.expand())
        return out

    def __len__(self) -> int:
        return len(self.expand())

    def __str__(self) -> str:
        return "[" + ", ".join(str(it) for it in self.items) + "]"


@dataclass(frozen=True)
class NotDecomposable:
    """``position`` is the 1-based index of the first entry the scan rejects."""

    position: int

    def __bool__(self) -> bool:
        return False


class NotUniqueError(ValueError):
    def __init__(self, failure: NotDecomposable):
        super().__init__(f"minimum-upset tournament is not unique (scan fails at position {failure.position})")
        self.position = failure.position


def decompose(h: NormalizedVector | Sequence[int]) -> Decomposition | NotDecomposable:
    """Parse ``h`` into zero runs and symmetric segments, greedily.

    No backtracking is needed.  A positive entry that is not swallowed by a
    segment can only be the peak of a new one, and from the peak on every
    entry of that segment is forced except the length of the middle zero
    run.  Taking all the zeros there is the only option, since the entry
    after them must be -1 and a later segment cannot start with 0.  Zeros
    between segments always form a zero run.  So the greedy parse fails
    exactly when no decomposition exists.
    """
    v = list(h.entries if isinstance(h, NormalizedVector) else h)
    n = len(v)
    items: List[Item] = []
    k = 0
    while k < n:
        if v[k] == 0:
            start = k
            while k < n and v[k] == 0:
                k += 1
            items.append(ZeroRun(k - start))
            continue
        p = v[k]
        if p < 0:
            return NotDecomposable(k + 1)
        for expected in range(p, 0, -1):
            if k >= n or v[k] != expected:
                return NotDecomposable(k + 1)
            k += 1
        start = k
        while k < n and v[k] == 0:
            k += 1
        t = k - start
        if t == 0:
            return NotDecomposable(k + 1)
        for expected in range(-1, -p - 1, -1):
            if k >= n or v[k] != expected:
                return NotDecomposable(k + 1)
            k += 1
        items.append(Segment(p, t))
    return Decomposition(tuple(items))


def is_unique_min(seq: ScoreSequence | Sequence[int]) -> bool:
    seq = require_feasible(seq)
    return isinstance(decompose(normalize(seq)), Decomposition)


def forced_tuple(d: Decomposition) -> FeasibleTuple:
    """The sole feasible tuple of a decomposable vector.

    Within a segment the i-th positive index (value p-s+1 for s = i) beats
    the negative indices whose value is -s or below, i.e. ``(i_s, j_r)`` for
    s <= r.  Zero runs carry no upsets.
    """
    pairs = []
    offset = 0  # 0-based start of the current item
    for item in d.items:
        if isinstance(item, Segment):
            p, t = item.peak, item.middle_zeros
            pos = [offset + s + 1 for s in range(p)]
            neg = [offset + p + t + r + 1 for r in range(p)]
            pairs.extend((pos[s], neg[r]) for r in range(p) for s in range(r + 1))
            offset += len(item)
        else:
            offset += item.length
    return FeasibleTuple(pairs)


def unique_min_matrix(seq: ScoreSequence | Sequence[int]) -> TournamentMatrix:
    seq = require_feasible(seq)
    d = decompose(normalize(seq))
    if isinstance(d, NotDecomposable):
        raise NotUniqueError(d)
    return apply_tuple(len(seq), forced_tuple(d))
