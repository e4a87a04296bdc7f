"""Score sequences: feasibility (Landau), normalization and the minimum upset count."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterable, Optional, Sequence, Tuple


class Violation(str, Enum):
    EMPTY = "empty"
    NOT_MONOTONE = "not_monotone"
    SUM = "sum"
    LANDAU = "landau"


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of :func:`validate_feasible`.

    ``index`` is the 1-based witness position of the first failing condition
    (the position k of a failing prefix for Landau, n for a bad total).
    """

    accepted: bool
    violation: Optional[Violation] = None
    index: Optional[int] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.accepted


class InfeasibleError(ValueError):
    """Raised by operations that require a feasible score sequence."""

    def __init__(self, report: FeasibilityReport):
        super().__init__(f"infeasible score sequence: {report.detail}")
        self.report = report


class NotMonotoneError(ValueError):
    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class ScoreSequence:
    scores: Tuple[int, ...]

    def __init__(self, scores: Iterable[int]):
        object.__setattr__(self, "scores", tuple(int(s) for s in scores))

    def __len__(self) -> int:
        return len(self.scores)

    def __iter__(self):
        return iter(self.scores)

    def __getitem__(self, i):
        return self.scores[i]


@dataclass(frozen=True)
class NormalizedVector:
    entries: Tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        object.__setattr__(self, "entries", tuple(int(h) for h in entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class UpsetMultisets:
    """Indices with positive/negative normalized score, with multiplicities (1-based)."""

    x_indices: Tuple[Tuple[int, int], ...]
    y_indices: Tuple[Tuple[int, int], ...]
    ell: int


def _as_scores(seq) -> Tuple[int, ...]:
    if isinstance(seq, ScoreSequence):
        return seq.scores
    return tuple(int(s) for s in seq)


def validate_feasible(seq: ScoreSequence | Sequence[int]) -> FeasibilityReport:
    """Check nonemptiness, monotonicity, the total and the Landau prefix inequalities, in that order."""
    r = _as_scores(seq)
    n = len(r)
    if n == 0:
        return FeasibilityReport(False, Violation.EMPTY, None, "empty sequence")
    for i in range(1, n):
        if r[i] < r[i - 1]:
            return FeasibilityReport(
                False, Violation.NOT_MONOTONE, i + 1,
                f"score {r[i]} at position {i + 1} is below {r[i - 1]} at position {i}",
            )
    total = sum(r)
    if total != comb(n, 2):
        return FeasibilityReport(
            False, Violation.SUM, n, f"sum {total} != C({n},2) = {comb(n, 2)}"
        )
    prefix = 0
    for k in range(1, n):
        prefix += r[k - 1]
        if prefix < comb(k, 2):
            return FeasibilityReport(
                False, Violation.LANDAU, k,
                f"prefix sum {prefix} of first {k} scores < C({k},2) = {comb(k, 2)}",
            )
    return FeasibilityReport(True, detail="feasible")


def require_feasible(seq) -> ScoreSequence:
    report = validate_feasible(seq)
    if not report:
        raise InfeasibleError(report)
    return seq if isinstance(seq, ScoreSequence) else ScoreSequence(seq)


def normalize(seq: ScoreSequence | Sequence[int]) -> NormalizedVector:
    # no feasibility requirement: generators normalize raw candidates
    return NormalizedVector(r - i for i, r in enumerate(_as_scores(seq)))


def denormalize(h: NormalizedVector | Sequence[int]) -> ScoreSequence:
    entries = h.entries if isinstance(h, NormalizedVector) else tuple(h)
    scores = [x + i for i, x in enumerate(entries)]
    for i in range(1, len(scores)):
        if scores[i] < scores[i - 1]:
            raise NotMonotoneError(
                i + 1, f"denormalized scores {tuple(scores)} decrease at position {i + 1}"
            )
    return ScoreSequence(scores)


def min_upsets(seq: ScoreSequence | Sequence[int]) -> int:
    """Minimum number of upsets over all tournaments with score sequence ``seq``.

    The obvious lower bound, the total positive part of the normalized
    vector, is attained (Ryser).
    """
    seq = require_feasible(seq)
    return sum(h for h in normalize(seq) if h > 0)


def upset_multisets(seq: ScoreSequence | Sequence[int]) -> UpsetMultisets:
    seq = require_feasible(seq)
    h = normalize(seq)
    xs = tuple((i, v) for i, v in enumerate(h, 1) if v > 0)
    ys = tuple((j, -v) for j, v in enumerate(h, 1) if v < 0)
    return UpsetMultisets(xs, ys, sum(m for _, m in xs))
