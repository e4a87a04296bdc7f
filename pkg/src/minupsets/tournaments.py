"""Tournament matrices and the minimum-upset matrices of a score sequence.

A minimum-upset tournament for ``R`` is the transitive tournament with the
arcs of a feasible tuple reversed, and every feasible tuple gives a distinct
one (Hacioglu et al.).  Enumerating the tuples therefore enumerates U_min(R).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from .score_core import ScoreSequence, normalize, require_feasible

Pair = Tuple[int, int]


@dataclass(frozen=True)
class TournamentMatrix:
    """0/1 matrix with ``rows[i][j] == 1`` meaning player i+1 beats player j+1."""

    rows: Tuple[Tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        object.__setattr__(self, "rows", tuple(tuple(int(a) for a in row) for row in rows))

    @property
    def order(self) -> int:
        return len(self.rows)

    def is_tournament(self) -> bool:
        n = self.order
        if any(len(row) != n for row in self.rows):
            return False
        for i in range(n):
            if self.rows[i][i] != 0:
                return False
            for j in range(i + 1, n):
                if self.rows[i][j] + self.rows[j][i] != 1:
                    return False
        return True

    def to_text(self) -> str:
        return "\n".join("".join(str(a) for a in row) for row in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "TournamentMatrix":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        n = len(lines)
        for ln in lines:
            if len(ln) != n or set(ln) - {"0", "1"}:
                raise ValueError(f"bad matrix row {ln!r}: expected {n} characters from 0/1")
        return cls([[int(c) for c in ln] for ln in lines])


@dataclass(frozen=True)
class FeasibleTuple:
    """Upset locations as 1-based pairs (i, j), i < j, kept in lexicographic order."""

    pairs: Tuple[Pair, ...]

    def __init__(self, pairs: Iterable[Sequence[int]]):
        object.__setattr__(self, "pairs", tuple(sorted((int(i), int(j)) for i, j in pairs)))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def as_set(self) -> frozenset:
        return frozenset(self.pairs)


def transitive_base(n: int) -> TournamentMatrix:
    if n < 1:
        raise ValueError("order must be positive")
    return TournamentMatrix([[1 if i > j else 0 for j in range(n)] for i in range(n)])


def apply_tuple(n: int, t: FeasibleTuple | Iterable[Pair]) -> TournamentMatrix:
    """Reverse the arcs at the pairs of ``t`` in the transitive tournament of order ``n``."""
    pairs = t.pairs if isinstance(t, FeasibleTuple) else tuple(t)
    if len(set(pairs)) != len(pairs):
        raise ValueError(f"duplicate pair in {pairs}")
    cells = [[1 if i > j else 0 for j in range(n)] for i in range(n)]
    for i, j in pairs:
        if not 1 <= i < j <= n:
            raise ValueError(f"pair ({i},{j}) must satisfy 1 <= i < j <= {n}")
        cells[i - 1][j - 1] = 1
        cells[j - 1][i - 1] = 0
    return TournamentMatrix(cells)


def count_upsets(m: TournamentMatrix) -> int:
    n = m.order
    return sum(m.rows[i][j] for i in range(n) for j in range(i + 1, n))


def row_sums(m: TournamentMatrix) -> List[int]:
    return [sum(row) for row in m.rows]


def check_tuple(h: Sequence[int], t: FeasibleTuple | Iterable[Pair]) -> List[str]:
    """List every way ``t`` breaks the feasible-tuple multiplicity rules for ``h``.

    An empty list means the tuple is feasible.
    """
    pairs = list(t.pairs if isinstance(t, FeasibleTuple) else t)
    n = len(h)
    problems = []
    if len(set(pairs)) != len(pairs):
        problems.append("duplicate pairs")
    first = [0] * (n + 1)
    second = [0] * (n + 1)
    for i, j in pairs:
        if not 1 <= i < j <= n:
            problems.append(f"pair ({i},{j}) out of order or range")
            continue
        first[i] += 1
        second[j] += 1
    for k in range(1, n + 1):
        want_first = max(h[k - 1], 0)
        want_second = max(-h[k - 1], 0)
        if first[k] != want_first:
            problems.append(f"index {k} appears {first[k]} times as first coordinate, expected {want_first}")
        if second[k] != want_second:
            problems.append(f"index {k} appears {second[k]} times as second coordinate, expected {want_second}")
    ell = sum(x for x in h if x > 0)
    if len(pairs) != ell:
        problems.append(f"{len(pairs)} pairs, expected {ell}")
    return problems


def _completable(
    capacity: Sequence[int], demands: Sequence[Tuple[int, int]], first: Sequence[int] = (), first_need: int = 0
) -> bool:
    """Whether the open demands can still be met from the remaining capacity.

    ``first``/``first_need`` describe a demand partly served, restricted to
    the candidate indices in ``first``.  Greedy: demands in increasing order,
    each drawing from its available indices with the most capacity left.
    Every index available to one demand is available to all later ones, so
    preferring the fullest indices never hurts (exchange argument) and the
    greedy is exact.
    """
    cap = list(capacity)

    def draw(avail, need):
        avail = [i for i in avail if cap[i] > 0]
        if len(avail) < need:
            return False
        avail.sort(key=lambda i: -cap[i])
        for i in avail[:need]:
            cap[i] -= 1
        return True

    if first_need and not draw(first, first_need):
        return False
    return all(draw(range(j), need) for j, need in demands)


def _iter_tuples(h: Sequence[int], prune: bool = True) -> Iterator[FeasibleTuple]:
    # Negative indices are served in increasing order.  Each picks -h_j distinct
    # earlier positive indices that still have capacity, so pair distinctness and
    # both multiplicity constraints hold by construction.  With pruning every
    # search node extends to a tuple, so the first k tuples come out fast.
    n = len(h)
    capacity = [max(x, 0) for x in h]
    demands = [(j, -h[j]) for j in range(n) if h[j] < 0]
    chosen: List[Pair] = []

    def choose(candidates: List[int], start: int, need: int, j: int, rest: int) -> Iterator[FeasibleTuple]:
        if need == 0:
            yield from serve(rest)
            return
        for pos in range(start, len(candidates) - need + 1):
            i = candidates[pos]
            capacity[i] -= 1
            if not prune or _completable(capacity, demands[rest:], candidates[pos + 1:], need - 1):
                chosen.append((i + 1, j + 1))
                yield from choose(candidates, pos + 1, need - 1, j, rest)
                chosen.pop()
            capacity[i] += 1

    def serve(k: int) -> Iterator[FeasibleTuple]:
        if k == len(demands):
            yield FeasibleTuple(chosen)
            return
        j, need = demands[k]
        candidates = [i for i in range(j) if capacity[i] > 0]
        if len(candidates) >= need:
            yield from choose(candidates, 0, need, j, k + 1)

    if not prune or _completable(capacity, demands):
        yield from serve(0)


def _tuples_from_normalized(h: Sequence[int], prune: bool = True) -> List[FeasibleTuple]:
    return sorted(_iter_tuples(h, prune), key=lambda t: t.pairs)


def iter_feasible_tuples(seq: ScoreSequence | Sequence[int]) -> Iterator[FeasibleTuple]:
    """Lazily yield the feasible tuples of ``seq`` in search order (not sorted).

    Useful when P_R is too large to materialize; it can grow exponentially.
    """
    seq = require_feasible(seq)
    return _iter_tuples(normalize(seq).entries)


def enumerate_feasible_tuples(seq: ScoreSequence | Sequence[int]) -> List[FeasibleTuple]:
    """All feasible tuples of ``seq`` (the set P_R), canonically sorted."""
    seq = require_feasible(seq)
    return _tuples_from_normalized(normalize(seq).entries)


def enumerate_min_upset_matrices(seq: ScoreSequence | Sequence[int]) -> List[TournamentMatrix]:
    seq = require_feasible(seq)
    n = len(seq)
    return [apply_tuple(n, t) for t in enumerate_feasible_tuples(seq)]
