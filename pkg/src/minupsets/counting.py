"""Number of length-n score sequences with a unique minimum-upset tournament.

Three independent routes: the double-sum recurrence, the order-4 linear
recurrence it collapses to, and the closed form over the roots of
x^4 - 2x^3 + x - 1.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .score_core import NormalizedVector

SEEDS = (1, 1, 2, 4)  # a_1..a_4


def _recurrence_table(n: int) -> List[int]:
    # a_n = a_{n-1} + sum_{p=1}^{floor((n-1)/2)} sum_{i=1}^{n-2p} a_{n-2p-i}; a_0 = 1.
    # prefix[m] = a_0 + ... + a_{m-1} turns the inner sum into one subtraction.
    a = [1]
    prefix = [0, 1]
    for m in range(1, n + 1):
        s = 0
        for p in range(1, (m - 1) // 2 + 1):
            s += prefix[m - 2 * p]  # a_0 + ... + a_{m-2p-1}
        a.append(a[m - 1] + s)
        prefix.append(prefix[-1] + a[m])
    return a


def count_unique_recurrence(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _recurrence_table(n)[n]


def count_table(n_max: int) -> Dict[int, int]:
    return dict(enumerate(_recurrence_table(n_max)))


def count_unique_linear(n: int) -> int:
    """a_n = 2 a_{n-1} - a_{n-3} + a_{n-4} from a_1..a_4 (a_0 = 1 by convention)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    if n <= 4:
        return SEEDS[n - 1]
    w = list(SEEDS)
    for _ in range(5, n + 1):
        w = [w[1], w[2], w[3], 2 * w[3] - w[1] + w[0]]
    return w[3]


_S5 = math.sqrt(5.0)
_OUTER = math.sqrt(2 * _S5 + 3)
_INNER = math.sqrt(2 * _S5 - 3)
ROOTS = (
    complex((1 - _OUTER) / 2),
    complex((1 + _OUTER) / 2),
    complex(1, -_INNER) / 2,
    complex(1, _INNER) / 2,
)
COEFFICIENTS = (
    complex((_S5 + 1) / 4 * (1 / _S5 - 1 / _OUTER)),
    complex((_S5 + 1) / 4 * (1 / _S5 + 1 / _OUTER)),
    (_S5 - 1) / 4 * complex(1 / _S5, -1 / _INNER),
    (_S5 - 1) / 4 * complex(1 / _S5, 1 / _INNER),
)


@dataclass(frozen=True)
class ClosedFormValue:
    value: int
    residual: float
    imaginary: float
    raw: complex
    flagged: bool = False

    def __iter__(self):
        return iter((self.value, self.residual))


def closed_form_raw(n: int) -> complex:
    return sum(c * lam ** (n - 1) for c, lam in zip(COEFFICIENTS, ROOTS))


def count_unique_closed(n: int, tolerance: Optional[float] = None) -> ClosedFormValue:
    """Evaluate the closed form at ``n`` in complex floating point.

    ``residual`` is the distance of the complex value from the nearest
    integer (so leftover imaginary part counts against it).  When
    ``tolerance`` is given the result is flagged if the residual exceeds it.
    """
    if n < 1:
        raise ValueError("closed form is defined for n >= 1")
    z = closed_form_raw(n)
    nearest = round(z.real)
    residual = abs(z - nearest)
    flagged = tolerance is not None and residual > tolerance
    return ClosedFormValue(int(nearest), residual, abs(z.imag), z, flagged)


def characteristic_poly(x: complex) -> complex:
    return x ** 4 - 2 * x ** 3 + x - 1


def enumerate_unique_normvecs(n: int) -> List[NormalizedVector]:
    """All decomposable normalized vectors of length ``n``, lexicographically sorted.

    Each is a composition of single zeros and segments of length 2p + t
    (p >= 1, t >= 1).  A zero run of length L is L single zeros, which keeps
    the composition unique and its count equal to a_n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    memo: Dict[int, List[Tuple[int, ...]]] = {0: [()]}

    def build(m: int) -> List[Tuple[int, ...]]:
        if m in memo:
            return memo[m]
        out: List[Tuple[int, ...]] = [(0,) + rest for rest in build(m - 1)]
        for p in range(1, (m - 1) // 2 + 1):
            for t in range(1, m - 2 * p + 1):
                block = tuple(range(p, 0, -1)) + (0,) * t + tuple(range(-1, -p - 1, -1))
                out.extend(block + rest for rest in build(m - 2 * p - t))
        memo[m] = out
        return out

    return [NormalizedVector(v) for v in sorted(build(n))]
