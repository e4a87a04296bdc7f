"""Minimum-upset tournaments: feasibility, construction, uniqueness and counting."""
from .counting import (
    count_unique_closed,
    count_unique_linear,
    count_unique_recurrence,
    enumerate_unique_normvecs,
)
from .score_core import (
    FeasibilityReport,
    InfeasibleError,
    NormalizedVector,
    NotMonotoneError,
    ScoreSequence,
    UpsetMultisets,
    Violation,
    denormalize,
    min_upsets,
    normalize,
    upset_multisets,
    validate_feasible,
)
from .tournaments import (
    FeasibleTuple,
    TournamentMatrix,
    apply_tuple,
    count_upsets,
    enumerate_feasible_tuples,
    enumerate_min_upset_matrices,
    iter_feasible_tuples,
    row_sums,
    transitive_base,
)
from .uniqueness import (
    Decomposition,
    NotDecomposable,
    NotUniqueError,
    Segment,
    ZeroRun,
    decompose,
    forced_tuple,
    is_unique_min,
    unique_min_matrix,
)

__version__ = "0.1.0"
