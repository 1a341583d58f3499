"""Exact integer linear algebra over step-space and grid-space.

The face-centered cubic (FCC) grid is the set of integer points whose
coordinate sum is even.  Moves between neighboring grid points come in two
kinds: axis steps of length 2 (``a1``..``a6``) and face-diagonal steps with
two entries in {+1, -1} (``d1``..``d12``).  The 18 step directions are the
columns of a fixed 3x18 integer matrix; a *step vector* counts how many
times each direction is used, irrespective of order, and a *cycle* is a
nonzero step vector whose weighted column sum vanishes.

All arithmetic is exact (Python integers never overflow or round).  Step
indices are 0-based internally and 1-based in every serialized or printed
form, matching the column labels below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

# Type aliases used across the package.  A StepVector is an 18-tuple of
# non-negative counts; a GridVector is a point/displacement in grid space.
StepVector = tuple
GridVector = tuple

N_STEPS = 18
N_AXIS_STEPS = 6

# Column labels in serialization order: a1..a6 then d1..d12.
STEP_LABELS = (
    "a1", "a2", "a3", "a4", "a5", "a6",
    "d1", "d2", "d3", "d4", "d5", "d6",
    "d7", "d8", "d9", "d10", "d11", "d12",
)

# 0-based index of the opposite column (a1<->a4, d1<->d4, d2<->d3, ...).
OPPOSITE_COLUMN = (3, 4, 5, 0, 1, 2, 9, 8, 7, 6, 13, 12, 11, 10, 17, 16, 15, 14)


class NotInConeError(ValueError):
    """Raised when a vector is outside {x >= 0 : Ax = 0}."""


@dataclass(frozen=True)
class StepMatrix:
    """Integer matrix whose columns are the step directions of a grid.

    ``columns[j]`` is the j-th step as a tuple of row entries.  The matrix
    is immutable and safe to share between threads.
    """

    columns: tuple

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    @property
    def n_rows(self) -> int:
        return len(self.columns[0])

    @property
    def rows(self) -> tuple:
        return tuple(tuple(col[r] for col in self.columns)
                     for r in range(self.n_rows))


# Columns of the FCC step matrix, in label order a1..a6, d1..d12.
_FCC_COLUMNS = (
    (2, 0, 0), (0, 2, 0), (0, 0, 2), (-2, 0, 0), (0, -2, 0), (0, 0, -2),
    (1, 1, 0), (1, -1, 0), (-1, 1, 0), (-1, -1, 0),
    (1, 0, 1), (1, 0, -1), (-1, 0, 1), (-1, 0, -1),
    (0, 1, 1), (0, 1, -1), (0, -1, 1), (0, -1, -1),
)

_FCC_MATRIX = StepMatrix(columns=_FCC_COLUMNS)


def fcc_matrix() -> StepMatrix:
    """Return the 3x18 step matrix of the FCC grid."""
    return _FCC_MATRIX


def as_step_vector(values: Iterable, n_cols: int = N_STEPS) -> StepVector:
    """Validate and normalize a step vector: ``n_cols`` non-negative ints."""
    x = tuple(int(v) for v in values)
    if len(x) != n_cols:
        raise ValueError(f"expected {n_cols} components, got {len(x)}")
    if any(v < 0 for v in x):
        raise NotInConeError(f"negative component in {x}")
    return x


def unit_vector(j: int, n_cols: int = N_STEPS) -> StepVector:
    """Step vector using column ``j`` (0-based) exactly once."""
    return tuple(1 if i == j else 0 for i in range(n_cols))


def zero_vector(n_cols: int = N_STEPS) -> StepVector:
    return (0,) * n_cols


def apply(matrix: StepMatrix, x: Sequence) -> GridVector:
    """Exact weighted column sum: the grid displacement of step vector x."""
    if len(x) != matrix.n_cols:
        raise ValueError(f"step vector length {len(x)} != {matrix.n_cols} columns")
    out = [0] * matrix.n_rows
    for count, col in zip(x, matrix.columns):
        if count:
            for r in range(matrix.n_rows):
                out[r] += count * col[r]
    return tuple(out)


def is_cycle(matrix: StepMatrix, x: Sequence) -> bool:
    """True iff x is nonzero and its steps sum to the zero displacement."""
    return any(x) and not any(apply(matrix, x))


def dominates(x: Sequence, y: Sequence) -> bool:
    """Componentwise x <= y with x != y."""
    return all(a <= b for a, b in zip(x, y)) and tuple(x) != tuple(y)


def support(x: Sequence) -> tuple:
    """Ascending 0-based indices of the positive components."""
    return tuple(j for j, v in enumerate(x) if v > 0)


def support_size(x: Sequence) -> int:
    return sum(1 for v in x if v > 0)


def opposite_vector(x: Sequence) -> StepVector:
    """Swap every step count for its opposite column (grid-space negation)."""
    out = [0] * len(x)
    for j, v in enumerate(x):
        out[OPPOSITE_COLUMN[j]] = v
    return tuple(out)


def format_step_vector(x: Sequence) -> str:
    """Human-readable sum such as ``a1 + 2 d3 + d11 + d12``."""
    parts = []
    for j, v in enumerate(x):
        if v == 1:
            parts.append(STEP_LABELS[j])
        elif v > 1:
            parts.append(f"{v} {STEP_LABELS[j]}")
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# JSON wire formats: positional arrays, index order a1..a6, d1..d12.
# ---------------------------------------------------------------------------

def step_vector_to_json(x: Sequence) -> list:
    return list(as_step_vector(x, len(tuple(x))))


def step_vector_from_json(data) -> StepVector:
    if not isinstance(data, list) or len(data) != N_STEPS:
        raise ValueError("step vector JSON must be an array of 18 integers")
    return as_step_vector(data)


def grid_vector_to_json(v: Sequence) -> list:
    return [int(c) for c in v]


def grid_vector_from_json(data) -> GridVector:
    if not isinstance(data, list) or len(data) != 3:
        raise ValueError("grid vector JSON must be an array of 3 integers")
    return tuple(int(c) for c in data)
