"""Classification of FCC basis cycles into the 11 structural types.

A cycle's *signature* is the pair of sorted multisets of its positive axis
counts and positive diagonal counts.  The 11 signatures below are pairwise
distinct, so they classify basis elements without any geometric case
analysis.  The census (count per type) is the headline combinatorial fact
of the toolkit: {3, 6, 12, 8, 24, 6, 24, 12, 8, 24, 24}, summing to 151.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Sequence

from .core import N_AXIS_STEPS, StepVector, fcc_matrix


class UnclassifiableCycleError(ValueError):
    """Signature matches no known type: the basis upstream is broken."""


@dataclass(frozen=True)
class Signature:
    """Sorted multisets of positive axis / diagonal step counts."""

    a_multiplicities: tuple
    d_multiplicities: tuple


# Type id -> signature, in census-table order.
TYPE_SIGNATURES = {
    1: Signature((1, 1), ()),
    2: Signature((), (1, 1)),
    3: Signature((1,), (1, 1)),
    4: Signature((), (1, 1, 1)),
    5: Signature((1,), (1, 1, 1)),
    6: Signature((), (1, 1, 1, 1)),
    7: Signature((1, 1), (1, 1, 1)),
    8: Signature((1, 1), (2,)),
    9: Signature((1, 1, 1), (1, 1, 1)),
    10: Signature((1,), (1, 1, 2)),
    11: Signature((1, 1), (2, 2)),
}

# Expected number of basis elements per type.
TYPE_COUNTS = {1: 3, 2: 6, 3: 12, 4: 8, 5: 24, 6: 6, 7: 24, 8: 12, 9: 8,
               10: 24, 11: 24}

_SIGNATURE_TO_TYPE = {sig: t for t, sig in TYPE_SIGNATURES.items()}


def signature(x: Sequence) -> Signature:
    """Extract the two sorted multisets of positive components."""
    a = tuple(sorted(v for v in x[:N_AXIS_STEPS] if v > 0))
    d = tuple(sorted(v for v in x[N_AXIS_STEPS:] if v > 0))
    return Signature(a, d)


def classify(x: Sequence) -> int:
    """Type id (1..11) of a basis element."""
    sig = signature(x)
    try:
        return _SIGNATURE_TO_TYPE[sig]
    except KeyError:
        raise UnclassifiableCycleError(
            f"signature a={sig.a_multiplicities} d={sig.d_multiplicities} "
            f"matches no type") from None


def census(basis: Iterable) -> dict:
    """Count of elements per type id; every type key 1..11 is present."""
    counts = {t: 0 for t in TYPE_SIGNATURES}
    for x in basis:
        counts[classify(x)] += 1
    return counts


def census_to_tsv(counts: dict) -> str:
    lines = [f"{t}\t{counts[t]}" for t in sorted(counts)]
    lines.append(f"total\t{sum(counts.values())}")
    return "\n".join(lines) + "\n"


def census_to_json(counts: dict) -> str:
    payload = {str(t): counts[t] for t in sorted(counts)}
    payload["total"] = sum(counts.values())
    return json.dumps(payload, separators=(",", ":"))


def elements_of_type(basis: Iterable, type_id: int) -> list:
    """Canonically ordered basis elements of one type."""
    return sorted(x for x in basis if classify(x) == type_id)


# ---------------------------------------------------------------------------
# Symmetries of the step set (optional cross-check, not used to classify).
# ---------------------------------------------------------------------------

def signed_permutation_column_maps() -> list:
    """Column permutations induced by the 48 signed coordinate permutations.

    Every signed permutation of the three grid axes maps the step set onto
    itself, hence permutes the 18 columns; the returned list contains each
    induced permutation as a tuple p with p[j] = image of column j.
    """
    matrix = fcc_matrix()
    col_index = {col: j for j, col in enumerate(matrix.columns)}
    maps = []
    for perm in permutations(range(3)):
        for signs in product((1, -1), repeat=3):
            p = []
            for col in matrix.columns:
                image = tuple(signs[r] * col[perm[r]] for r in range(3))
                p.append(col_index[image])
            maps.append(tuple(p))
    return maps


def permute_step_vector(x: Sequence, column_map: Sequence) -> StepVector:
    """Push a step vector through a column permutation."""
    out = [0] * len(x)
    for j, v in enumerate(x):
        out[column_map[j]] = v
    return tuple(out)
