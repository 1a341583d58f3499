"""Minimal generating sets for kernel cones {x in Z+^n : Ax = 0}.

Two independent routes to the same answer:

* :func:`complete` grows candidate vectors breadth-first from the unit
  vectors, extending x by a unit step e_j only while the inner product
  <Ax, col_j> is negative (each extension strictly reduces |Ax|^2, so every
  minimal solution is reached), and prunes anything dominated by a solution
  already found.  For a kernel cone the surviving antichain is the unique
  minimal generating set.

* :func:`enumerate_bounded` exhaustively lists every solution inside a box
  0 != x <= bound by depth-first search with partial-sum pruning, and
  :func:`minimal_filter` reduces any solution list to its componentwise
  minimal antichain.  With a bound known to contain the whole generating
  set this is a brute-force oracle for :func:`complete`.

:func:`decompose` writes any cone point as a non-negative integer
combination of generators; failure to do so would disprove completeness of
the generating set and raises loudly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Iterable, Sequence

from .core import (
    NotInConeError,
    StepMatrix,
    StepVector,
    apply,
    as_step_vector,
    dominates,
    fcc_matrix,
    is_cycle,
    unit_vector,
)


class FrontierCapExceededError(RuntimeError):
    """Completion frontier outgrew its cap: input too large or mis-specified."""


class BasisIncompleteError(RuntimeError):
    """A cone point admitted no decomposition: the generating set is not complete."""


@dataclass(frozen=True)
class HilbertBasis:
    """Canonically ordered antichain of cycles generating a kernel cone.

    ``elements`` is sorted lexicographically and duplicate-free; ``source``
    records how it was obtained ("completion", "oracle", or "file").
    """

    matrix: StepMatrix
    elements: tuple
    source: str = "completion"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return tuple(x) in set(self.elements)

    def index(self, x) -> int:
        return self.elements.index(tuple(x))

    def to_json(self) -> str:
        payload = {
            "matrix": [list(row) for row in self.matrix.rows],
            "elements": [list(e) for e in self.elements],
        }
        return json.dumps(payload, separators=(",", ":"), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "HilbertBasis":
        payload = json.loads(text)
        rows = payload["matrix"]
        n_cols = len(rows[0])
        columns = tuple(tuple(row[j] for row in rows) for j in range(n_cols))
        matrix = StepMatrix(columns=columns)
        elements = tuple(as_step_vector(e, n_cols) for e in payload["elements"])
        basis = cls(matrix=matrix, elements=elements, source="file")
        basis.validate()
        return basis

    def validate(self) -> None:
        """Check soundness, the antichain property, and canonical order."""
        seen = set()
        for e in self.elements:
            if not is_cycle(self.matrix, e):
                raise ValueError(f"element {e} is not a cycle")
            if e in seen:
                raise ValueError(f"duplicate element {e}")
            seen.add(e)
        if list(self.elements) != sorted(self.elements):
            raise ValueError("elements are not in canonical order")
        for x in self.elements:
            for y in self.elements:
                if x is not y and dominates(x, y):
                    raise ValueError(f"{x} dominates {y}: not an antichain")


def complete(matrix: StepMatrix, frontier_cap: int = 500_000) -> HilbertBasis:
    """Compute the unique minimal generating set of {x >= 0 : Ax = 0}.

    Breadth-first completion from the unit vectors.  A frontier vector x
    with residual Ax != 0 is extended by e_j (j ascending) exactly when
    <Ax, col_j> < 0; residual-free vectors are recorded as generators.
    Frontier candidates equal to or above a recorded generator are pruned.

    Raises :class:`FrontierCapExceededError` if the frontier exceeds
    ``frontier_cap``, which signals an input this procedure cannot finish.
    """
    n = matrix.n_cols
    minimal = []
    frontier = {}
    for j in range(n):
        x = unit_vector(j, n)
        frontier[x] = apply(matrix, x)

    while frontier:
        if len(frontier) > frontier_cap:
            raise FrontierCapExceededError(
                f"frontier size {len(frontier)} exceeds cap {frontier_cap}")
        next_frontier = {}
        for x, residual in frontier.items():
            if not any(residual):
                if not any(dominates(m, x) for m in minimal):
                    minimal.append(x)
                continue
            for j in range(n):
                col = matrix.columns[j]
                if sum(r * c for r, c in zip(residual, col)) >= 0:
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1:]
                if y in next_frontier:
                    continue
                if any(dominates(m, y) or m == y for m in minimal):
                    continue
                next_frontier[y] = tuple(r + c for r, c in zip(residual, col))
        frontier = next_frontier

    return HilbertBasis(matrix=matrix, elements=tuple(sorted(minimal)),
                        source="completion")


def _enumerate_chunk(matrix: StepMatrix, bound: Sequence, prefix: Sequence) -> list:
    """All solutions of Ax = 0 with x <= bound extending the fixed prefix.

    Depth-first over the remaining coordinates in index order.  A branch
    dies as soon as some row sum can no longer be pulled back to zero by
    the unassigned columns (per-row suffix ranges are precomputed).
    """
    n = matrix.n_cols
    m = matrix.n_rows
    cols = matrix.columns
    # suffix_lo[d][r] / suffix_hi[d][r]: extreme extra contribution to row r
    # from columns d.. at their box bounds.
    suffix_lo = [[0] * m for _ in range(n + 1)]
    suffix_hi = [[0] * m for _ in range(n + 1)]
    for d in range(n - 1, -1, -1):
        for r in range(m):
            c = cols[d][r] * bound[d]
            suffix_lo[d][r] = suffix_lo[d + 1][r] + min(c, 0)
            suffix_hi[d][r] = suffix_hi[d + 1][r] + max(c, 0)

    start = len(prefix)
    sums = [0] * m
    for j, v in enumerate(prefix):
        for r in range(m):
            sums[r] += v * cols[j][r]
    for r in range(m):
        if sums[r] + suffix_lo[start][r] > 0 or sums[r] + suffix_hi[start][r] < 0:
            return []

    out = []
    stack = list(prefix)

    def descend(depth: int) -> None:
        if depth == n:
            if any(stack):
                out.append(tuple(stack))
            return
        col = cols[depth]
        lo = suffix_lo[depth + 1]
        hi = suffix_hi[depth + 1]
        for v in range(bound[depth] + 1):
            ok = True
            for r in range(m):
                s = sums[r] + v * col[r]
                if s + lo[r] > 0 or s + hi[r] < 0:
                    ok = False
                    break
            if not ok:
                continue
            for r in range(m):
                sums[r] += v * col[r]
            stack.append(v)
            descend(depth + 1)
            stack.pop()
            for r in range(m):
                sums[r] -= v * col[r]

    descend(start)
    return out


def _enumerate_worker(args):
    matrix_cols, bound, prefix = args
    return _enumerate_chunk(StepMatrix(columns=matrix_cols), bound, prefix)


def enumerate_bounded(matrix: StepMatrix, bound: Sequence, jobs: int = 1) -> list:
    """All x with 0 != x <= bound and Ax = 0, in canonical (lex) order.

    ``jobs`` > 1 partitions the search on the first two coordinates across
    worker processes; results are merged and re-sorted, so the output is
    identical to a single-threaded run.
    """
    bound = tuple(int(b) for b in bound)
    if len(bound) != matrix.n_cols:
        raise ValueError("bound length does not match column count")
    if any(b < 0 for b in bound):
        raise ValueError("bound must be non-negative")

    if jobs <= 1 or matrix.n_cols < 2:
        return sorted(_enumerate_chunk(matrix, bound, ()))

    prefixes = [(v0, v1)
                for v0 in range(bound[0] + 1)
                for v1 in range(bound[1] + 1)]
    tasks = [(matrix.columns, bound, p) for p in prefixes]
    with get_context("spawn").Pool(processes=jobs) as pool:
        chunks = pool.map(_enumerate_worker, tasks)
    merged = [x for chunk in chunks for x in chunk]
    return sorted(merged)


def minimal_filter(solutions: Iterable) -> list:
    """Componentwise-minimal subset of a solution list, canonically ordered.

    Any dominated vector is dominated by a minimal one, so it suffices to
    compare against the minimal set built in order of increasing total.
    """
    unique = sorted(set(tuple(s) for s in solutions), key=lambda s: (sum(s), s))
    minimal = []
    for x in unique:
        if not any(dominates(m, x) for m in minimal):
            minimal.append(x)
    return sorted(minimal)


@dataclass(frozen=True)
class Decomposition:
    """Non-negative integer multiplicities over generating elements."""

    coefficients: dict = field(default_factory=dict)

    def total(self, n_cols: int) -> StepVector:
        out = [0] * n_cols
        for element, k in self.coefficients.items():
            for j, v in enumerate(element):
                out[j] += k * v
        return tuple(out)

    def to_json(self) -> str:
        items = sorted(self.coefficients.items())
        return json.dumps(
            {"coefficients": [{"element": list(e), "count": k} for e, k in items]},
            separators=(",", ":"))


def decompose(x: Sequence, basis: HilbertBasis) -> Decomposition:
    """Write x as a non-negative integer sum of basis elements.

    Depth-first over the basis in canonical order, trying the largest
    multiplicity first.  Any maximal-subtraction path reaches zero when the
    basis is complete, so backtracking exists only to certify failure:
    exhausting it raises :class:`BasisIncompleteError`.
    """
    matrix = basis.matrix
    x = as_step_vector(x, matrix.n_cols)
    if any(apply(matrix, x)):
        raise NotInConeError(f"{x} is not in the cone: Ax != 0")
    elements = basis.elements

    coeffs = {}

    def search(residual: StepVector, start: int) -> bool:
        if not any(residual):
            return True
        for i in range(start, len(elements)):
            h = elements[i]
            k_max = min(residual[j] // h[j] for j in range(len(h)) if h[j])
            for k in range(k_max, 0, -1):
                nxt = tuple(r - k * v for r, v in zip(residual, h))
                if search(nxt, i + 1):
                    coeffs[h] = k
                    return True
        return False

    if not search(x, 0):
        raise BasisIncompleteError(
            f"no decomposition of {x}: generating set is incomplete")
    return Decomposition(coefficients=dict(sorted(coeffs.items())))


def fcc_basis(jobs: int = 1) -> HilbertBasis:
    """Convenience wrapper: the minimal generating set of the FCC step cone."""
    del jobs  # completion is specified single-threaded
    return complete(fcc_matrix())
