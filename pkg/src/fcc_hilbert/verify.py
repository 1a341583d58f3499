"""Executable certificates for the FCC basis census.

Three layers of machinery:

* **Structural predicates** every basis element must satisfy: axis counts
  at most 1 (:func:`check_component_bound`), no axis step sharing a signed
  row with a used diagonal (:func:`check_sign_compatibility`), per-row
  same-sign diagonal load at most 2 (:func:`check_sign_sums`), and no
  0/1 element's support contained in another element's support
  (:func:`check_support_domination`).

* **The exclusion system**: an integer constraint system over the 18 step
  variables and 12 binary support indicators whose *infeasibility* proves
  the census complete — any cycle surviving the structural bounds must use
  a support that contains the support of a known basis element.  The full
  combined system is built by :func:`build_exclusion_system`; the original
  per-type subsystems (pinning one support and capping its doubled entry)
  are built by :func:`build_type8_subsystem` and friends.  All are decided
  exactly by :func:`feasibility_search`, a depth-first search with
  interval propagation — no LP solver, no floating point.

* **Uniqueness and minimality certificates**: :func:`uniqueness_check`
  confirms that each doubled-entry element is the smallest point of a
  one-dimensional ray on its own support, and
  :func:`certify_support_minimal` certifies basis membership by support
  minimality over a bounded slice of the cone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .core import (
    N_AXIS_STEPS,
    N_STEPS,
    NotInConeError,
    StepMatrix,
    StepVector,
    apply,
    fcc_matrix,
    support,
    support_size,
)
from .fcc import TYPE_COUNTS, TYPE_SIGNATURES, census, classify, elements_of_type, signature
from .hilbert import HilbertBasis, enumerate_bounded


class CensusMismatchError(ValueError):
    """The provided basis disagrees with the expected per-type counts."""


class TypeMismatchError(ValueError):
    """Element signature does not match the claimed type id."""


class PairingError(ValueError):
    """Type-11 elements failed to pair up by shared axis support."""


class NodeCapExceededError(RuntimeError):
    """Search node cap hit before the system was decided."""


# ---------------------------------------------------------------------------
# Row/sign bookkeeping, derived once from the step matrix.
# ---------------------------------------------------------------------------

def _row_sign_groups():
    matrix = fcc_matrix()
    groups = {}
    for r in range(3):
        for s in (1, -1):
            a_index = next(j for j in range(N_AXIS_STEPS)
                           if matrix.columns[j][r] == 2 * s)
            d_indices = tuple(j for j in range(N_AXIS_STEPS, N_STEPS)
                              if matrix.columns[j][r] == s)
            groups[(r, s)] = (a_index, d_indices)
    return groups


# (row, sign) -> (axis column, four diagonal columns) sharing that signed row.
ROW_SIGN_GROUPS = _row_sign_groups()


# ---------------------------------------------------------------------------
# Structural predicates.
# ---------------------------------------------------------------------------

def check_component_bound(x: Sequence) -> bool:
    """Axis counts never exceed 1 in a minimal cycle."""
    return all(v <= 1 for v in x[:N_AXIS_STEPS])


def check_sign_compatibility(x: Sequence) -> bool:
    """No used axis step shares a signed row with a used diagonal step."""
    for (_, _), (a_index, d_indices) in ROW_SIGN_GROUPS.items():
        if x[a_index] > 0 and any(x[d] > 0 for d in d_indices):
            return False
    return True


def check_sign_sums(x: Sequence) -> bool:
    """Per row and sign, the diagonal load is at most 2."""
    for (_, _), (_, d_indices) in ROW_SIGN_GROUPS.items():
        if sum(x[d] for d in d_indices) > 2:
            return False
    return True


def check_support_domination(basis: HilbertBasis) -> bool:
    """No 0/1 element's support is contained in another element's support."""
    supports = [frozenset(support(x)) for x in basis.elements]
    for i, v in enumerate(basis.elements):
        if any(c > 1 for c in v):
            continue
        sv = supports[i]
        for j, su in enumerate(supports):
            if i != j and sv <= su:
                return False
    return True


# ---------------------------------------------------------------------------
# Constraint systems.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearConstraint:
    label: str
    terms: tuple            # ((coefficient, variable name), ...)
    relation: str           # "<=", ">=" or "="
    rhs: int

    def lp_text(self) -> str:
        parts = []
        for k, (coef, var) in enumerate(self.terms):
            mag = abs(coef)
            body = var if mag == 1 else f"{mag} {var}"
            if k == 0:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coef > 0 else '-'} {body}")
        return f"{self.label}: {' '.join(parts)} {self.relation} {self.rhs}"

    def evaluate(self, assignment: dict) -> bool:
        lhs = sum(coef * assignment[var] for coef, var in self.terms)
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class ConstraintSystem:
    """Labeled integer constraints over x1..x18 and indicators y7..y18.

    ``step_bounds[j]`` is the inclusive box for x{j+1}.  ``groups`` names
    the removable exclusion units (one constraint each, except the paired
    two-constraint groups) for the mutation tests.
    """

    constraints: tuple
    step_bounds: tuple = tuple([(0, 1)] * N_AXIS_STEPS
                               + [(0, 2)] * (N_STEPS - N_AXIS_STEPS))
    indicator_vars: tuple = tuple(f"y{j}" for j in range(N_AXIS_STEPS + 1,
                                                         N_STEPS + 1))
    groups: dict = field(default_factory=dict)

    def labels(self) -> list:
        return [c.label for c in self.constraints]

    def constraint(self, label: str) -> LinearConstraint:
        for c in self.constraints:
            if c.label == label:
                return c
        raise KeyError(label)

    def lp_text(self) -> str:
        return "\n".join(c.lp_text() for c in self.constraints) + "\n"

    def evaluate(self, assignment: dict) -> bool:
        return not self.violated(assignment)

    def violated(self, assignment: dict) -> list:
        """Labels of constraints the assignment breaks (box included)."""
        bad = [c.label for c in self.constraints if not c.evaluate(assignment)]
        for j, (lo, hi) in enumerate(self.step_bounds):
            v = assignment[f"x{j + 1}"]
            if not lo <= v <= hi:
                bad.append(f"box-x{j + 1}")
        for var in self.indicator_vars:
            if assignment[var] not in (0, 1):
                bad.append(f"box-{var}")
        return bad

    def without_groups(self, names: Iterable) -> "ConstraintSystem":
        names = set(names)
        unknown = names - set(self.groups)
        if unknown:
            raise KeyError(f"unknown groups: {sorted(unknown)}")
        dropped = {label for name in names for label in self.groups[name]}
        return ConstraintSystem(
            constraints=tuple(c for c in self.constraints
                              if c.label not in dropped),
            step_bounds=self.step_bounds,
            indicator_vars=self.indicator_vars,
            groups={k: v for k, v in self.groups.items() if k not in names})

    def without_group(self, name: str) -> "ConstraintSystem":
        return self.without_groups([name])

    def with_constraints(self, extra: Iterable) -> "ConstraintSystem":
        return ConstraintSystem(
            constraints=self.constraints + tuple(extra),
            step_bounds=self.step_bounds,
            indicator_vars=self.indicator_vars,
            groups=dict(self.groups))


def _xvar(j: int) -> str:
    return f"x{j + 1}"


def _supvar(j: int) -> str:
    """Support indicator for column j: the variable itself for axis steps."""
    return _xvar(j) if j < N_AXIS_STEPS else f"y{j + 1}"


def _support_exclusion(label: str, element: Sequence) -> LinearConstraint:
    """One inequality forbidding supports that contain this element's support."""
    supp = support(element)
    terms = tuple((1, _supvar(j)) for j in supp)
    return LinearConstraint(label=label, terms=terms, relation="<=",
                            rhs=len(supp) - 1)


def _base_constraints(matrix: StepMatrix, big_m: int) -> list:
    cons = []
    for r in range(matrix.n_rows):
        terms = tuple((matrix.columns[j][r], _xvar(j))
                      for j in range(matrix.n_cols)
                      if matrix.columns[j][r] != 0)
        cons.append(LinearConstraint(f"e501-r{r + 1}", terms, "=", 0))
    cons.append(LinearConstraint(
        "e502", tuple((1, _xvar(j)) for j in range(N_STEPS)), ">=", 1))
    sign_labels = {(0, 1): "e503", (0, -1): "e504", (1, 1): "e505a",
                   (1, -1): "e505b", (2, 1): "e505c", (2, -1): "e505d"}
    for (r, s), label in sign_labels.items():
        a_index, d_indices = ROW_SIGN_GROUPS[(r, s)]
        terms = ((2, _xvar(a_index)),) + tuple((1, _xvar(d)) for d in d_indices)
        cons.append(LinearConstraint(label, terms, "<=", 2))
    for j in range(N_AXIS_STEPS, N_STEPS):
        cons.append(LinearConstraint(
            f"e506-y{j + 1}", ((1, f"y{j + 1}"), (-1, _xvar(j))), "<=", 0))
    for j in range(N_AXIS_STEPS, N_STEPS):
        cons.append(LinearConstraint(
            f"e507-x{j + 1}", ((1, _xvar(j)), (-big_m, f"y{j + 1}")), "<=", 0))
    return cons


def _check_census(basis: HilbertBasis) -> None:
    got = census(basis.elements)
    if got != TYPE_COUNTS:
        raise CensusMismatchError(f"census {got} != expected {TYPE_COUNTS}")


def type11_pairs(basis: HilbertBasis) -> list:
    """The 12 pairs of type-11 elements sharing an axis support.

    Each axis pair admits exactly two doubled-diagonal completions; the two
    resulting elements are excluded together.  Raises :class:`PairingError`
    if the grouping does not come out as 12 clean pairs.
    """
    by_axis_support = {}
    for x in elements_of_type(basis.elements, 11):
        key = tuple(j for j in range(N_AXIS_STEPS) if x[j] > 0)
        by_axis_support.setdefault(key, []).append(x)
    pairs = []
    for key in sorted(by_axis_support):
        group = sorted(by_axis_support[key])
        if len(group) != 2:
            raise PairingError(
                f"axis support {key} has {len(group)} elements, expected 2")
        pairs.append((group[0], group[1]))
    return pairs


def _type179_items(basis: HilbertBasis) -> list:
    """(label, element) for every type 1-7 and 9 exclusion, in order."""
    items = []
    for t in (1, 2, 3, 4, 5, 6, 7, 9):
        for k, x in enumerate(elements_of_type(basis.elements, t), start=1):
            items.append((f"T179-type{t}-case{k}", x))
    return items


def build_base_system(basis: HilbertBasis, big_m: int = 2) -> ConstraintSystem:
    """Cycle equations, nonzero bound, sign-sum caps, indicator links, and
    the 91 support exclusions from the 0/1 types."""
    _check_census(basis)
    cons = _base_constraints(basis.matrix, big_m)
    groups = {}
    for label, x in _type179_items(basis):
        cons.append(_support_exclusion(label, x))
        groups[label] = (label,)
    return ConstraintSystem(constraints=tuple(cons), groups=groups)


def build_exclusion_system(basis: HilbertBasis, big_m: int = 2) -> ConstraintSystem:
    """The combined system: infeasible exactly when the census is complete.

    On top of the base system, every doubled-entry element contributes a
    support-exclusion inequality; type-11 inequalities are grouped in the
    natural pairs so a group removal releases both paired elements.
    """
    system = build_base_system(basis, big_m)
    cons = list(system.constraints)
    groups = dict(system.groups)
    for k, x in enumerate(elements_of_type(basis.elements, 8), start=1):
        label = f"Type-8-case{k}"
        cons.append(_support_exclusion(label, x))
        groups[label] = (label,)
    for k, x in enumerate(elements_of_type(basis.elements, 10), start=1):
        label = f"Type-10-case{k}"
        cons.append(_support_exclusion(label, x))
        groups[label] = (label,)
    for p, (first, second) in enumerate(type11_pairs(basis), start=1):
        la, lb = f"Type-11-pair{p}-a", f"Type-11-pair{p}-b"
        cons.append(_support_exclusion(la, first))
        cons.append(_support_exclusion(lb, second))
        groups[f"Type-11-pair{p}"] = (la, lb)
    return ConstraintSystem(constraints=tuple(cons), groups=groups)


def exclusion_groups(basis: HilbertBasis) -> list:
    """(group name, excluded elements) in the combined system's order."""
    out = [(label, (x,)) for label, x in _type179_items(basis)]
    for k, x in enumerate(elements_of_type(basis.elements, 8), start=1):
        out.append((f"Type-8-case{k}", (x,)))
    for k, x in enumerate(elements_of_type(basis.elements, 10), start=1):
        out.append((f"Type-10-case{k}", (x,)))
    for p, pair in enumerate(type11_pairs(basis), start=1):
        out.append((f"Type-11-pair{p}", pair))
    return out


def _doubled_and_single_diagonals(element: Sequence):
    doubled = [j for j in range(N_AXIS_STEPS, N_STEPS) if element[j] == 2]
    single = [j for j in range(N_AXIS_STEPS, N_STEPS) if element[j] == 1]
    return doubled, single


def build_type8_subsystem(basis: HilbertBasis, element: Sequence,
                          big_m: int = 2) -> ConstraintSystem:
    """Base system plus pins: both axis entries and the doubled diagonal
    forced to 1, so any solution needs a strictly larger support."""
    if classify(element) != 8:
        raise TypeMismatchError(f"{element} is not a type-8 element")
    pins = []
    for j in range(N_AXIS_STEPS):
        if element[j]:
            pins.append(LinearConstraint(f"e508-x{j + 1}",
                                         ((1, _xvar(j)),), "=", 1))
    doubled, _ = _doubled_and_single_diagonals(element)
    pins.append(LinearConstraint(f"e508-x{doubled[0] + 1}",
                                 ((1, _xvar(doubled[0])),), "=", 1))
    return build_base_system(basis, big_m).with_constraints(pins)


def build_type10_subsystem(basis: HilbertBasis, element: Sequence,
                           big_m: int = 2) -> ConstraintSystem:
    """Base system plus pins: axis and doubled diagonal forced to 1, the
    two single diagonals forced positive."""
    if classify(element) != 10:
        raise TypeMismatchError(f"{element} is not a type-10 element")
    pins = []
    for j in range(N_AXIS_STEPS):
        if element[j]:
            pins.append(LinearConstraint(f"e509-x{j + 1}",
                                         ((1, _xvar(j)),), "=", 1))
    doubled, single = _doubled_and_single_diagonals(element)
    pins.append(LinearConstraint(f"e509-x{doubled[0] + 1}",
                                 ((1, _xvar(doubled[0])),), "=", 1))
    for j in single:
        pins.append(LinearConstraint(f"e509-x{j + 1}",
                                     ((1, _xvar(j)),), ">=", 1))
    return build_base_system(basis, big_m).with_constraints(pins)


def build_type11_subsystem(basis: HilbertBasis, pair: Sequence,
                           big_m: int = 2) -> ConstraintSystem:
    """Base system plus the paired caps: shared axis entries forced to 1
    and both doubled-diagonal pairs capped below 4, excluding the pair."""
    first, second = pair
    if classify(first) != 11 or classify(second) != 11:
        raise TypeMismatchError("both elements must be type 11")
    axis = [j for j in range(N_AXIS_STEPS) if first[j]]
    if axis != [j for j in range(N_AXIS_STEPS) if second[j]]:
        raise PairingError("pair does not share its axis support")
    pins = [LinearConstraint(f"Type11-x{j + 1}", ((1, _xvar(j)),), "=", 1)
            for j in axis]
    for tag, element in (("a", first), ("b", second)):
        doubled, _ = _doubled_and_single_diagonals(element)
        terms = tuple((1, _xvar(j)) for j in doubled)
        pins.append(LinearConstraint(f"Type11-cap-{tag}", terms, "<=", 3))
    return build_base_system(basis, big_m).with_constraints(pins)


def per_type_subsystems(basis: HilbertBasis, big_m: int = 2) -> list:
    """(name, subsystem) for all 12 + 24 + 12 pinned exclusion runs."""
    runs = []
    for k, x in enumerate(elements_of_type(basis.elements, 8), start=1):
        runs.append((f"type8-run{k}", build_type8_subsystem(basis, x, big_m)))
    for k, x in enumerate(elements_of_type(basis.elements, 10), start=1):
        runs.append((f"type10-run{k}", build_type10_subsystem(basis, x, big_m)))
    for p, pair in enumerate(type11_pairs(basis), start=1):
        runs.append((f"type11-run{p}", build_type11_subsystem(basis, pair, big_m)))
    return runs


# ---------------------------------------------------------------------------
# Exact feasibility search.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FeasibilityResult:
    status: str                     # "feasible" or "infeasible"
    witness: Optional[dict]         # full assignment incl. indicators
    nodes_explored: int

    def to_json(self) -> str:
        import json
        payload = {"status": self.status, "nodes_explored": self.nodes_explored}
        if self.witness is not None:
            payload["witness"] = self.witness
        return json.dumps(payload, separators=(",", ":"))


def feasibility_search(system: ConstraintSystem,
                       node_cap: Optional[int] = None) -> FeasibilityResult:
    """Decide a system exactly by depth-first search with propagation.

    Indicators are eliminated inside the search (y_j is the truth value of
    x_j > 0, which the linking constraints force anyway).  Variables are
    branched in descending constraint-participation order, ties by index,
    values ascending; a branch dies as soon as a constraint's reachable
    interval over the unassigned variables excludes its right-hand side.
    The first completed assignment is returned as a witness; exhausting
    the tree proves infeasibility.  ``node_cap`` bounds the number of
    attempted assignments (:class:`NodeCapExceededError` beyond it).
    """
    n = N_STEPS
    y_index = {f"y{j + 1}": j for j in range(N_AXIS_STEPS, N_STEPS)}
    x_index = {f"x{j + 1}": j for j in range(n)}

    domains = [list(range(lo, hi + 1)) for lo, hi in system.step_bounds]
    machinery = []
    for c in system.constraints:
        if (len(c.terms) == 1 and c.terms[0][1] in x_index):
            # Single step-variable constraint: fold into the domain.
            coef, var = c.terms[0]
            j = x_index[var]
            domains[j] = [v for v in domains[j]
                          if LinearConstraint("", ((coef, var),), c.relation,
                                              c.rhs).evaluate({var: v})]
            if not domains[j]:
                return FeasibilityResult("infeasible", None, 0)
            continue
        coefx = [0] * n
        coefy = [0] * n
        for coef, var in c.terms:
            if var in x_index:
                coefx[x_index[var]] += coef
            elif var in y_index:
                coefy[y_index[var]] += coef
            else:
                raise ValueError(f"unknown variable {var} in {c.label}")
        machinery.append((c.relation, c.rhs, coefx, coefy))

    participation = [0] * n
    for _, _, coefx, coefy in machinery:
        for j in range(n):
            if coefx[j] or coefy[j]:
                participation[j] += 1
    order = sorted(range(n), key=lambda j: (-participation[j], j))

    # Per-constraint suffix intervals over the branch order.
    n_cons = len(machinery)
    relations = [m[0] for m in machinery]
    rhss = [m[1] for m in machinery]
    suffix_lo = [[0] * n_cons for _ in range(n + 1)]
    suffix_hi = [[0] * n_cons for _ in range(n + 1)]
    contrib = [[None] * n for _ in range(n_cons)]  # contrib[c][depth] per value
    touching = [[] for _ in range(n)]              # constraint ids per depth
    for ci, (_, _, coefx, coefy) in enumerate(machinery):
        for depth in range(n - 1, -1, -1):
            j = order[depth]
            values = [coefx[j] * v + coefy[j] * (1 if v > 0 else 0)
                      for v in domains[j]]
            suffix_lo[depth][ci] = suffix_lo[depth + 1][ci] + min(values)
            suffix_hi[depth][ci] = suffix_hi[depth + 1][ci] + max(values)
            if coefx[j] or coefy[j]:
                contrib[ci][depth] = values
                touching[depth].append(ci)

    def dead(ci: int, cur: int, depth: int) -> bool:
        rel = relations[ci]
        if rel == "<=":
            return cur + suffix_lo[depth][ci] > rhss[ci]
        if rel == ">=":
            return cur + suffix_hi[depth][ci] < rhss[ci]
        return (cur + suffix_lo[depth][ci] > rhss[ci]
                or cur + suffix_hi[depth][ci] < rhss[ci])

    current = [0] * n_cons
    for ci in range(n_cons):
        if dead(ci, 0, 0):
            return FeasibilityResult("infeasible", None, 0)

    assignment = [0] * n
    nodes = 0

    def assemble() -> dict:
        witness = {f"x{j + 1}": assignment[j] for j in range(n)}
        for var, j in y_index.items():
            witness[var] = 1 if assignment[j] > 0 else 0
        bad = system.violated(witness)
        if bad:  # pragma: no cover - engine self-check
            raise AssertionError(f"witness violates {bad}")
        return witness

    def descend(depth: int):
        nonlocal nodes
        if depth == n:
            return assemble()
        j = order[depth]
        tlist = touching[depth]
        for vi, v in enumerate(domains[j]):
            nodes += 1
            if node_cap is not None and nodes > node_cap:
                raise NodeCapExceededError(f"node cap {node_cap} exceeded")
            ok = True
            for ci in tlist:
                cur = current[ci] + contrib[ci][depth][vi]
                if dead(ci, cur, depth + 1):
                    ok = False
                    break
            if not ok:
                continue
            for ci in tlist:
                current[ci] += contrib[ci][depth][vi]
            assignment[j] = v
            witness = descend(depth + 1)
            if witness is not None:
                return witness
            for ci in tlist:
                current[ci] -= contrib[ci][depth][vi]
        assignment[j] = 0
        return None

    witness = descend(0)
    if witness is None:
        return FeasibilityResult("infeasible", None, nodes)
    return FeasibilityResult("feasible", witness, nodes)


def witness_step_vector(witness: dict) -> StepVector:
    """Project a witness assignment onto its step vector."""
    return tuple(witness[f"x{j + 1}"] for j in range(N_STEPS))


# ---------------------------------------------------------------------------
# Uniqueness of the doubled-entry elements on their own support.
# ---------------------------------------------------------------------------

def _nullspace(columns: Sequence) -> list:
    """Basis of {z : sum z_j col_j = 0} over the rationals, exactly."""
    k = len(columns)
    m = len(columns[0])
    rows = [[Fraction(columns[j][r]) for j in range(k)] for r in range(m)]
    pivots = []
    row = 0
    for col in range(k):
        pivot = next((r for r in range(row, m) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        rows[row] = [v / rows[row][col] for v in rows[row]]
        for r in range(m):
            if r != row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for f in free:
        z = [Fraction(0)] * k
        z[f] = Fraction(1)
        for r, p in enumerate(pivots):
            z[p] = -rows[r][f]
        basis.append(tuple(z))
    return basis


def _primitive_integer(vector: Sequence) -> tuple:
    denom = 1
    for v in vector:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vector]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    if sum(ints) < 0 or (sum(ints) == 0 and next(v for v in ints if v) < 0):
        ints = [-v for v in ints]
    return tuple(ints)


def uniqueness_check(type_id: int, element: Sequence,
                     matrix: Optional[StepMatrix] = None) -> bool:
    """Solutions restricted to the element's support form a single ray.

    Checks that the support columns have a one-dimensional kernel whose
    primitive positive generator is the element itself, and that brute
    enumeration up to entry value 2 on the support finds nothing else.
    """
    if type_id not in (8, 10, 11):
        raise TypeMismatchError(f"type {type_id} has no doubled entries")
    if signature(element) != TYPE_SIGNATURES[type_id]:
        raise TypeMismatchError(
            f"{element} does not have the type-{type_id} signature")
    matrix = matrix or fcc_matrix()
    supp = support(element)
    columns = [matrix.columns[j] for j in supp]
    kernel = _nullspace(columns)
    if len(kernel) != 1:
        return False
    generator = _primitive_integer(kernel[0])
    if any(v <= 0 for v in generator):
        return False
    restricted = tuple(element[j] for j in supp)
    if generator != restricted:
        return False
    # Exhaustive double-check inside the entry-value-2 box.
    from itertools import product as _product
    found = []
    for z in _product(range(3), repeat=len(supp)):
        if not any(z):
            continue
        sums = [sum(z[i] * columns[i][r] for i in range(len(supp)))
                for r in range(matrix.n_rows)]
        if not any(sums):
            found.append(z)
    return found == [restricted]


# ---------------------------------------------------------------------------
# Support-minimality certificates over a bounded slice.
# ---------------------------------------------------------------------------

def _require_in_cone(matrix: StepMatrix, x: Sequence) -> StepVector:
    x = tuple(int(v) for v in x)
    if any(v < 0 for v in x) or any(apply(matrix, x)):
        raise NotInConeError(f"{x} is not in the cone")
    return x


def certify_support_minimal(xstar: Sequence, excluded: Sequence,
                            bound: Sequence,
                            matrix: Optional[StepMatrix] = None,
                            candidates: Optional[Sequence] = None) -> bool:
    """Certify basis membership of ``xstar`` by support minimality.

    ``excluded`` is a list of already-certified basis elements.  The
    candidate pool is every solution in the box 0 != y <= bound, minus
    members of ``excluded`` and minus any solution whose support contains
    an excluded element's support (such solutions are never minimal).
    The certificate holds when no surviving candidate beats ``xstar`` --
    by support size alone for a 0/1 bound, lexicographically by (support
    size, component sum) otherwise -- and no excluded support sits inside
    ``xstar``'s own support.  Pass ``candidates`` to reuse a precomputed
    solution list for the bound.
    """
    matrix = matrix or fcc_matrix()
    bound = tuple(int(b) for b in bound)
    xstar = _require_in_cone(matrix, xstar)
    excluded = [_require_in_cone(matrix, l) for l in excluded]

    if not any(xstar) or any(v > b for v, b in zip(xstar, bound)):
        return False

    xsupp = frozenset(support(xstar))
    excluded_set = set(excluded)
    excluded_supports = [frozenset(support(l)) for l in excluded]
    if any(ls <= xsupp for ls in excluded_supports):
        return False

    lexicographic = any(b > 1 for b in bound)
    if candidates is None:
        candidates = enumerate_bounded(matrix, bound)
    key_star = (support_size(xstar), sum(xstar))

    for y in candidates:
        size = support_size(y)
        if size > key_star[0]:
            continue
        if size == key_star[0] and (not lexicographic
                                    or sum(y) >= key_star[1]):
            continue
        # y beats xstar; the certificate survives only if y is excluded.
        if y in excluded_set:
            continue
        ysupp = frozenset(support(y))
        if any(ls <= ysupp for ls in excluded_supports):
            continue
        return False
    return True


def certify_census_by_support(basis: HilbertBasis,
                              jobs: int = 1) -> dict:
    """Certify every basis element progressively by support minimality.

    Elements are certified in rounds of increasing (support size,
    component sum): 0/1 elements against the 0/1 slice, doubled-entry
    elements against the doubled slice.  Each round excludes everything
    certified earlier, and the candidate pool is filtered incrementally.
    Returns {element: True} for all elements or raises on the first
    failure.
    """
    matrix = basis.matrix
    slice_small = enumerate_bounded(matrix, (1,) * N_STEPS, jobs=jobs)
    slice_large = enumerate_bounded(matrix, (2,) * N_STEPS, jobs=jobs)

    def key(x):
        return (support_size(x), sum(x))

    rounds = {}
    for x in basis.elements:
        rounds.setdefault((max(x) > 1, key(x)), []).append(x)

    certified = []
    results = {}
    pools = {False: [(y, frozenset(support(y))) for y in slice_small],
             True: [(y, frozenset(support(y))) for y in slice_large]}
    filtered_against = {False: 0, True: 0}
    for (doubled, _), batch in sorted(rounds.items()):
        pool = pools[doubled]
        new = certified[filtered_against[doubled]:]
        if new:
            new_supports = [frozenset(support(l)) for l in new]
            new_set = set(new)
            pool = [(y, s) for y, s in pool
                    if y not in new_set
                    and not any(ls <= s for ls in new_supports)]
            pools[doubled] = pool
            filtered_against[doubled] = len(certified)
        bound = (2,) * N_STEPS if doubled else (1,) * N_STEPS
        candidates = [y for y, _ in pool]
        for x in sorted(batch):
            ok = certify_support_minimal(x, certified, bound, matrix=matrix,
                                         candidates=candidates)
            if not ok:
                raise AssertionError(f"support certificate failed for {x}")
            results[x] = True
        certified.extend(sorted(batch))
    return results


# ---------------------------------------------------------------------------
# Box coverage: no bounded cycle escapes domination by the basis.
# ---------------------------------------------------------------------------

def find_undominated_cycle(basis: HilbertBasis,
                           bound: Sequence) -> Optional[StepVector]:
    """Search for a cycle x <= bound with no basis element below it.

    Returns such a cycle, or None if none exists.  None certifies (by
    induction on the component sum: subtracting a dominated element stays
    inside the box) that every solution in the box decomposes over the
    basis.  Exhaustive depth-first search; a branch dies when some row sum
    becomes unreachable or a basis element is already fully dominated.
    """
    matrix = basis.matrix
    n = matrix.n_cols
    m = matrix.n_rows
    cols = matrix.columns
    bound = tuple(int(b) for b in bound)

    patterns = [[(j, v) for j, v in enumerate(h) if v > 0]
                for h in basis.elements]
    need = [len(p) for p in patterns]
    per_var = [[] for _ in range(n)]
    for hid, p in enumerate(patterns):
        for j, v in p:
            per_var[j].append((hid, v))

    suffix_lo = [[0] * m for _ in range(n + 1)]
    suffix_hi = [[0] * m for _ in range(n + 1)]
    for d in range(n - 1, -1, -1):
        for r in range(m):
            c = cols[d][r] * bound[d]
            suffix_lo[d][r] = suffix_lo[d + 1][r] + min(c, 0)
            suffix_hi[d][r] = suffix_hi[d + 1][r] + max(c, 0)

    sums = [0] * m
    sat = [0] * len(patterns)
    stack = []

    def descend(depth: int, nonzero: bool):
        if depth == n:
            return tuple(stack) if nonzero else None
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
            dominated = False
            bumped = []
            for hid, threshold in per_var[depth]:
                if v >= threshold:
                    sat[hid] += 1
                    bumped.append(hid)
                    if sat[hid] == need[hid]:
                        dominated = True
            if not dominated:
                for r in range(m):
                    sums[r] += v * col[r]
                stack.append(v)
                hit = descend(depth + 1, nonzero or v > 0)
                if hit is not None:
                    return hit
                stack.pop()
                for r in range(m):
                    sums[r] -= v * col[r]
            for hid in bumped:
                sat[hid] -= 1
        return None

    return descend(0, False)
