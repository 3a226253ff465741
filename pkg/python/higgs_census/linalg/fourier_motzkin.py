# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Fourier–Motzkin elimination and integer feasibility of linear systems."""

from __future__ import annotations

import dataclasses
import enum
import itertools
import logging
import math
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

from higgs_census.linalg.affine import AffineForm, Scalar, as_form

logger = logging.getLogger(__name__)


class Relation(enum.Enum):
    """Relation of a linear constraint to zero."""

    LE = "<="
    """The form is at most zero."""

    LT = "<"
    """The form is strictly negative."""

    EQ = "=="
    """The form vanishes."""


@dataclasses.dataclass(frozen=True)
class LinearConstraint:
    """A constraint ``form <relation> 0`` on integer variables.

    Attributes:
        form: The affine form.
        relation: How the form compares to zero.
        label: A human-readable name used in infeasibility certificates.
    """

    form: AffineForm
    relation: Relation
    label: str = ""

    def is_satisfied(self, assignment: Mapping[str, Scalar]) -> bool:
        """Return whether an assignment satisfies the constraint."""
        value = self.form.evaluate(assignment)
        if self.relation is Relation.LE:
            return value <= 0
        if self.relation is Relation.LT:
            return value < 0
        return value == 0

    def __str__(self) -> str:
        return f"{self.form} {self.relation.value} 0"


def le(
    lhs: AffineForm | Scalar, rhs: AffineForm | Scalar, label: str = ""
) -> LinearConstraint:
    """The constraint ``lhs <= rhs``."""
    return LinearConstraint(as_form(lhs) - rhs, Relation.LE, label)


def lt(
    lhs: AffineForm | Scalar, rhs: AffineForm | Scalar, label: str = ""
) -> LinearConstraint:
    """The constraint ``lhs < rhs``."""
    return LinearConstraint(as_form(lhs) - rhs, Relation.LT, label)


def ge(
    lhs: AffineForm | Scalar, rhs: AffineForm | Scalar, label: str = ""
) -> LinearConstraint:
    """The constraint ``lhs >= rhs``."""
    return LinearConstraint(as_form(rhs) - lhs, Relation.LE, label)


def gt(
    lhs: AffineForm | Scalar, rhs: AffineForm | Scalar, label: str = ""
) -> LinearConstraint:
    """The constraint ``lhs > rhs``."""
    return LinearConstraint(as_form(rhs) - lhs, Relation.LT, label)


def eq(
    lhs: AffineForm | Scalar, rhs: AffineForm | Scalar, label: str = ""
) -> LinearConstraint:
    """The constraint ``lhs == rhs``."""
    return LinearConstraint(as_form(lhs) - rhs, Relation.EQ, label)


class FeasibilityStatus(enum.Enum):
    """Outcome of an integer feasibility query."""

    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    NEEDS_BOUND = "needs-bound"


@dataclasses.dataclass(frozen=True)
class FeasibilityResult:
    """Result of an integer feasibility query.

    Attributes:
        status: Whether an integer point exists.
        witness: An integer point satisfying every constraint, if one was found.
        certificate: Labels of the input constraints whose combination was shown
            to have no integer solution. Empty unless the status is infeasible
            and the contradiction was found by elimination.
        unbounded_variable: The variable whose range could not be bounded, when
            the status is ``NEEDS_BOUND``.
    """

    status: FeasibilityStatus
    witness: dict[str, int] | None = None
    certificate: tuple[str, ...] = ()
    unbounded_variable: str | None = None

    @property
    def feasible(self) -> bool:
        """Whether an integer point was found."""
        return self.status is FeasibilityStatus.FEASIBLE


class UnboundedVariableError(Exception):
    """Raised internally when the integer search meets an unbounded variable."""

    def __init__(self, variable: str):
        super().__init__(variable)
        self.variable = variable


# An inequality sum(coeffs) + constant <= 0 with integer data and the set of
# input labels it was derived from.
@dataclasses.dataclass(frozen=True)
class _Row:
    coeffs: tuple[tuple[str, int], ...]
    constant: int
    origin: frozenset[str]

    def coefficient(self, name: str) -> int:
        for var, coeff in self.coeffs:
            if var == name:
                return coeff
        return 0

    def violated(self) -> bool:
        return not self.coeffs and self.constant > 0


def _make_row(form: AffineForm, strict: bool, origin: frozenset[str]) -> _Row:
    form, _ = form.scaled_to_integers()
    coeffs = [(name, int(coeff)) for name, coeff in form.terms]
    constant = int(form.offset)
    if strict:
        # integer data: f < 0 iff f + 1 <= 0
        constant += 1
    if coeffs:
        divisor = math.gcd(*(coeff for _, coeff in coeffs))
        coeffs = [(name, coeff // divisor) for name, coeff in coeffs]
        # sum(a x) <= -c implies sum(a/g x) <= floor(-c/g)
        constant = -((-constant) // divisor)
    return _Row(tuple(coeffs), constant, origin)


def _rows_from_constraints(
    constraints: Iterable[LinearConstraint],
) -> tuple[list[_Row], dict[str, AffineForm], frozenset[str] | None]:
    """Normalize constraints into integer rows.

    Equalities with a unit coefficient are solved and substituted; the others are
    split into two inequalities.

    Returns:
        The rows, the substitutions performed, and the origin of an equality with
        no integer solution (or None).
    """
    pending = list(constraints)
    substitutions: dict[str, AffineForm] = {}
    rows: list[_Row] = []
    while pending:
        constraint = pending.pop(0)
        form = constraint.form.substitute(substitutions)
        origin = frozenset({constraint.label or str(constraint)})
        if constraint.relation is not Relation.EQ:
            rows.append(
                _make_row(form, constraint.relation is Relation.LT, origin)
            )
            continue
        scaled, _ = form.scaled_to_integers()
        if scaled.is_constant():
            if scaled.offset != 0:
                return rows, substitutions, origin
            continue
        divisor = math.gcd(*(int(coeff) for _, coeff in scaled.terms))
        if int(scaled.offset) % divisor:
            return rows, substitutions, origin
        pivot = next(
            (name for name, coeff in scaled.terms if abs(coeff) == divisor), None
        )
        if pivot is None:
            rows.append(_make_row(scaled, False, origin))
            rows.append(_make_row(-scaled, False, origin))
            continue
        pivot_coeff = scaled.coefficient(pivot)
        solution = (
            scaled - AffineForm.from_mapping({pivot: pivot_coeff})
        ) * Fraction(-1, int(pivot_coeff))
        substitutions = {
            name: value.substitute({pivot: solution})
            for name, value in substitutions.items()
        }
        substitutions[pivot] = solution
        rows = [
            _make_row(_row_form(row).substitute({pivot: solution}), False, row.origin)
            for row in rows
        ]
    return rows, substitutions, None


def _row_form(row: _Row) -> AffineForm:
    return AffineForm.from_mapping(dict(row.coeffs), row.constant)


def _deduplicate(rows: Iterable[_Row]) -> list[_Row]:
    best: dict[tuple[tuple[str, int], ...], _Row] = {}
    for row in rows:
        current = best.get(row.coeffs)
        if current is None or row.constant > current.constant:
            best[row.coeffs] = row
    return list(best.values())


def _combine(positive: _Row, negative: _Row, variable: str) -> _Row:
    a = positive.coefficient(variable)
    b = -negative.coefficient(variable)
    form = _row_form(positive) * b + _row_form(negative) * a
    return _make_row(form, False, positive.origin | negative.origin)


def _eliminate(rows: Sequence[_Row], variable: str) -> list[_Row]:
    zero, positive, negative = [], [], []
    for row in rows:
        coeff = row.coefficient(variable)
        if coeff > 0:
            positive.append(row)
        elif coeff < 0:
            negative.append(row)
        else:
            zero.append(row)
    logger.debug(
        "eliminate %s: z=%d, p=%d, n=%d",
        variable,
        len(zero),
        len(positive),
        len(negative),
    )
    combined = [
        _combine(p, n, variable) for p, n in itertools.product(positive, negative)
    ]
    return _deduplicate(zero + combined)


def _variables(rows: Iterable[_Row]) -> list[str]:
    return sorted({name for row in rows for name, _ in row.coeffs})


def _elimination_order(rows: Sequence[_Row], variables: Sequence[str]) -> str:
    def cost(name: str) -> tuple[int, str]:
        p = sum(1 for row in rows if row.coefficient(name) > 0)
        n = sum(1 for row in rows if row.coefficient(name) < 0)
        return p * n - p - n, name

    return min(variables, key=cost)


def _first_violation(rows: Iterable[_Row]) -> _Row | None:
    return next((row for row in rows if row.violated()), None)


def _project(rows: Sequence[_Row], keep: str) -> list[_Row] | _Row:
    """Eliminate every variable except ``keep``.

    Returns:
        The projected rows, or a violated row proving infeasibility.
    """
    rows = _deduplicate(rows)
    while True:
        violation = _first_violation(rows)
        if violation is not None:
            return violation
        others = [name for name in _variables(rows) if name != keep]
        if not others:
            return rows
        rows = _eliminate(rows, _elimination_order(rows, others))


def _bounds(rows: Sequence[_Row], variable: str) -> tuple[int | None, int | None]:
    lower: int | None = None
    upper: int | None = None
    for row in rows:
        a = row.coefficient(variable)
        if a > 0:
            # a x + c <= 0  =>  x <= floor(-c / a)
            value = (-row.constant) // a
            upper = value if upper is None else min(upper, value)
        elif a < 0:
            # x >= ceil(-c / a) = ceil(c / -a)
            value = -((-row.constant) // (-a))
            lower = value if lower is None else max(lower, value)
    return lower, upper


def _substitute_value(rows: Sequence[_Row], variable: str, value: int) -> list[_Row]:
    result = []
    for row in rows:
        a = row.coefficient(variable)
        if not a:
            result.append(row)
            continue
        coeffs = tuple((name, c) for name, c in row.coeffs if name != variable)
        result.append(_Row(coeffs, row.constant + a * value, row.origin))
    return result


def _search(
    rows: Sequence[_Row],
    variables: Sequence[str],
    bounds: Mapping[str, tuple[int, int]],
) -> dict[str, int] | None:
    if _first_violation(rows) is not None:
        return None
    if not variables:
        return {}
    variable, rest = variables[0], variables[1:]
    projected = _project(rows, variable)
    if isinstance(projected, _Row):
        return None
    lower, upper = _bounds(projected, variable)
    if variable in bounds:
        box_lower, box_upper = bounds[variable]
        lower = box_lower if lower is None else max(lower, box_lower)
        upper = box_upper if upper is None else min(upper, box_upper)
    if lower is None or upper is None:
        raise UnboundedVariableError(variable)
    for value in range(lower, upper + 1):
        witness = _search(_substitute_value(rows, variable, value), rest, bounds)
        if witness is not None:
            witness[variable] = value
            return witness
    return None


def integer_feasibility(
    constraints: Iterable[LinearConstraint],
    *,
    bounds: Mapping[str, tuple[int, int]] | None = None,
) -> FeasibilityResult:
    """Decide whether a system of linear constraints has an integer solution.

    The system is first run through Fourier–Motzkin elimination over the
    rationals, with every derived inequality tightened to integer data. A
    contradiction found this way is returned together with the labels of the
    constraints it was derived from. Otherwise the integer points are searched
    variable by variable, using the projection of the system onto the current
    variable to bound its range.

    Args:
        constraints: The constraints. All variables are integers.
        bounds: Optional explicit inclusive bounds for some variables.

    Returns:
        The feasibility result. The status is ``NEEDS_BOUND`` when the search
        reaches a variable whose range is not bounded by the constraints or by
        ``bounds``; the box is never truncated silently.
    """
    bounds = dict(bounds or {})
    constraints = list(constraints)
    rows, substitutions, bad_equality = _rows_from_constraints(constraints)
    if bad_equality is not None:
        return FeasibilityResult(
            FeasibilityStatus.INFEASIBLE, certificate=tuple(sorted(bad_equality))
        )
    for name, (lower, upper) in bounds.items():
        if name in substitutions:
            form = substitutions[name]
            rows.append(_make_row(form - upper, False, frozenset({f"bound {name}"})))
            rows.append(_make_row(lower - form, False, frozenset({f"bound {name}"})))
        else:
            variable = AffineForm.variable(name)
            rows.append(
                _make_row(variable - upper, False, frozenset({f"bound {name}"}))
            )
            rows.append(
                _make_row(lower - variable, False, frozenset({f"bound {name}"}))
            )

    # rational elimination of everything
    remaining = _deduplicate(rows)
    while True:
        violation = _first_violation(remaining)
        if violation is not None:
            return FeasibilityResult(
                FeasibilityStatus.INFEASIBLE,
                certificate=tuple(sorted(violation.origin)),
            )
        names = _variables(remaining)
        if not names:
            break
        remaining = _eliminate(remaining, _elimination_order(remaining, names))

    variables = _variables(rows)
    try:
        witness = _search(rows, variables, bounds)
    except UnboundedVariableError as error:
        return FeasibilityResult(
            FeasibilityStatus.NEEDS_BOUND, unbounded_variable=error.variable
        )
    if witness is None:
        return FeasibilityResult(FeasibilityStatus.INFEASIBLE)
    # variables left free by the constraints take the value 0
    names = {n for c in constraints for n in c.form.variables} | set(bounds)
    for name in names - set(substitutions) - set(witness):
        witness[name] = 0
    for name, form in substitutions.items():
        for free in form.variables:
            witness.setdefault(free, 0)
        witness[name] = int(form.evaluate(witness))
    return FeasibilityResult(
        FeasibilityStatus.FEASIBLE, witness=dict(sorted(witness.items()))
    )


def brute_force_feasibility(
    constraints: Iterable[LinearConstraint], box: Mapping[str, tuple[int, int]]
) -> dict[str, int] | None:
    """Search a box exhaustively for an integer point satisfying the constraints.

    Args:
        constraints: The constraints.
        box: Inclusive bounds for every variable appearing in the constraints.

    Returns:
        The first point found in lexicographic order of the sorted variable
        names, or None.
    """
    constraints = list(constraints)
    names = sorted(box)
    ranges = [range(box[name][0], box[name][1] + 1) for name in names]
    for values in itertools.product(*ranges):
        assignment = dict(zip(names, values))
        if all(constraint.is_satisfied(assignment) for constraint in constraints):
            return assignment
    return None
