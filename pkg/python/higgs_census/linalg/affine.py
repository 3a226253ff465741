# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Exact affine forms in named integer variables."""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class AffineForm:
    r"""An affine function :math:`\sum_i a_i x_i + c` with rational coefficients.

    Forms are immutable and compare equal to plain numbers when they have no
    variables, so ``AffineForm.constant(3) == 3`` holds.

    Attributes:
        terms: The nonzero coefficients, as ``(variable, coefficient)`` pairs
            sorted by variable name.
        offset: The constant term.
    """

    terms: tuple[tuple[str, Fraction], ...] = ()
    offset: Fraction = Fraction(0)

    @staticmethod
    def from_mapping(
        coefficients: Mapping[str, Scalar], offset: Scalar = 0
    ) -> AffineForm:
        """Build a form from a mapping of variable names to coefficients."""
        terms = tuple(
            sorted(
                (name, Fraction(value))
                for name, value in coefficients.items()
                if value != 0
            )
        )
        return AffineForm(terms, Fraction(offset))

    @staticmethod
    def variable(name: str) -> AffineForm:
        """Return the form consisting of a single variable."""
        return AffineForm(((name, Fraction(1)),))

    @staticmethod
    def constant(value: Scalar) -> AffineForm:
        """Return the constant form with the given value."""
        return AffineForm((), Fraction(value))

    @property
    def coefficients(self) -> dict[str, Fraction]:
        """The coefficients as a dictionary."""
        return dict(self.terms)

    @property
    def variables(self) -> tuple[str, ...]:
        """The variables with a nonzero coefficient, sorted by name."""
        return tuple(name for name, _ in self.terms)

    def is_constant(self) -> bool:
        """Return whether the form has no variables."""
        return not self.terms

    def coefficient(self, name: str) -> Fraction:
        """Return the coefficient of a variable (zero if absent)."""
        return self.coefficients.get(name, Fraction(0))

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Evaluate the form at an assignment of all of its variables.

        Raises:
            KeyError: A variable of the form is missing from the assignment.
        """
        return self.offset + sum(
            (coeff * assignment[name] for name, coeff in self.terms), Fraction(0)
        )

    def substitute(self, values: Mapping[str, AffineForm | Scalar]) -> AffineForm:
        """Replace some variables by numbers or other forms."""
        result = AffineForm.constant(self.offset)
        for name, coeff in self.terms:
            replacement = values.get(name, AffineForm.variable(name))
            result = result + coeff * as_form(replacement)
        return result

    def scaled_to_integers(self) -> tuple[AffineForm, int]:
        """Return a positive multiple of the form with integer coefficients.

        Returns:
            The scaled form and the (positive) multiplier used.
        """
        denominators = [coeff.denominator for _, coeff in self.terms]
        denominators.append(self.offset.denominator)
        multiplier = math.lcm(*denominators)
        return self * multiplier, multiplier

    def _combine(self, other: AffineForm | Scalar, sign: int) -> AffineForm:
        other = as_form(other)
        coefficients = self.coefficients
        for name, coeff in other.terms:
            coefficients[name] = coefficients.get(name, Fraction(0)) + sign * coeff
        return AffineForm.from_mapping(coefficients, self.offset + sign * other.offset)

    def __add__(self, other: AffineForm | Scalar) -> AffineForm:
        if not isinstance(other, (AffineForm, int, Fraction)):
            return NotImplemented
        return self._combine(other, 1)

    def __radd__(self, other: Scalar) -> AffineForm:
        return self.__add__(other)

    def __sub__(self, other: AffineForm | Scalar) -> AffineForm:
        if not isinstance(other, (AffineForm, int, Fraction)):
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other: Scalar) -> AffineForm:
        return (-self).__add__(other)

    def __neg__(self) -> AffineForm:
        return self * -1

    def __mul__(self, scalar: Scalar) -> AffineForm:
        if isinstance(scalar, AffineForm) or not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return AffineForm(
            tuple((name, coeff * scalar) for name, coeff in self.terms if scalar != 0),
            self.offset * scalar,
        )

    def __rmul__(self, scalar: Scalar) -> AffineForm:
        return self.__mul__(scalar)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return not self.terms and self.offset == other
        if isinstance(other, AffineForm):
            return self.terms == other.terms and self.offset == other.offset
        return NotImplemented

    def __hash__(self) -> int:
        if not self.terms:
            return hash(self.offset)
        return hash((self.terms, self.offset))

    def __str__(self) -> str:
        pieces = []
        for name, coeff in self.terms:
            if coeff == 1:
                pieces.append(f"+ {name}")
            elif coeff == -1:
                pieces.append(f"- {name}")
            elif coeff < 0:
                pieces.append(f"- {-coeff}*{name}")
            else:
                pieces.append(f"+ {coeff}*{name}")
        if self.offset or not pieces:
            sign = "-" if self.offset < 0 else "+"
            pieces.append(f"{sign} {abs(self.offset)}")
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"AffineForm({str(self)!r})"


def as_form(value: AffineForm | Scalar) -> AffineForm:
    """Coerce a number or form to a form."""
    if isinstance(value, AffineForm):
        return value
    return AffineForm.constant(value)


def simplify(value: AffineForm | Scalar) -> AffineForm | int | Fraction:
    """Collapse constant forms and integral fractions to plain numbers."""
    if isinstance(value, AffineForm):
        if value.terms:
            return value
        value = value.offset
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def linear_sum(values: Iterable[AffineForm | Scalar]) -> AffineForm | int | Fraction:
    """Sum numbers and forms, simplifying the result."""
    total: AffineForm | Scalar = 0
    for value in values:
        total = total + value
    return simplify(total)
