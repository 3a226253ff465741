# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Numerical classes of vector bundles on a curve."""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Union

from higgs_census.exceptions import DomainError, InvariantViolationError
from higgs_census.linalg import AffineForm, simplify

Degree = Union[int, AffineForm]


@dataclasses.dataclass(frozen=True)
class Curve:
    """A closed Riemann surface, recorded by its genus.

    Attributes:
        genus: The genus, at least 2.
    """

    genus: int

    def __post_init__(self):
        if self.genus < 2:
            raise DomainError(f"The genus must be at least 2. Got {self.genus}.")

    def _json_(self) -> dict:
        return {"genus": self.genus}


@dataclasses.dataclass(frozen=True)
class BundleClass:
    """The numerical class (rank, degree) of a vector bundle.

    The degree is normally an integer. It may also be an affine form in integer
    degree variables, which lets every formula in the package be evaluated
    symbolically.

    Attributes:
        rank: The rank, a nonnegative integer.
        degree: The degree.
    """

    rank: int
    degree: Degree = 0

    def __post_init__(self):
        degree = simplify(self.degree)
        if isinstance(degree, Fraction):
            raise InvariantViolationError(
                f"Degrees must be integers. Got {self.degree}."
            )
        object.__setattr__(self, "degree", degree)
        if self.rank < 0:
            raise InvariantViolationError(
                f"The rank must be nonnegative. Got {self.rank}."
            )
        if self.rank == 0 and self.degree != 0:
            raise InvariantViolationError(
                f"A class of rank 0 must have degree 0. Got degree {self.degree}."
            )

    @property
    def is_symbolic(self) -> bool:
        """Whether the degree depends on degree variables."""
        return isinstance(self.degree, AffineForm)

    def __add__(self, other: BundleClass) -> BundleClass:
        """Direct sum."""
        if not isinstance(other, BundleClass):
            return NotImplemented
        return BundleClass(self.rank + other.rank, self.degree + other.degree)

    def __mul__(self, multiplicity: int) -> BundleClass:
        """Direct sum of copies, or formal difference for negative multiplicity."""
        return BundleClass(self.rank * multiplicity, self.degree * multiplicity)

    __rmul__ = __mul__

    def evaluate(self, assignment) -> BundleClass:
        """Substitute integer values for the degree variables."""
        if not isinstance(self.degree, AffineForm):
            return self
        return BundleClass(self.rank, self.degree.evaluate(assignment))

    def __str__(self) -> str:
        return f"({self.rank}, {self.degree})"

    def _json_(self) -> dict:
        return {"rank": self.rank, "degree": self.degree}


ZERO = BundleClass(0, 0)


def direct_sum(*classes: BundleClass) -> BundleClass:
    """Return the class of a direct sum."""
    total = ZERO
    for cls in classes:
        total = total + cls
    return total


def slope(e: BundleClass) -> Fraction | AffineForm:
    """Return the slope degree/rank as an exact rational.

    Raises:
        DomainError: The class has rank zero.
    """
    if e.rank < 1:
        raise DomainError("The slope of a zero-rank class is undefined.")
    if isinstance(e.degree, AffineForm):
        return e.degree * Fraction(1, e.rank)
    return Fraction(e.degree, e.rank)


def dual(e: BundleClass) -> BundleClass:
    """Return the class of the dual bundle."""
    return BundleClass(e.rank, -e.degree)


def tensor(e: BundleClass, f: BundleClass) -> BundleClass:
    """Return the class of a tensor product."""
    return BundleClass(e.rank * f.rank, e.rank * f.degree + f.rank * e.degree)


def hom(e: BundleClass, f: BundleClass) -> BundleClass:
    """Return the class of Hom(e, f) = e* ⊗ f."""
    return tensor(dual(e), f)


def det(e: BundleClass) -> BundleClass:
    """Return the class of the determinant line bundle."""
    return BundleClass(1, e.degree)


def sym2(e: BundleClass) -> BundleClass:
    """Return the class of the symmetric square.

    For rank n this is rank n(n+1)/2 and degree (n+1) deg(e).
    """
    n = e.rank
    return BundleClass(n * (n + 1) // 2, (n + 1) * e.degree)


def line_power(line: BundleClass, k: int) -> BundleClass:
    """Return the class of the k-th tensor power of a line bundle."""
    if line.rank != 1:
        raise DomainError(f"Expected a line bundle class. Got rank {line.rank}.")
    return BundleClass(1, k * line.degree)


def canonical(curve: Curve) -> BundleClass:
    """Return the class of the canonical bundle K."""
    return BundleClass(1, 2 * curve.genus - 2)


def theta_characteristic(curve: Curve) -> BundleClass:
    """Return the class of a square root of K."""
    return BundleClass(1, curve.genus - 1)


def euler_char(e: BundleClass, curve: Curve) -> Degree:
    """Return the holomorphic Euler characteristic deg(e) + rk(e)(1 - g)."""
    return simplify(e.degree + e.rank * (1 - curve.genus))  # type: ignore[return-value]


def h0_line(e: BundleClass, curve: Curve) -> int:
    """Return h⁰ of a line bundle when its numerical class determines it.

    The value is determined for negative degree, for degree above 2g − 2 (where
    h¹ vanishes), and for the trivial and canonical classes, whose values are
    1 and g.

    Raises:
        DomainError: The class is not a line bundle class, or its degree lies in
            [0, 2g − 2] without being 0 or 2g − 2.
    """
    if e.rank != 1 or isinstance(e.degree, AffineForm):
        raise DomainError(
            f"h0 is only determined for numerical line bundle classes. Got {e}."
        )
    g = curve.genus
    d = e.degree
    if d < 0:
        return 0
    if d > 2 * g - 2:
        return d + 1 - g
    if d == 0:
        return 1
    if d == 2 * g - 2:
        return g
    raise DomainError(
        f"h0 of a degree {d} line bundle on a genus {g} curve is not determined "
        "by its numerical class."
    )
