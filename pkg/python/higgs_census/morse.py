# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Morse indices of circle-action fixed points."""

from __future__ import annotations

from typing import Any, NamedTuple

from higgs_census.bundle_class import Curve, Degree
from higgs_census.exceptions import DomainError, InvariantViolationError
from higgs_census.graded import GradedAdjoint
from higgs_census.groups import GroupType
from higgs_census.linalg import linear_sum, simplify

SMOOTHNESS_ASSUMPTIONS = (
    "H0 of the deformation complex vanishes",
    "H2 of the deformation complex vanishes",
)


class MorseContribution(NamedTuple):
    """The contribution of one weight k ≥ 2 to the Morse index."""

    k: int
    rank_term: int
    degree_term: Degree

    @property
    def total(self) -> Degree:
        return simplify(self.rank_term + self.degree_term)  # type: ignore[return-value]


class MorseReport(NamedTuple):
    """The Morse index of a fixed point.

    Attributes:
        index: The index, an integer or an affine form in degree variables.
        contributions: The contribution of each weight k ≥ 2 with U_k ≠ 0.
        assumptions: Hypotheses under which the index equals the dimension of
            the negative-weight part of the tangent space.
    """

    index: Degree
    contributions: tuple[MorseContribution, ...]
    assumptions: tuple[str, ...] = SMOOTHNESS_ASSUMPTIONS

    @property
    def minimum_candidate(self) -> bool:
        """Whether the index vanishes identically."""
        return self.index == 0

    def _json_(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "minimum_candidate": self.minimum_candidate,
            "contributions": [
                {"k": c.k, "rank_term": c.rank_term, "degree_term": c.degree_term}
                for c in self.contributions
            ],
            "assumptions": list(self.assumptions),
        }


def morse_index(adjoint: GradedAdjoint, curve: Curve) -> MorseReport:
    """Compute the Morse index of a fixed point by Riemann–Roch.

    The index is the sum over k ≥ 2 of (g − 1) rk U_k, plus deg U_k for odd k
    and minus deg U_k for even k. Degrees may be symbolic, in which case the
    index is an affine form in the degree variables.

    Args:
        adjoint: The graded adjoint bundle.
        curve: The curve.

    Returns:
        The Morse report.
    """
    g = curve.genus
    contributions = []
    for k, u in adjoint.entries.items():
        if k < 2:
            continue
        sign = 1 if k % 2 else -1
        contributions.append(
            MorseContribution(k, (g - 1) * u.rank, simplify(sign * u.degree))
        )
    index = linear_sum(c.total for c in contributions)
    return MorseReport(index, tuple(contributions))  # type: ignore[arg-type]


class LaumonResult(NamedTuple):
    """Computed and expected half-dimension of the moduli space."""

    computed: Degree
    expected: int

    @property
    def passed(self) -> bool:
        return self.computed == self.expected

    def _json_(self) -> dict[str, Any]:
        return {
            "computed": self.computed,
            "expected": self.expected,
            "passed": self.passed,
        }


def laumon_halfdim(
    adjoint: GradedAdjoint, curve: Curve, group: GroupType
) -> LaumonResult:
    """Compute the dimension of the downward flow of a fixed point.

    The dimension is (g − 1)(rk U_0 + 2 Σ_{m ≥ 1} rk U_m) − deg U_0. For a
    complex group it must equal half the dimension of the moduli space, which
    makes the nilpotent cone Lagrangian.

    Args:
        adjoint: The graded adjoint bundle.
        curve: The curve.
        group: A complex group.

    Returns:
        The computed and expected values.

    Raises:
        DomainError: The group is a real form.
        InvariantViolationError: deg U_0 is nonzero or the U_k have the wrong
            total rank.
    """
    if not group.is_complex:
        raise DomainError(
            f"The half-dimension check needs a complex group. Got {group}."
        )
    u0 = adjoint[0]
    if u0.degree != 0:
        raise InvariantViolationError(f"deg U_0 must vanish. Got {u0.degree}.")
    rank = u0.rank + 2 * sum(u.rank for k, u in adjoint.entries.items() if k >= 1)
    if rank != group.dim_g:
        raise InvariantViolationError(
            f"rk U_0 + 2 Σ rk U_m must equal {group.dim_g}. Got {rank}."
        )
    g = curve.genus
    computed = simplify((g - 1) * rank - u0.degree)
    expected = moduli_dim(group, curve) // 2
    return LaumonResult(computed, expected)  # type: ignore[arg-type]


def moduli_dim(group: GroupType, curve: Curve) -> int:
    """Return the complex dimension of the moduli space of Higgs bundles.

    This is dim g_ℂ (g − 1) for the real forms and twice that for complex
    groups.
    """
    dim = group.dim_g * (curve.genus - 1)
    return 2 * dim if group.is_complex else dim
