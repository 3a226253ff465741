# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Deciding whether a fixed-point type contains stable local minima."""

from __future__ import annotations

import dataclasses
import enum
import logging
from collections.abc import Mapping
from typing import Any

from higgs_census.bundle_class import Degree
from higgs_census.chain_oracle import ChainModel, SplitSummand, is_stable_higgs
from higgs_census.graded import adjoint_decomposition
from higgs_census.linalg import (
    FeasibilityStatus,
    brute_force_feasibility,
    eq,
    integer_feasibility,
    le,
)
from higgs_census.minima.types import FixedPointType, evaluate_degrees
from higgs_census.morse import morse_index

logger = logging.getLogger(__name__)


class Verdict(enum.Enum):
    """The classification of a fixed-point type."""

    MINIMUM_FEASIBLE = "minimum-feasible"
    """Some admissible degree assignment has Morse index 0."""

    NEVER_MINIMUM = "never-minimum"
    """No admissible degree assignment has Morse index 0."""

    TYPE_IMPOSSIBLE = "type-impossible"
    """No Higgs bundle has this type."""

    NEEDS_BOUND = "needs-bound"
    """The search box is unbounded and no explicit bound was given."""


@dataclasses.dataclass(frozen=True)
class Classification:
    """The verdict on a fixed-point type.

    Attributes:
        verdict: The verdict.
        index: The Morse index as an affine form in the degree variables.
        witness: A degree assignment with index 0, for feasible types.
        certificate: Labels of the constraints that rule out index 0, when
            elimination alone found the contradiction.
        negative_index_reachable: Whether the constraints allow a negative
            index, which would contradict the smoothness assumptions. None if
            undecided.
        reason: Why the type is impossible.
    """

    verdict: Verdict
    index: Degree | None = None
    witness: dict[str, int] | None = None
    certificate: tuple[str, ...] = ()
    negative_index_reachable: bool | None = None
    reason: str | None = None

    def _json_(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "index": self.index,
            "witness": self.witness,
            "certificate": list(self.certificate),
            "negative_index_reachable": self.negative_index_reachable,
            "reason": self.reason,
        }


def type_index(t: FixedPointType) -> Degree:
    """The Morse index of a type as an affine function of its degree variables."""
    return morse_index(adjoint_decomposition(t.bundle), t.curve).index


def classify(
    t: FixedPointType, *, bounds: Mapping[str, tuple[int, int]] | None = None
) -> Classification:
    """Decide whether a type can contain a stable Higgs bundle of Morse index 0.

    The index is conjoined with the type's constraints and integer feasibility
    is decided by Fourier–Motzkin elimination followed by an integer search.

    Args:
        t: The type.
        bounds: Optional explicit bounds on the degree variables.

    Returns:
        The classification. An unbounded search gives ``NEEDS_BOUND`` rather
        than a truncated answer.
    """
    if not t.admissible:
        return Classification(Verdict.TYPE_IMPOSSIBLE, reason=t.impossibility_reason)
    index = type_index(t)
    result = integer_feasibility(
        [*t.constraints, eq(index, 0, "morse index vanishes")], bounds=bounds
    )
    negative = integer_feasibility(
        [*t.constraints, le(index, -1, "morse index negative")], bounds=bounds
    )
    negative_reachable = (
        None
        if negative.status is FeasibilityStatus.NEEDS_BOUND
        else negative.feasible
    )
    if result.status is FeasibilityStatus.NEEDS_BOUND:
        verdict = Verdict.NEEDS_BOUND
    elif result.feasible:
        verdict = Verdict.MINIMUM_FEASIBLE
    else:
        verdict = Verdict.NEVER_MINIMUM
    logger.debug("%s %s at d=%d: %s", t.group, t.label, t.d, verdict.value)
    return Classification(
        verdict,
        index=index,
        witness=result.witness,
        certificate=result.certificate,
        negative_index_reachable=negative_reachable,
    )


def witness_model(t: FixedPointType, assignment: Mapping[str, int]) -> ChainModel:
    """Build the split model of a type at a degree assignment.

    Every allowed component of Φ is taken to be nonzero.
    """
    degrees = evaluate_degrees(t, assignment)
    summands = tuple(
        SplitSummand(k, degree, s.block, s.weight, s.cls.rank)
        for k, (s, degree) in enumerate(zip(t.summands, degrees))
    )
    return ChainModel(t.curve, t.group, summands, frozenset(t.arrows))


def verify_witness(t: FixedPointType, assignment: Mapping[str, int]) -> bool:
    """Check a witness with the stability oracle and the index formula."""
    index = type_index(t)
    value = index if isinstance(index, int) else index.evaluate(assignment)
    return value == 0 and is_stable_higgs(witness_model(t, assignment)).stable


def brute_force_minimum_feasible(t: FixedPointType, radius: int) -> bool | None:
    """Search the box |x| ≤ radius for a degree assignment with index 0.

    Returns:
        Whether one exists, or None for impossible types.
    """
    if not t.admissible:
        return None
    index = type_index(t)
    box = {name: (-radius, radius) for name in t.variables}
    point = brute_force_feasibility([*t.constraints, eq(index, 0)], box)
    return point is not None
