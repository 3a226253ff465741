# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Norms of the Higgs field components of a graded split model."""

from __future__ import annotations

import dataclasses
import itertools
from fractions import Fraction
from typing import Any

from higgs_census.chain_oracle.models import ChainModel
from higgs_census.exceptions import DomainError


@dataclasses.dataclass(frozen=True)
class NormSequence:
    """Squared norms of the components φᵢ : Uᵢ → Uᵢ₊₁ ⊗ K of a solution.

    Here U₀, U₁, ... are the weight levels of E in increasing order. The norms
    satisfy ‖φᵢ‖² = ‖φᵢ₋₁‖² + deg Uᵢ − μ(E) rk Uᵢ with nothing below the lowest
    level.

    Attributes:
        norms: ‖φᵢ‖² for each pair of consecutive levels.
        increments: deg Uᵢ − μ(E) rk Uᵢ for every level.
        top: The value the recursion gives past the highest level.
        feasible: Whether the norms are compatible with the model's arrows.
        reasons: Why the sequence is infeasible.
    """

    norms: tuple[Fraction, ...]
    increments: tuple[Fraction, ...]
    top: Fraction
    feasible: bool
    reasons: tuple[str, ...] = ()

    @property
    def vanishes(self) -> bool:
        """Whether every norm is zero, so that Φ = 0."""
        return all(n == 0 for n in self.norms)

    def _json_(self) -> dict[str, Any]:
        return {
            "norms": list(self.norms),
            "increments": list(self.increments),
            "top": self.top,
            "feasible": self.feasible,
            "reasons": list(self.reasons),
        }


def phi_norm_sequence(model: ChainModel) -> NormSequence:
    """Solve the norm recursion of the vortex equations on a graded model.

    Args:
        model: A graded model.

    Returns:
        The sequence. Infeasibility is reported, not raised: a norm must be
        positive exactly when some arrow joins the two levels, no norm may be
        negative, and the recursion must return to zero past the top level.

    Raises:
        DomainError: The model is ungraded.
    """
    if not model.is_graded:
        raise DomainError("The norm recursion needs a graded model.")
    total = model.cls
    mu = Fraction(int(total.degree), total.rank)
    weights = {s.index: s.weight for s in model.summands if s.weight is not None}
    ordered = sorted(model.summands, key=lambda s: weights[s.index])
    levels = [
        [s.index for s in group]
        for _, group in itertools.groupby(ordered, key=lambda s: weights[s.index])
    ]
    increments = []
    for level in levels:
        cls = model.class_of(level)
        increments.append(int(cls.degree) - mu * cls.rank)
    prefix = list(itertools.accumulate(increments))
    norms = tuple(prefix[:-1])
    top = prefix[-1]
    reasons = []
    for k, norm in enumerate(norms):
        joined = any(
            i in levels[k] and j in levels[k + 1] for i, j in model.arrows
        )
        if norm < 0:
            reasons.append(f"the norm between levels {k} and {k + 1} is {norm} < 0")
        elif norm > 0 and not joined:
            reasons.append(
                f"the norm between levels {k} and {k + 1} is {norm} but no arrow "
                "joins them"
            )
        elif norm == 0 and joined:
            reasons.append(
                f"an arrow joins levels {k} and {k + 1} but the norm there is 0"
            )
    if top != 0:
        reasons.append(f"the recursion ends at {top} instead of 0")
    return NormSequence(
        norms, tuple(increments), top, feasible=not reasons, reasons=tuple(reasons)
    )
