# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Census of local minima of the Hitchin function for SU(2,2) and Sp(4,ℝ)."""

from __future__ import annotations

import dataclasses
import logging
from typing import Any

from higgs_census.bundle_class import Curve
from higgs_census.exceptions import DomainError
from higgs_census.groups import GroupFamily, GroupType
from higgs_census.milnor_wood import bound
from higgs_census.minima.classify import Classification, Verdict, classify
from higgs_census.minima.types import FixedPointType, enumerate_types

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ReducibleFamily:
    """A family of minima that are direct sums of rank-2 Higgs bundles.

    These are not derived from the type analysis; they record the known
    classification of non-stable minima.

    Attributes:
        group: The group.
        d: The Toledo invariant.
        degrees: The Toledo invariants of the pieces, or (0,) when Φ = 0.
        higgs_field_nonzero: For each piece, whether its Higgs field may be
            nonzero.
        statement: A description of the family.
    """

    group: GroupType
    d: int
    degrees: tuple[int, ...]
    higgs_field_nonzero: tuple[bool, ...]
    statement: str

    def _json_(self) -> dict[str, Any]:
        return {
            "group": self.group.tag,
            "d": self.d,
            "degrees": list(self.degrees),
            "higgs_field_nonzero": list(self.higgs_field_nonzero),
            "statement": self.statement,
        }


def reducible_minima(group: GroupType, curve: Curve, d: int) -> list[ReducibleFamily]:
    """Return the families of reducible minima with Toledo invariant d.

    At d = 0 the minima with deg V = 0 have Φ = 0. Otherwise the reducible
    minima split E into two rank-2 pieces: V₁ ⊕ V₁′ and V₂ ⊕ V₂′ for SU(2,2),
    or L₁ ⊕ L₁⁻¹ and L₂ ⊕ L₂⁻¹ for Sp(4,ℝ). The pieces have Toledo invariants
    l₁ ≤ l₂ with 0 ≤ |lᵢ| ≤ g − 1, of the sign of d, summing to d, and a piece
    has nonzero Higgs field only when lᵢ ≠ 0.

    Raises:
        DomainError: The group is not SU(2,2) or Sp(4,ℝ), or |d| exceeds the
            Milnor–Wood bound.
    """
    if group not in (GroupType.su(2), GroupType.sp(2)):
        raise DomainError(
            f"Reducible minima are tabulated for rank 4 only. Got {group}."
        )
    top = bound(group.n, curve.genus)
    if abs(d) > top:
        raise DomainError(f"|d| must be at most {top}. Got d={d}.")
    if d == 0:
        blocks = "deg V = deg V' = 0" if group.family is GroupFamily.SU_NN else (
            "deg V = 0"
        )
        return [
            ReducibleFamily(
                group, 0, (0,), (False,), f"Phi = 0 and {blocks}; E is poly-stable"
            )
        ]
    piece = "V_i + V_i'" if group.family is GroupFamily.SU_NN else "L_i + L_i^-1"
    sign = 1 if d > 0 else -1
    families = []
    for l1 in range(curve.genus):
        l2 = abs(d) - l1
        if l1 <= l2 <= curve.genus - 1:
            degrees = (sign * l1, sign * l2)
            families.append(
                ReducibleFamily(
                    group,
                    d,
                    degrees,
                    tuple(degree != 0 for degree in degrees),
                    f"E = sum of two pieces {piece} with Toledo invariants "
                    f"{degrees[0]} and {degrees[1]}",
                )
            )
    return families


@dataclasses.dataclass(frozen=True)
class ExtremalMinimum:
    """A family of (1,1,1,1) minima of Sp(4,ℝ) at d = 2g − 2.

    V = L₁ ⊕ L₂ with deg L₁ = a and deg L₂ = 2g − 2 − a. The bundle
    W = L ⊕ L⁻¹ of the associated rank-2 orthogonal data has
    deg L = stratum_index, and the family is parametrized by a symmetric
    product of the curve of the given degree.
    """

    a: int
    b: int
    stratum_index: int
    symmetric_product_degree: int

    def _json_(self) -> dict[str, Any]:
        return dataclasses.asdict(self)


def sp_extremal_minima(curve: Curve) -> list[ExtremalMinimum]:
    """The Sp(4,ℝ) minima at d = 2g − 2 with split V, for g − 1 < a ≤ 3g − 3."""
    g = curve.genus
    families = []
    for a in range(g, 3 * g - 2):
        index = a - (g - 1)
        families.append(
            ExtremalMinimum(a, 2 * g - 2 - a, index, 4 * g - 4 - 2 * index)
        )
    return families


@dataclasses.dataclass(frozen=True)
class MinimaCensus:
    """The classified fixed-point types and reducible minima at one d.

    Attributes:
        group: The group.
        curve: The curve.
        d: The Toledo invariant.
        entries: Each enumerated type with its classification.
        reducible: The reducible minima families.
    """

    group: GroupType
    curve: Curve
    d: int
    entries: tuple[tuple[FixedPointType, Classification], ...]
    reducible: tuple[ReducibleFamily, ...]

    @property
    def minimum_types(self) -> tuple[FixedPointType, ...]:
        """The types containing stable minima."""
        return tuple(
            t for t, c in self.entries if c.verdict is Verdict.MINIMUM_FEASIBLE
        )

    @property
    def needs_review(self) -> tuple[FixedPointType, ...]:
        return tuple(t for t, _ in self.entries if t.needs_review)

    def rows(self) -> list[dict[str, Any]]:
        """One flat record per type, sorted by rank vector, for tabular output."""
        return [
            {
                "group": self.group.tag,
                "genus": self.curve.genus,
                "d": self.d,
                "type": t.label,
                "rank_vector": ",".join(map(str, t.rank_vector)),
                "verdict": c.verdict.value,
                "index": str(c.index) if c.index is not None else "",
                "witness": ",".join(
                    f"{k}={v}" for k, v in sorted((c.witness or {}).items())
                ),
                "needs_review": t.needs_review,
            }
            for t, c in sorted(
                self.entries, key=lambda e: (e[0].rank_vector, e[0].label)
            )
        ]

    def _json_(self) -> dict[str, Any]:
        return {
            "group": self.group.tag,
            "genus": self.curve.genus,
            "d": self.d,
            "types": [
                {"type": t._json_(), "classification": c._json_()}
                for t, c in self.entries
            ],
            "minimum_types": [t.label for t in self.minimum_types],
            "reducible": [f._json_() for f in self.reducible],
        }


def minima_census_for_degree(group: GroupType, curve: Curve, d: int) -> MinimaCensus:
    """Classify every fixed-point type at one Toledo invariant."""
    entries = tuple((t, classify(t)) for t in enumerate_types(group, curve, d))
    census = MinimaCensus(
        group, curve, d, entries, tuple(reducible_minima(group, curve, d))
    )
    logger.debug(
        "%s, g=%d, d=%d: %d types, %d with minima",
        group,
        curve.genus,
        d,
        len(entries),
        len(census.minimum_types),
    )
    return census


def minima_census(group: GroupType, curve: Curve) -> tuple[MinimaCensus, ...]:
    """Classify minima for every d in the Milnor–Wood range, in increasing d."""
    top = bound(group.n, curve.genus)
    return tuple(
        minima_census_for_degree(group, curve, d) for d in range(-top, top + 1)
    )
