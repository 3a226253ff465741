# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Slope stability of split Higgs bundles and Q-bundles."""

from __future__ import annotations

import dataclasses
import enum
import itertools
from collections.abc import Callable, Iterator, Mapping, Sequence
from fractions import Fraction
from typing import Any, Optional

from higgs_census.bundle_class import ZERO, BundleClass
from higgs_census.chain_oracle.models import (
    RESTRICTION_NOTE,
    Arrow,
    ChainModel,
    QBundleModel,
    SplitSummand,
    SubObject,
    closed_subsets,
    connected_components,
)

OppositeTest = Optional[Callable[[SplitSummand, SplitSummand], bool]]


class StabilityStatus(enum.Enum):
    """The stability status of a model."""

    STABLE = "stable"
    """Every proper sub-object has smaller slope."""

    POLY_STABLE = "poly-stable"
    """A direct sum of stable models of equal slope."""

    SEMISTABLE = "semistable"
    """Some sub-object has equal slope and the model does not split."""

    UNSTABLE = "unstable"
    """Some sub-object has larger slope."""


@dataclasses.dataclass(frozen=True)
class StabilityResult:
    """The outcome of a stability check.

    Attributes:
        status: The status.
        witness: A sub-object of maximal slope, when the model is not stable.
        components: The stable pieces of a poly-stable model.
        note: The class of sub-objects examined.
    """

    status: StabilityStatus
    witness: SubObject | None = None
    components: tuple[frozenset[int], ...] = ()
    note: str = RESTRICTION_NOTE

    @property
    def stable(self) -> bool:
        return self.status is StabilityStatus.STABLE

    def _json_(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "stable": self.stable,
            "witness": self.witness._json_() if self.witness is not None else None,
            "components": [sorted(c) for c in self.components],
            "note": self.note,
        }


def _class_of(summands: Mapping[int, SplitSummand], nodes) -> BundleClass:
    return sum((summands[i].cls for i in nodes), ZERO)


def _slope(cls: BundleClass) -> Fraction:
    return Fraction(int(cls.degree), cls.rank)


def _matchings(pairs: Sequence[Arrow]) -> Iterator[tuple[Arrow, ...]]:
    """Yield the sets of pairwise disjoint pairs, the empty set first."""
    if not pairs:
        yield ()
        return
    first, rest = pairs[0], pairs[1:]
    yield from _matchings(rest)
    remaining = [p for p in rest if not set(p) & set(first)]
    for matching in _matchings(remaining):
        yield (first, *matching)


def _subobjects(
    summands: Mapping[int, SplitSummand],
    arrows: frozenset[Arrow],
    nodes: frozenset[int],
    opposite: OppositeTest,
) -> Iterator[SubObject]:
    local = frozenset((i, j) for i, j in arrows if i in nodes and j in nodes)
    targets = {i: frozenset(j for a, j in local if a == i) for i in nodes}
    for closed in closed_subsets(nodes, local):
        if closed == nodes:
            continue
        base = _class_of(summands, closed)
        candidates: list[Arrow] = []
        if opposite is not None:
            outside = sorted(nodes - closed)
            for a, b in itertools.combinations(outside, 2):
                sa, sb = summands[a], summands[b]
                if (
                    sa.rank == sb.rank
                    and opposite(sa, sb)
                    and targets[a] <= closed
                    and targets[b] <= closed
                ):
                    candidates.append((a, b))
        for matching in _matchings(candidates):
            if not closed and not matching:
                continue
            cls = base
            for a, b in matching:
                sa, sb = summands[a], summands[b]
                cls = cls + BundleClass(sa.rank, min(sa.degree, sb.degree))
            yield SubObject(closed, frozenset(matching), cls)


def _classify(
    summands: Mapping[int, SplitSummand],
    arrows: frozenset[Arrow],
    nodes: frozenset[int],
    opposite: OppositeTest,
) -> StabilityResult:
    mu = _slope(_class_of(summands, nodes))
    witness = None
    best = None
    for sub in _subobjects(summands, arrows, nodes, opposite):
        value = _slope(sub.cls)
        if best is None or value > best:
            witness, best = sub, value
    if best is None or best < mu:
        return StabilityResult(StabilityStatus.STABLE)
    if best > mu:
        return StabilityResult(StabilityStatus.UNSTABLE, witness)
    local = [(i, j) for i, j in arrows if i in nodes and j in nodes]
    components = connected_components(nodes, local)
    if len(components) > 1 and all(
        _slope(_class_of(summands, c)) == mu
        and _classify(summands, arrows, c, opposite).stable
        for c in components
    ):
        return StabilityResult(
            StabilityStatus.POLY_STABLE, witness, tuple(components)
        )
    return StabilityResult(StabilityStatus.SEMISTABLE, witness)


def enumerate_subobjects(
    model: ChainModel, *, diagonals: bool = True
) -> list[SubObject]:
    """Enumerate the proper nonzero Φ-invariant sub-objects of a model.

    These are the sums of a set S of summands closed under the arrows, plus,
    if requested, diagonals in pairs (a, b) of equal-rank summands in opposite
    blocks that lie outside S and whose arrows land in S. The pairs of a
    sub-object are disjoint and a diagonal of rank r has degree at most
    min(deg a, deg b), which is the degree used.

    Args:
        model: The model.
        diagonals: Whether to include diagonal sub-objects.

    Returns:
        The sub-objects in a canonical order.
    """
    opposite = model.opposite if diagonals and model.group.is_two_block else None
    return list(
        _subobjects(
            model.by_index, model.arrows, frozenset(model.indices), opposite
        )
    )


def invariant_subobjects(model: ChainModel) -> list[BundleClass]:
    """Return the classes of the proper nonzero sums of summands closed under Φ.

    Classes are deduplicated and listed in order of first appearance.
    """
    classes: dict[BundleClass, None] = {}
    for sub in enumerate_subobjects(model, diagonals=False):
        classes.setdefault(sub.cls)
    return list(classes)


def is_stable_higgs(model: ChainModel) -> StabilityResult:
    """Check the slope stability of a split Higgs bundle.

    The model is stable if every proper nonzero Φ-invariant sub-object, split or
    diagonal, has slope less than μ(E). At equality the model is poly-stable when
    the connected components of its arrow graph are stable of slope μ(E).

    Returns:
        The result. ``witness`` is a sub-object of maximal slope.
    """
    opposite = model.opposite if model.group.is_two_block else None
    return _classify(model.by_index, model.arrows, frozenset(model.indices), opposite)


def is_stable_q(q: QBundleModel) -> StabilityResult:
    """Check the stability of a split Q-bundle with τ₁ = τ₂ = μ(E).

    With this choice of parameters the condition reads μ(F) < μ(E) for every
    proper nonzero Q-sub-bundle, i.e. every sum of summands closed under both
    arrow families.
    """
    summands = {s.index: s for s in q.summands}
    return _classify(summands, q.arrows, frozenset(summands), None)


def tau_stability_value(
    q: QBundleModel,
    subset: frozenset[int],
    tau1: Fraction | int,
    tau2: Fraction | int,
) -> Fraction:
    """Return Σᵢ (deg Fᵢ − τᵢ rk Fᵢ) for the Q-sub-bundle given by a subset.

    The Q-sub-bundle is stable-compatible when this is negative.
    """
    value = Fraction(0)
    for s in q.first:
        if s.index in subset:
            value += s.degree - Fraction(tau1) * s.rank
    for s in q.second:
        if s.index in subset:
            value += s.degree - Fraction(tau2) * s.rank
    return value
