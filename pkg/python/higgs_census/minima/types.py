# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Fixed-point types of rank-4 Higgs bundles and their degree constraints."""

from __future__ import annotations

import dataclasses
import itertools
from collections.abc import Iterator, Mapping, Sequence
from fractions import Fraction
from typing import Any

from higgs_census.bundle_class import BundleClass, Curve, Degree
from higgs_census.chain_oracle import closed_subsets, connected_components
from higgs_census.exceptions import DomainError, InvariantViolationError
from higgs_census.graded import (
    Block,
    GradedBundle,
    GradedSummand,
    Weight,
    compositions,
    degree_variable,
    trace_free_weights,
)
from higgs_census.groups import GroupFamily, GroupType
from higgs_census.linalg import LinearConstraint, ge, le, linear_sum, lt
from higgs_census.milnor_wood import bound

Shape = tuple[tuple[Weight, Block, int], ...]

_HALF_STEPS = tuple(Weight.from_twice(k) for k in range(-3, 4))


def _canonical(entries) -> Shape:
    return tuple(sorted(entries, key=lambda e: (e[0], e[1].value, e[2])))


@dataclasses.dataclass(frozen=True)
class FixedPointType:
    """A candidate fixed point of the circle action with symbolic degrees.

    Attributes:
        group: SU(2,2) or Sp(4,ℝ).
        curve: The curve.
        d: The Toledo invariant deg V.
        bundle: The graded bundle. Summand degrees are affine forms in integer
            variables; the constraints deg V = d and deg E = 0 are solved.
        arrows: Pairs of positions in ``summands`` between which Φ may be
            nonzero: the weight goes up by 1 and the block changes.
        constraints: Necessary conditions on the degrees for a stable Higgs
            bundle of this type with every allowed component of Φ nonzero.
        impossibility_reason: Why no Higgs bundle has this type, if none does.
        needs_review: Whether the type was excluded by a rule this package
            infers rather than by a case analysis it reproduces.
    """

    group: GroupType
    curve: Curve
    d: int
    bundle: GradedBundle
    arrows: tuple[tuple[int, int], ...]
    constraints: tuple[LinearConstraint, ...]
    impossibility_reason: str | None = None
    needs_review: bool = False

    @property
    def summands(self) -> tuple[GradedSummand, ...]:
        """The summands of E, sorted by weight."""
        return self.bundle.full_summands()

    @property
    def admissible(self) -> bool:
        return self.impossibility_reason is None

    @property
    def rank_vector(self) -> tuple[int, ...]:
        """The ranks of the weight levels of E in increasing weight."""
        return tuple(
            sum(s.cls.rank for s in level) for _, level in self.bundle.levels()
        )

    @property
    def weights(self) -> tuple[Weight, ...]:
        return tuple(weight for weight, _ in self.bundle.levels())

    @property
    def shape(self) -> Shape:
        """The weights, blocks and ranks of the summands of E."""
        return _canonical((s.weight, s.block, s.cls.rank) for s in self.summands)

    def dual_shape(self) -> Shape:
        """The shape with the two blocks exchanged, which lives at Toledo invariant −d.

        For Sp(4,ℝ) this is the shape of the dual bundle.
        """
        other = (
            Block.V_PRIME if self.group.family is GroupFamily.SU_NN else Block.V_DUAL
        )
        exchange = {Block.V: other, other: Block.V}
        return _canonical((w, exchange[b], r) for w, b, r in self.shape)

    @property
    def label(self) -> str:
        return " ".join(s.label for s in self.summands)

    @property
    def variables(self) -> tuple[str, ...]:
        names = set()
        for s in self.summands:
            if not isinstance(s.cls.degree, int):
                names.update(s.cls.degree.variables)
        return tuple(sorted(names))

    def components(self) -> dict[str, bool]:
        """Whether Φ has allowed components out of V (c) and into V (b)."""
        summands = self.summands
        return {
            "b": any(summands[j].block is Block.V for _, j in self.arrows),
            "c": any(summands[i].block is Block.V for i, _ in self.arrows),
        }

    def _json_(self) -> dict[str, Any]:
        return {
            "group": self.group.tag,
            "genus": self.curve.genus,
            "d": self.d,
            "label": self.label,
            "rank_vector": list(self.rank_vector),
            "summands": [s._json_() for s in self.summands],
            "arrows": [list(a) for a in self.arrows],
            "constraints": [
                {"label": c.label, "constraint": str(c)} for c in self.constraints
            ],
            "admissible": self.admissible,
            "impossibility_reason": self.impossibility_reason,
            "needs_review": self.needs_review,
        }


def _check_rank_four(group: GroupType) -> None:
    if group not in (GroupType.su(2), GroupType.sp(2)):
        raise DomainError(
            f"Fixed-point types are classified for SU(2,2) and Sp(4,R) only. "
            f"Got {group}."
        )


def _su_shapes(d: int) -> Iterator[Shape]:
    first, second = (Block.V, Block.V_PRIME) if d >= 0 else (Block.V_PRIME, Block.V)
    for rank_vector in compositions(4):
        if len(rank_vector) == 1:
            yield ((Weight(0), Block.V, 2), (Weight(0), Block.V_PRIME, 2))
            continue
        weights = trace_free_weights(rank_vector)
        alternating = tuple(
            first if k % 2 == 0 else second for k in range(len(rank_vector))
        )
        tails = itertools.product((first, second), repeat=len(rank_vector) - 1)
        candidates = itertools.chain([alternating], ((first, *t) for t in tails))
        for blocks in candidates:
            v_rank = sum(r for r, b in zip(rank_vector, blocks) if b is Block.V)
            if v_rank == 2:
                yield tuple(zip(weights, blocks, rank_vector))
                break


def _contiguous(weights: Sequence[Weight]) -> bool:
    distinct = sorted(set(weights))
    return all(b - a == 1 for a, b in zip(distinct, distinct[1:]))


def _sp_shapes() -> Iterator[Shape]:
    candidates: list[tuple[tuple[Weight, int], ...]] = [
        ((m, 2),) for m in _HALF_STEPS
    ]
    candidates += [((a, 1), (b, 1)) for a, b in itertools.combinations(_HALF_STEPS, 2)]
    for v_parts in candidates:
        weights = [w for w, _ in v_parts] + [-w for w, _ in v_parts]
        if _contiguous(weights):
            yield tuple((w, Block.V, r) for w, r in v_parts)


def _symbolic_bundle(
    group: GroupType, d: int, shape: Shape, validate: bool
) -> GradedBundle:
    stored = [
        (w, b, r) for w, b, r in shape if b in (Block.V, Block.V_PRIME)
    ]
    degrees: dict[int, Degree] = {}
    for block, total in ((Block.V, d), (Block.V_PRIME, -d)):
        positions = [k for k, (_, b, _) in enumerate(stored) if b is block]
        for k in positions[:-1]:
            w, b, _ = stored[k]
            degrees[k] = degree_variable(f"{b.value}[{w}]")
        if positions:
            rest = linear_sum(degrees[k] for k in positions[:-1])
            degrees[positions[-1]] = total - rest  # type: ignore[assignment, operator]
    summands = tuple(
        GradedSummand(w, BundleClass(r, degrees[k]), b)
        for k, (w, b, r) in enumerate(stored)
    )
    summands = tuple(sorted(summands, key=lambda s: (s.weight, s.block is not Block.V)))
    return GradedBundle(group, summands, validate=validate)


def allowed_arrows(summands: Sequence[GradedSummand]) -> tuple[tuple[int, int], ...]:
    """Pairs of summands in opposite blocks whose weights differ by exactly 1."""
    return tuple(
        (i, j)
        for (i, a), (j, b) in itertools.product(enumerate(summands), repeat=2)
        if b.weight - a.weight == 1 and a.block is not b.block
    )


def _degree(summands: Sequence[GradedSummand], positions) -> Degree:
    degree = linear_sum(summands[k].cls.degree for k in positions)
    return degree  # type: ignore[return-value]


def _constraints(
    group: GroupType,
    curve: Curve,
    d: int,
    summands: Sequence[GradedSummand],
    arrows: Sequence[tuple[int, int]],
) -> tuple[LinearConstraint, ...]:
    constraints = [
        le(abs(d), bound(group.n, curve.genus), "milnor-wood"),
    ]
    nodes = frozenset(range(len(summands)))
    for closed in closed_subsets(nodes, arrows):
        if closed and closed != nodes:
            label = "+".join(summands[k].label for k in sorted(closed))
            constraints.append(
                lt(_degree(summands, closed), 0, f"stability of {label}")
            )
    twist = 2 * curve.genus - 2
    for i, j in arrows:
        s, t = summands[i].cls, summands[j].cls
        constraints.append(
            ge(
                s.rank * t.degree - t.rank * s.degree + s.rank * t.rank * twist,
                0,
                f"nonzero map {summands[i].label} -> {summands[j].label} (x) K",
            )
        )
    return tuple(constraints)


def _build_type(
    group: GroupType, curve: Curve, d: int, shape: Shape
) -> FixedPointType:
    reason = None
    try:
        bundle = _symbolic_bundle(group, d, shape, validate=True)
    except InvariantViolationError as error:
        reason = str(error)
        bundle = _symbolic_bundle(group, d, shape, validate=False)
    summands = bundle.full_summands()
    arrows = allowed_arrows(summands)
    if reason is None and not bundle.is_trivially_graded():
        pieces = connected_components(range(len(summands)), arrows)
        if len(pieces) > 1:
            reason = f"the allowed Higgs field splits E into {len(pieces)} pieces"
    constraints = (
        _constraints(group, curve, d, summands, arrows) if reason is None else ()
    )
    return FixedPointType(
        group,
        curve,
        d,
        bundle,
        arrows,
        constraints,
        impossibility_reason=reason,
        needs_review=reason is not None and group.family is GroupFamily.SP_2N_R,
    )


def enumerate_types(group: GroupType, curve: Curve, d: int) -> list[FixedPointType]:
    """Enumerate the fixed-point types of SU(2,2) or Sp(4,ℝ) at Toledo invariant d.

    For SU(2,2) each rank vector of E gets one assignment of its weight levels
    to V and V′ with both blocks of rank 2, starting from V when d ≥ 0 and from
    V′ when d < 0: the alternating one if it exists, otherwise the first other
    one. Exchanging V and V′ carries the types at d to those at −d. For
    Sp(4,ℝ) every grading of V with contiguous weights on E is used. A type is
    impossible when its levels do not alternate between the blocks or the
    allowed components of Φ leave E decomposed; for Sp(4,ℝ) such types are
    flagged for review. The types are sorted by rank vector, then by label.

    Args:
        group: SU(2,2) or Sp(4,ℝ).
        curve: The curve.
        d: The Toledo invariant.

    Returns:
        The types, in a deterministic order.

    Raises:
        DomainError: The group is not of rank 4 or |d| exceeds the Milnor–Wood
            bound.
    """
    _check_rank_four(group)
    top = bound(group.n, curve.genus)
    if abs(d) > top:
        raise DomainError(f"|d| must be at most {top}. Got d={d}.")
    shapes = _su_shapes(d) if group.family is GroupFamily.SU_NN else _sp_shapes()
    types = [_build_type(group, curve, d, shape) for shape in shapes]
    return sorted(types, key=lambda t: (t.rank_vector, t.label))


def evaluate_degrees(
    t: FixedPointType, assignment: Mapping[str, int]
) -> list[int]:
    """The summand degrees of a type under an assignment of its variables."""
    degrees = []
    for s in t.summands:
        degree = s.cls.degree
        value = degree if isinstance(degree, int) else degree.evaluate(assignment)
        degrees.append(int(Fraction(value)))
    return degrees
