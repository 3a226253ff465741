# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Fully split models of Higgs bundles and of Q-bundles."""

from __future__ import annotations

import dataclasses
import functools
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import InitVar
from fractions import Fraction
from typing import Any

from higgs_census.bundle_class import ZERO, BundleClass, Curve
from higgs_census.exceptions import InvariantViolationError
from higgs_census.graded import Block, Weight
from higgs_census.groups import GroupFamily, GroupType

Arrow = tuple[int, int]

RESTRICTION_NOTE = (
    "Only sub-objects built from summands and diagonals between equal-rank "
    "summands of opposite blocks are considered."
)

_OPPOSITE = {
    GroupFamily.SU_NN: {Block.V: Block.V_PRIME, Block.V_PRIME: Block.V},
    GroupFamily.SP_2N_R: {Block.V: Block.V_DUAL, Block.V_DUAL: Block.V},
}


@dataclasses.dataclass(frozen=True)
class SplitSummand:
    """One summand of a split model.

    Attributes:
        index: An identifier, unique within the model.
        degree: The degree.
        block: The block, for the two-block groups.
        weight: The weight, or None for ungraded models.
        rank: The rank. Summands of rank above 1 are treated as stable blocks.
    """

    index: int
    degree: int
    block: Block | None = None
    weight: Weight | None = None
    rank: int = 1

    def __post_init__(self):
        if self.rank < 1:
            raise InvariantViolationError(
                f"Summands must have positive rank. Got {self.rank}."
            )

    @property
    def cls(self) -> BundleClass:
        return BundleClass(self.rank, self.degree)

    @property
    def label(self) -> str:
        prefix = self.block.value if self.block is not None else "F"
        if self.weight is None:
            return f"{prefix}{self.index}"
        return f"{prefix}{self.index}[{self.weight}]"

    def _json_(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "index": self.index,
            "rank": self.rank,
            "degree": self.degree,
            "block": self.block.value if self.block is not None else None,
            "weight": str(self.weight) if self.weight is not None else None,
        }
        if self.weight is not None and self.weight.is_half_integral:
            data["twice_m"] = self.weight.twice_m
        return data

    @staticmethod
    def from_json_data(data: Mapping[str, Any]) -> SplitSummand:
        if data.get("weight") is not None:
            weight: Weight | None = Weight(Fraction(str(data["weight"])))
        elif data.get("twice_m") is not None:
            weight = Weight.from_twice(int(data["twice_m"]))
        else:
            weight = None
        block = data.get("block")
        return SplitSummand(
            index=int(data["index"]),
            degree=int(data["degree"]),
            block=Block(block) if block is not None else None,
            weight=weight,
            rank=int(data.get("rank", 1)),
        )


@dataclasses.dataclass(frozen=True)
class ChainModel:
    """A Higgs bundle E = ⊕ summands with Φ recorded by its nonzero components.

    An arrow (i, j) means the component of Φ from summand i to summand j ⊗ K is
    nonzero. In a graded model every arrow raises the weight by exactly 1.

    Attributes:
        curve: The curve.
        group: The group.
        summands: The summands, sorted by index.
        arrows: The arrows.
    """

    curve: Curve
    group: GroupType
    summands: tuple[SplitSummand, ...]
    arrows: frozenset[Arrow] = frozenset()
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        object.__setattr__(
            self, "summands", tuple(sorted(self.summands, key=lambda s: s.index))
        )
        object.__setattr__(self, "arrows", frozenset(map(tuple, self.arrows)))
        if validate:
            self._validate()

    @functools.cached_property
    def by_index(self) -> dict[int, SplitSummand]:
        """The summands keyed by index."""
        return {s.index: s for s in self.summands}

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(s.index for s in self.summands)

    @property
    def is_graded(self) -> bool:
        """Whether the summands carry weights."""
        return bool(self.summands) and self.summands[0].weight is not None

    @property
    def cls(self) -> BundleClass:
        """The class of E."""
        return sum((s.cls for s in self.summands), ZERO)

    def class_of(self, indices: Iterable[int]) -> BundleClass:
        """The class of the sum of some summands."""
        return sum((self.by_index[i].cls for i in indices), ZERO)

    def targets(self, index: int) -> frozenset[int]:
        """The targets of the arrows leaving a summand."""
        return frozenset(j for i, j in self.arrows if i == index)

    def opposite(self, a: SplitSummand, b: SplitSummand) -> bool:
        """Whether two summands lie in opposite blocks."""
        table = _OPPOSITE.get(self.group.family)
        if table is None or a.block is None:
            return False
        return table.get(a.block) is b.block

    def _validate(self) -> None:
        indices = [s.index for s in self.summands]
        if len(set(indices)) != len(indices):
            raise InvariantViolationError("Summand indices must be unique.")
        rank = sum(s.rank for s in self.summands)
        if rank != self.group.rank_e:
            raise InvariantViolationError(
                f"E must have rank {self.group.rank_e} for {self.group}. Got {rank}."
            )
        graded = {s.weight is not None for s in self.summands}
        if len(graded) > 1:
            raise InvariantViolationError(
                "Either every summand carries a weight or none does."
            )
        family = self.group.family
        for s in self.summands:
            if family is GroupFamily.SL_N_C and s.block is not None:
                raise InvariantViolationError("SL(n,C) summands carry no block.")
            if family is not GroupFamily.SL_N_C and s.block not in _OPPOSITE[family]:
                raise InvariantViolationError(
                    f"Summand {s.index} has block {s.block} not allowed for "
                    f"{self.group}."
                )
        for i, j in self.arrows:
            if i not in self.by_index or j not in self.by_index or i == j:
                raise InvariantViolationError(f"Invalid arrow ({i}, {j}).")
            source, target = self.by_index[i], self.by_index[j]
            if (
                source.weight is not None
                and target.weight is not None
                and target.weight - source.weight != 1
            ):
                raise InvariantViolationError(
                    f"The arrow ({i}, {j}) does not raise the weight by 1."
                )
            if family is not GroupFamily.SL_N_C and not self.opposite(source, target):
                raise InvariantViolationError(
                    f"The arrow ({i}, {j}) does not change blocks."
                )
        if self.cls.degree != 0:
            raise InvariantViolationError(
                f"E must have degree 0. Got {self.cls.degree}."
            )
        if family is GroupFamily.SP_2N_R:
            self._validate_dual_pairs()

    def _validate_dual_pairs(self) -> None:
        def key(s: SplitSummand, sign: int) -> tuple:
            weight = None if s.weight is None else (sign * s.weight.value)
            return (s.rank, sign * s.degree, weight)

        v = Counter(key(s, 1) for s in self.summands if s.block is Block.V)
        v_dual = Counter(key(s, -1) for s in self.summands if s.block is Block.V_DUAL)
        if v != v_dual:
            raise InvariantViolationError("V* must be the dual of V.")

    def _json_(self) -> dict[str, Any]:
        return {
            "genus": self.curve.genus,
            "group": self.group.tag,
            "summands": [s._json_() for s in self.summands],
            "arrows": [list(a) for a in sorted(self.arrows)],
        }

    @staticmethod
    def from_json_data(data: Mapping[str, Any]) -> ChainModel:
        """Build a model from its JSON document."""
        return ChainModel(
            Curve(int(data["genus"])),
            GroupType.from_tag(data["group"]),
            tuple(SplitSummand.from_json_data(s) for s in data["summands"]),
            frozenset((int(i), int(j)) for i, j in data["arrows"]),
        )


@dataclasses.dataclass(frozen=True)
class QBundleModel:
    """A split Q-bundle over the two-vertex quiver with arrows both ways.

    Attributes:
        first: The summands at the first vertex.
        second: The summands at the second vertex.
        phi_21: Arrows from the first vertex to the second (twisted by K).
        phi_12: Arrows from the second vertex to the first (twisted by K).
    """

    first: tuple[SplitSummand, ...]
    second: tuple[SplitSummand, ...]
    phi_21: frozenset[Arrow] = frozenset()
    phi_12: frozenset[Arrow] = frozenset()
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        if validate:
            first = {s.index for s in self.first}
            second = {s.index for s in self.second}
            if first & second:
                raise InvariantViolationError("The two vertices share a summand.")
            for i, j in self.phi_21:
                if i not in first or j not in second:
                    raise InvariantViolationError(
                        f"({i}, {j}) does not go from the first vertex to the second."
                    )
            for i, j in self.phi_12:
                if i not in second or j not in first:
                    raise InvariantViolationError(
                        f"({i}, {j}) does not go from the second vertex to the first."
                    )

    @staticmethod
    def from_chain(model: ChainModel) -> QBundleModel:
        """Split a two-block model into its two vertices.

        The first vertex holds V and the second V′ or V*.
        """
        if not model.group.is_two_block:
            raise InvariantViolationError(f"{model.group} is not a two-block group.")
        first = tuple(s for s in model.summands if s.block is Block.V)
        second = tuple(s for s in model.summands if s.block is not Block.V)
        first_ids = {s.index for s in first}
        return QBundleModel(
            first,
            second,
            frozenset(a for a in model.arrows if a[0] in first_ids),
            frozenset(a for a in model.arrows if a[0] not in first_ids),
        )

    @property
    def summands(self) -> tuple[SplitSummand, ...]:
        return tuple(sorted(self.first + self.second, key=lambda s: s.index))

    @property
    def arrows(self) -> frozenset[Arrow]:
        return self.phi_21 | self.phi_12

    @property
    def cls(self) -> BundleClass:
        return sum((s.cls for s in self.summands), ZERO)


@dataclasses.dataclass(frozen=True)
class SubObject:
    """A sub-object of a split model.

    Attributes:
        summands: The summands contained entirely.
        diagonals: Pairs of summands (a, b) whose diagonal is contained.
        cls: The class of the sub-object.
    """

    summands: frozenset[int]
    diagonals: frozenset[Arrow]
    cls: BundleClass

    @property
    def is_split(self) -> bool:
        """Whether the sub-object is a sum of summands (a Q-sub-bundle)."""
        return not self.diagonals

    def describe(self) -> str:
        parts = [str(i) for i in sorted(self.summands)]
        parts += [f"diag({a},{b})" for a, b in sorted(self.diagonals)]
        return "{" + ", ".join(parts) + "}"

    def _json_(self) -> dict[str, Any]:
        return {
            "summands": sorted(self.summands),
            "diagonals": [list(d) for d in sorted(self.diagonals)],
            "rank": self.cls.rank,
            "degree": self.cls.degree,
        }


@functools.lru_cache(maxsize=4096)
def _closed_masks(n: int, successors: tuple[int, ...]) -> tuple[int, ...]:
    masks = []
    for mask in range(1 << n):
        if all(
            not (mask >> i) & 1 or successors[i] & ~mask == 0 for i in range(n)
        ):
            masks.append(mask)
    return tuple(masks)


def closed_subsets(
    nodes: Iterable[int], arrows: Iterable[Arrow]
) -> list[frozenset[int]]:
    """Return the subsets of nodes closed under following arrows.

    The empty set and the full set are included. Subsets are ordered by their
    bit masks over the sorted nodes.
    """
    ordered = sorted(nodes)
    position = {node: k for k, node in enumerate(ordered)}
    successors = [0] * len(ordered)
    for i, j in arrows:
        successors[position[i]] |= 1 << position[j]
    return [
        frozenset(
            node for k, node in enumerate(ordered) if (mask >> k) & 1
        )
        for mask in _closed_masks(len(ordered), tuple(successors))
    ]


def connected_components(
    nodes: Iterable[int], arrows: Iterable[Arrow]
) -> list[frozenset[int]]:
    """The connected components of the undirected arrow graph, sorted."""
    parent = {node: node for node in nodes}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in arrows:
        parent[find(i)] = find(j)
    components: dict[int, set[int]] = {}
    for node in parent:
        components.setdefault(find(node), set()).add(node)
    return sorted((frozenset(c) for c in components.values()), key=min)


def arrow_realizable(source: BundleClass, target: BundleClass, curve: Curve) -> bool:
    """Whether a nonzero map source → target ⊗ K of semistable bundles can exist.

    This needs μ(source) ≤ μ(target) + 2g − 2.
    """
    lhs = Fraction(int(source.degree), source.rank)
    rhs = Fraction(int(target.degree), target.rank) + 2 * curve.genus - 2
    return lhs <= rhs


def unrealizable_arrows(model: ChainModel) -> list[Arrow]:
    """The arrows of a model that no nonzero map between its summands can carry."""
    return [
        (i, j)
        for i, j in sorted(model.arrows)
        if not arrow_realizable(
            model.by_index[i].cls, model.by_index[j].cls, model.curve
        )
    ]
