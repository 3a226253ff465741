# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Graded bundles at fixed points of the circle action and their adjoint bundles."""

from __future__ import annotations

import dataclasses
import enum
import itertools
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import InitVar
from fractions import Fraction
from typing import Any

from higgs_census.bundle_class import (
    ZERO,
    BundleClass,
    Degree,
    dual,
    hom,
    sym2,
    tensor,
)
from higgs_census.exceptions import InvariantViolationError
from higgs_census.groups import GroupFamily, GroupType
from higgs_census.linalg import AffineForm, linear_sum


class Block(enum.Enum):
    """A block of the two-block decomposition of E."""

    V = "V"
    """The bundle V."""

    V_PRIME = "V'"
    """The bundle V′ of an SU(n,n)-Higgs bundle."""

    V_DUAL = "V*"
    """The dual V* of an Sp(2n,ℝ)-Higgs bundle."""


_BLOCK_ORDER = {None: 0, Block.V: 0, Block.V_PRIME: 1, Block.V_DUAL: 1}


@dataclasses.dataclass(frozen=True, order=True)
class Weight:
    """An eigenvalue m of the infinitesimal gauge transformation, ψ = i m.

    Weights are exact rationals. Gradings that occur for SU(n,n) and Sp(2n,ℝ)
    minima have half-integral weights, but trace-zero gradings in general need
    not, so 2m is exposed only when it is an integer.

    Attributes:
        value: The weight m.
    """

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    @staticmethod
    def from_twice(twice_m: int) -> Weight:
        """Return the weight m given 2m."""
        return Weight(Fraction(twice_m, 2))

    @property
    def twice_m(self) -> int:
        """The integer 2m.

        Raises:
            ValueError: 2m is not an integer.
        """
        twice = 2 * self.value
        if twice.denominator != 1:
            raise ValueError(f"The weight {self} is not half-integral.")
        return int(twice)

    @property
    def is_half_integral(self) -> bool:
        """Whether 2m is an integer."""
        return (2 * self.value).denominator == 1

    def __neg__(self) -> Weight:
        return Weight(-self.value)

    def __add__(self, shift: int | Fraction) -> Weight:
        return Weight(self.value + shift)

    def __sub__(self, other: Weight) -> Fraction:
        return self.value - other.value

    def __str__(self) -> str:
        return str(self.value)

    def _json_(self) -> str:
        return str(self.value)


@dataclasses.dataclass(frozen=True)
class GradedSummand:
    """A weight summand F_m of a graded bundle.

    Attributes:
        weight: The weight m.
        cls: The numerical class of F_m, of rank at least 1.
        block: The block containing F_m, for the two-block groups.
    """

    weight: Weight
    cls: BundleClass
    block: Block | None = None

    def __post_init__(self):
        if self.cls.rank < 1:
            raise InvariantViolationError(
                f"Weight summands must have positive rank. Got {self.cls}."
            )

    @property
    def label(self) -> str:
        """A short label such as ``V[-3/2]``."""
        prefix = self.block.value if self.block is not None else "F"
        return f"{prefix}[{self.weight}]"

    def _json_(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "weight": str(self.weight),
            "rank": self.cls.rank,
            "degree": self.cls.degree,
            "block": self.block.value if self.block is not None else None,
        }
        if self.weight.is_half_integral:
            data["twice_m"] = self.weight.twice_m
        return data


@dataclasses.dataclass(frozen=True)
class GradedBundle:
    """A fixed point of the circle action, E = ⊕ F_m.

    For SU(n,n) every summand carries a V or V′ tag. For Sp(2n,ℝ) only the
    summands of V are stored; the summand of V* at weight −m is the dual of the
    V summand at weight m and is derived by :meth:`full_summands`.

    Attributes:
        group: The group.
        summands: The stored summands, sorted by weight.
    """

    group: GroupType
    summands: tuple[GradedSummand, ...]
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        object.__setattr__(self, "summands", tuple(self.summands))
        if validate:
            self._validate()

    def full_summands(self) -> tuple[GradedSummand, ...]:
        """The summands of E, sorted by weight and block."""
        summands = list(self.summands)
        if self.group.family is GroupFamily.SP_2N_R:
            summands = [
                dataclasses.replace(s, block=Block.V) for s in self.summands
            ] + [
                GradedSummand(-s.weight, dual(s.cls), Block.V_DUAL)
                for s in self.summands
            ]
        return tuple(
            sorted(summands, key=lambda s: (s.weight, _BLOCK_ORDER[s.block]))
        )

    def levels(self) -> tuple[tuple[Weight, tuple[GradedSummand, ...]], ...]:
        """The summands of E grouped by weight."""
        return tuple(
            (weight, tuple(group))
            for weight, group in itertools.groupby(
                self.full_summands(), key=lambda s: s.weight
            )
        )

    @property
    def rank(self) -> int:
        """The rank of E."""
        return sum(s.cls.rank for s in self.full_summands())

    @property
    def degree(self) -> Degree:
        """The degree of E."""
        degree = linear_sum(s.cls.degree for s in self.full_summands())
        return degree  # type: ignore[return-value]

    def block_class(self, block: Block) -> BundleClass:
        """The class of one block of E."""
        total = ZERO
        for s in self.full_summands():
            if s.block is block:
                total = total + s.cls
        return total

    def is_trivially_graded(self) -> bool:
        """Whether every weight is zero, i.e. E = U_0 and Φ = 0."""
        return all(s.weight.value == 0 for s in self.summands)

    def dual(self) -> GradedBundle:
        """Negate all weights and dualize all classes.

        For SU(n,n) the V and V′ tags are kept; for Sp(2n,ℝ) the dual of V*
        becomes the new V. This realizes the isomorphism between the components
        with invariants d and −d.
        """
        summands = [
            GradedSummand(-s.weight, dual(s.cls), s.block) for s in self.summands
        ]
        summands.sort(key=lambda s: (s.weight, _BLOCK_ORDER[s.block]))
        return GradedBundle(self.group, tuple(summands))

    def evaluate(self, assignment: Mapping[str, int]) -> GradedBundle:
        """Substitute integer values for the degree variables."""
        return GradedBundle(
            self.group,
            tuple(
                dataclasses.replace(s, cls=s.cls.evaluate(assignment))
                for s in self.summands
            ),
        )

    def _validate(self) -> None:
        group = self.group
        if not self.summands:
            raise InvariantViolationError("A graded bundle needs at least one summand.")
        blocks = {s.block for s in self.summands}
        if group.family is GroupFamily.SU_NN:
            if not blocks <= {Block.V, Block.V_PRIME}:
                raise InvariantViolationError(
                    "SU(n,n) summands must be tagged V or V'."
                )
            for block in (Block.V, Block.V_PRIME):
                rank = sum(s.cls.rank for s in self.summands if s.block is block)
                if rank != group.n:
                    raise InvariantViolationError(
                        f"The block {block.value} must have rank {group.n}. "
                        f"Got {rank}."
                    )
        else:
            allowed = {None, Block.V} if group.is_two_block else {None}
            if not blocks <= allowed:
                raise InvariantViolationError(
                    f"Unexpected block tags for {group}: {sorted(map(str, blocks))}."
                )
            rank = sum(s.cls.rank for s in self.summands)
            if rank != group.n:
                raise InvariantViolationError(
                    f"The stored summands must have total rank {group.n}. Got {rank}."
                )

        weights = [s.weight for s in self.summands]
        if weights != sorted(weights):
            raise InvariantViolationError("Summands must be sorted by weight.")
        for block in blocks:
            in_block = [s.weight for s in self.summands if s.block is block]
            if len(set(in_block)) != len(in_block):
                raise InvariantViolationError(
                    "Weights must be strictly increasing within each block."
                )

        levels = self.levels()
        for (lower, _), (upper, _) in zip(levels, levels[1:]):
            if upper - lower != 1:
                raise InvariantViolationError(
                    f"Consecutive weights must differ by 1. Got {lower} and {upper}."
                )
        trace = sum(
            (s.weight.value * s.cls.rank for s in self.full_summands()), Fraction(0)
        )
        if trace != 0:
            raise InvariantViolationError(f"The grading is not trace-free: {trace}.")
        if self.degree != 0:
            raise InvariantViolationError(
                f"E must have degree 0. Got {self.degree}."
            )
        if group.is_two_block and len(levels) > 1:
            level_blocks = []
            for weight, level in levels:
                tags = {s.block for s in level}
                if len(tags) != 1:
                    raise InvariantViolationError(
                        f"The weight {weight} summand meets both blocks."
                    )
                level_blocks.append(tags.pop())
            for lower, upper in zip(level_blocks, level_blocks[1:]):
                if lower is upper:
                    raise InvariantViolationError(
                        "Blocks must alternate as the weight increases by 1."
                    )

    def _json_(self) -> dict[str, Any]:
        return {
            "group": self.group.tag,
            "summands": [s._json_() for s in self.summands],
        }

    @staticmethod
    def from_json_data(data: Mapping[str, Any]) -> GradedBundle:
        """Build a graded bundle from its JSON document.

        Each summand needs ``rank``, ``degree`` and either ``weight`` (an exact
        rational string) or ``twice_m``; two-block groups also need ``block``.
        """
        group = GroupType.from_tag(data["group"])
        summands = []
        for item in data["summands"]:
            if "weight" in item and item["weight"] is not None:
                weight = Weight(Fraction(str(item["weight"])))
            else:
                weight = Weight.from_twice(int(item["twice_m"]))
            block = item.get("block")
            summands.append(
                GradedSummand(
                    weight,
                    BundleClass(int(item["rank"]), int(item["degree"])),
                    Block(block) if block is not None else None,
                )
            )
        return GradedBundle(group, tuple(summands))


@dataclasses.dataclass(frozen=True)
class AdjointPiece:
    """One Hom, End or symmetric-square term of the adjoint bundle.

    Attributes:
        label: A description such as ``Hom(V[-3/2], V'[-1/2])``.
        weight: The integer weight k of the term.
        cls: Its numerical class.
        noncompact: Whether the term lies in the non-compact part.
        multiplicity: 1, or −1 for the trace deduction from U_0.
    """

    label: str
    weight: int
    cls: BundleClass
    noncompact: bool
    multiplicity: int = 1


def _sum_pieces(pieces: Sequence[AdjointPiece]) -> BundleClass:
    rank = sum(p.multiplicity * p.cls.rank for p in pieces)
    degree = linear_sum(p.multiplicity * p.cls.degree for p in pieces)
    return BundleClass(rank, degree)  # type: ignore[arg-type]


@dataclasses.dataclass(frozen=True)
class GradedAdjoint:
    """The weight decomposition Ad P_ℂ = ⊕ U_k.

    Attributes:
        group: The group.
        pieces: The terms whose sums give the U_k.
    """

    group: GroupType
    pieces: tuple[AdjointPiece, ...]

    def _entries(self, select) -> dict[int, BundleClass]:
        weights = sorted({p.weight for p in self.pieces})
        entries = {}
        for k in weights:
            cls = _sum_pieces([p for p in self.pieces if p.weight == k and select(p)])
            if cls.rank:
                entries[k] = cls
        return entries

    @property
    def entries(self) -> dict[int, BundleClass]:
        """The nonzero U_k, keyed by weight k."""
        return self._entries(lambda p: True)

    @property
    def compact(self) -> dict[int, BundleClass]:
        """The compact part of each U_k."""
        return self._entries(lambda p: not p.noncompact)

    @property
    def noncompact(self) -> dict[int, BundleClass]:
        """The non-compact part of each U_k."""
        return self._entries(lambda p: p.noncompact)

    def __getitem__(self, k: int) -> BundleClass:
        return self.entries.get(k, ZERO)

    @property
    def total(self) -> BundleClass:
        """The class of the whole adjoint bundle."""
        return _sum_pieces(self.pieces)

    def _json_(self) -> dict[str, Any]:
        return {
            "group": self.group.tag,
            "entries": [
                {"k": k, "rank": cls.rank, "degree": cls.degree}
                for k, cls in self.entries.items()
            ],
            "pieces": [
                {
                    "label": p.label,
                    "k": p.weight,
                    "rank": p.cls.rank,
                    "degree": p.cls.degree,
                    "noncompact": p.noncompact,
                    "multiplicity": p.multiplicity,
                }
                for p in self.pieces
            ],
        }


def _integer_weight(value: Fraction) -> int:
    if value.denominator != 1:
        raise InvariantViolationError(
            f"Adjoint weights must be integers. Got {value}."
        )
    return int(value)


def adjoint_decomposition(e: GradedBundle) -> GradedAdjoint:
    """Compute the weight decomposition of the adjoint bundle of a fixed point.

    For SU(n,n) and SL(n,ℂ), U_k is the sum of Hom(F_m, F_m′) over m′ − m = k,
    minus one trivial line in U_0 for the trace. For Sp(2n,ℝ) with
    V = ⊕ F_{m_i}, the adjoint bundle is End(V) ⊕ S²V ⊕ S²V*: End(V) contributes
    weights m_j − m_i, S²V contributes m_i + m_j for i ≤ j and S²V* the negatives.

    Args:
        e: The graded bundle.

    Returns:
        The graded adjoint bundle.

    Raises:
        InvariantViolationError: The grading is malformed.
    """
    pieces: list[AdjointPiece] = []
    if e.group.family is GroupFamily.SP_2N_R:
        stored = e.summands
        for s, t in itertools.product(stored, repeat=2):
            label = f"End(V[{s.weight}])" if s is t else (
                f"Hom(V[{s.weight}], V[{t.weight}])"
            )
            pieces.append(
                AdjointPiece(
                    label,
                    _integer_weight(t.weight - s.weight),
                    hom(s.cls, t.cls),
                    False,
                )
            )
        for (i, s), (j, t) in itertools.combinations_with_replacement(
            enumerate(stored), 2
        ):
            k = _integer_weight(s.weight.value + t.weight.value)
            if i == j:
                pieces.append(AdjointPiece(f"S2(V[{s.weight}])", k, sym2(s.cls), True))
                pieces.append(
                    AdjointPiece(f"S2(V*[{-s.weight}])", -k, sym2(dual(s.cls)), True)
                )
            else:
                pieces.append(
                    AdjointPiece(
                        f"V[{s.weight}] * V[{t.weight}]", k, tensor(s.cls, t.cls), True
                    )
                )
                pieces.append(
                    AdjointPiece(
                        f"V*[{-s.weight}] * V*[{-t.weight}]",
                        -k,
                        tensor(dual(s.cls), dual(t.cls)),
                        True,
                    )
                )
        return GradedAdjoint(e.group, tuple(pieces))

    full = e.full_summands()
    two_block = e.group.is_two_block
    for s, t in itertools.product(full, repeat=2):
        label = f"End({s.label})" if s is t else f"Hom({s.label}, {t.label})"
        pieces.append(
            AdjointPiece(
                label,
                _integer_weight(t.weight - s.weight),
                hom(s.cls, t.cls),
                two_block and s.block is not t.block,
            )
        )
    pieces.append(AdjointPiece("trace", 0, BundleClass(1, 0), False, multiplicity=-1))
    return GradedAdjoint(e.group, tuple(pieces))


@dataclasses.dataclass(frozen=True)
class AdjointCheckReport:
    """Consistency checks of an adjoint decomposition.

    Attributes:
        total_rank: The sum of the ranks of the U_k.
        expected_rank: The dimension of the complexified Lie algebra.
        total_degree: The sum of the degrees of the U_k.
        failures: Descriptions of the failed checks.
    """

    total_rank: int
    expected_rank: int
    total_degree: Degree
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return not self.failures

    def _json_(self) -> dict[str, Any]:
        return {
            "total_rank": self.total_rank,
            "expected_rank": self.expected_rank,
            "total_degree": self.total_degree,
            "failures": list(self.failures),
            "passed": self.passed,
        }


def duality_failures(adjoint: GradedAdjoint) -> list[str]:
    """Check that U_k and U_{−k} have equal rank and opposite degree."""
    entries = adjoint.entries
    failures = []
    for k in sorted(set(entries) | {-k for k in entries}):
        u, v = adjoint[k], adjoint[-k]
        if u.rank != v.rank or u.degree != -v.degree:
            failures.append(f"U_{k} = {u} is not dual to U_{-k} = {v}")
    return failures


def total_rank_degree_check(e: GradedBundle) -> AdjointCheckReport:
    """Check the rank, degree, duality and parity of the adjoint decomposition.

    The checks are: the U_k have total rank dim g_ℂ and total degree 0; U_k is
    dual to U_{−k}; and for SU(n,n) with a nontrivial grading the odd-weight
    terms are exactly the Hom pieces between V and V′.

    Args:
        e: The graded bundle.

    Returns:
        The report. Failures are listed, not raised.
    """
    adjoint = adjoint_decomposition(e)
    total = adjoint.total
    expected = e.group.dim_g
    failures = []
    if total.rank != expected:
        failures.append(f"total rank {total.rank} != dim g = {expected}")
    if total.degree != 0:
        failures.append(f"total degree {total.degree} != 0")
    failures.extend(duality_failures(adjoint))
    if e.group.family is GroupFamily.SU_NN and not e.is_trivially_graded():
        for piece in adjoint.pieces:
            if piece.multiplicity > 0 and piece.noncompact != (piece.weight % 2 == 1):
                failures.append(
                    f"{piece.label} has weight {piece.weight} but "
                    f"{'is' if piece.noncompact else 'is not'} non-compact"
                )
    return AdjointCheckReport(total.rank, expected, total.degree, tuple(failures))


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield the compositions of n (ordered tuples of positive integers)."""
    for cuts in itertools.product((False, True), repeat=n - 1):
        parts = []
        size = 1
        for cut in cuts:
            if cut:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield tuple(parts)


def trace_free_weights(rank_vector: Sequence[int]) -> tuple[Weight, ...]:
    """Return consecutive weights m, m+1, ... making the grading trace-free."""
    total = sum(rank_vector)
    offset = Fraction(sum(i * r for i, r in enumerate(rank_vector)), total)
    return tuple(Weight(i - offset) for i in range(len(rank_vector)))


def degree_variable(summand_label: str) -> AffineForm:
    """The degree variable attached to a summand label."""
    return AffineForm.variable(f"deg {summand_label}")


def sl_fixed_point_types(n: int) -> list[GradedBundle]:
    """Enumerate the SL(n,ℂ) fixed-point types with symbolic degrees.

    There is one type per composition of n (the rank vector). The weights are
    consecutive and trace-free; each summand but the last gets a degree
    variable and the last one makes the total degree vanish.

    Args:
        n: The rank of E.

    Returns:
        The graded bundles, one per rank vector.
    """
    group = GroupType.sl(n)
    types = []
    for rank_vector in compositions(n):
        weights = trace_free_weights(rank_vector)
        degrees: list[Degree] = [
            degree_variable(f"F[{w}]") for w in weights[:-1]
        ]
        degrees.append(-linear_sum(degrees))  # type: ignore[operator]
        summands = tuple(
            GradedSummand(w, BundleClass(r, d))
            for w, r, d in zip(weights, rank_vector, degrees)
        )
        types.append(GradedBundle(group, summands))
    return types
