# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Exhaustive generators of split models and their JSON lines storage."""

from __future__ import annotations

import bz2
import dataclasses
import gzip
import itertools
import logging
import lzma
import os
from collections.abc import Callable, Iterable, Iterator, Sequence

import orjson

from higgs_census.bundle_class import Curve
from higgs_census.chain_oracle.models import Arrow, ChainModel, SplitSummand
from higgs_census.exceptions import DomainError
from higgs_census.graded import Block, Weight, compositions, trace_free_weights
from higgs_census.groups import GroupFamily, GroupType

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class _Level:
    weight: Weight
    block: Block
    rank: int


def _level_shapes(group: GroupType) -> Iterator[tuple[_Level, ...]]:
    """Yield the alternating level structures of E, the trivial one last."""
    first, second = (
        (Block.V, Block.V_PRIME)
        if group.family is GroupFamily.SU_NN
        else (Block.V, Block.V_DUAL)
    )
    n = group.n
    for rank_vector in compositions(2 * n):
        if len(rank_vector) == 1:
            continue
        weights = trace_free_weights(rank_vector)
        for start, other in ((first, second), (second, first)):
            blocks = [start if k % 2 == 0 else other for k in range(len(rank_vector))]
            if sum(r for r, b in zip(rank_vector, blocks) if b is first) != n:
                continue
            levels = tuple(
                _Level(w, b, r) for w, r, b in zip(weights, rank_vector, blocks)
            )
            if group.family is GroupFamily.SP_2N_R and not _self_dual(levels):
                continue
            yield levels
    yield (
        _Level(Weight(0), first, n),
        _Level(Weight(0), second, n),
    )


def _self_dual(levels: Sequence[_Level]) -> bool:
    mirrored = [(-lv.weight, lv.block, lv.rank) for lv in reversed(levels)]
    return all(
        lv.weight == w and lv.block is not b and lv.rank == r
        for lv, (w, b, r) in zip(levels, mirrored)
    )


def _summand_layouts(
    group: GroupType, levels: Sequence[_Level]
) -> Iterator[tuple[list[SplitSummand], dict[int, int]]]:
    """Split each level into summands.

    Yields the summands (with placeholder degrees) and, for Sp(2n,ℝ), the map
    sending each summand to its dual partner.
    """
    if group.family is GroupFamily.SP_2N_R:
        v_levels = [lv for lv in levels if lv.block is Block.V]
        for splits in itertools.product(*(compositions(lv.rank) for lv in v_levels)):
            v_parts = [
                (lv.weight, rank)
                for lv, split in zip(v_levels, splits)
                for rank in split
            ]
            summands = [
                SplitSummand(k, 0, Block.V, w, r) for k, (w, r) in enumerate(v_parts)
            ]
            offset = len(summands)
            summands += [
                SplitSummand(offset + k, 0, Block.V_DUAL, -w, r)
                for k, (w, r) in enumerate(v_parts)
            ]
            partner = {k: offset + k for k in range(offset)}
            partner.update({offset + k: k for k in range(offset)})
            yield summands, partner
        return
    for splits in itertools.product(*(compositions(lv.rank) for lv in levels)):
        summands = []
        for lv, split in zip(levels, splits):
            for rank in split:
                summands.append(
                    SplitSummand(len(summands), 0, lv.block, lv.weight, rank)
                )
        yield summands, {}


def _allowed_arrows(summands: Sequence[SplitSummand]) -> list[Arrow]:
    return [
        (a.index, b.index)
        for a, b in itertools.product(summands, repeat=2)
        if b.weight - a.weight == 1  # type: ignore[operator]
    ]


def _arrow_orbits(
    arrows: Sequence[Arrow], partner: dict[int, int]
) -> list[frozenset[Arrow]]:
    if not partner:
        return [frozenset([a]) for a in arrows]
    orbits = {frozenset([(i, j), (partner[j], partner[i])]) for i, j in arrows}
    return sorted(orbits, key=sorted)


def _subsets(orbits: Sequence[frozenset[Arrow]]) -> Iterator[frozenset[Arrow]]:
    for choice in itertools.product((False, True), repeat=len(orbits)):
        yield frozenset().union(*(o for o, take in zip(orbits, choice) if take))


def _degree_assignments(
    summands: Sequence[SplitSummand], partner: dict[int, int], degree_range: range
) -> Iterator[list[int]]:
    if partner:
        free = [s.index for s in summands if s.block is Block.V]
        for values in itertools.product(degree_range, repeat=len(free)):
            degrees = [0] * len(summands)
            for i, value in zip(free, values):
                degrees[i] = value
                degrees[partner[i]] = -value
            yield degrees
        return
    for values in itertools.product(degree_range, repeat=len(summands) - 1):
        last = -sum(values)
        if last in degree_range:
            yield [*values, last]


def generate_split_models(
    group: GroupType, curve: Curve, degree_range: range
) -> Iterator[ChainModel]:
    """Yield every graded split model of a two-block group in a degree box.

    The weight levels of E alternate between the two blocks and are trace-free;
    each level is split into summands in every possible way, every set of
    weight-raising arrows is used (closed under the duality for Sp(2n,ℝ)), and
    every summand degree ranges over ``degree_range`` subject to deg E = 0. The
    trivially graded shape, with Φ = 0, is included. Iteration order is
    deterministic.

    Args:
        group: SU(n,n) or Sp(2n,ℝ).
        curve: The curve.
        degree_range: The allowed summand degrees.

    Yields:
        The models.

    Raises:
        DomainError: The group is complex.
    """
    if not group.is_two_block:
        raise DomainError(
            f"Split models are generated for two-block groups, not {group}."
        )
    count = 0
    for levels in _level_shapes(group):
        for summands, partner in _summand_layouts(group, levels):
            orbits = _arrow_orbits(_allowed_arrows(summands), partner)
            for arrows in _subsets(orbits):
                for degrees in _degree_assignments(summands, partner, degree_range):
                    count += 1
                    yield ChainModel(
                        curve,
                        group,
                        tuple(
                            dataclasses.replace(s, degree=d)
                            for s, d in zip(summands, degrees)
                        ),
                        arrows,
                    )
    logger.debug("Generated %d split models for %s", count, group)


def generate_extremal_models(curve: Curve, degree_range: range) -> Iterator[ChainModel]:
    """Yield ungraded split Sp(4,ℝ) models with maximal Toledo invariant.

    V = L₁ ⊕ L₂ and the component V → V* ⊗ K of Φ is an isomorphism matching each
    Lᵢ with L_σ(i)⁻¹ ⊗ K for an involution σ, so deg Lᵢ + deg L_σ(i) = 2g − 2.
    The component V* → V ⊗ K ranges over all symmetric arrow sets.

    Args:
        curve: The curve.
        degree_range: The allowed values of deg L₁.

    Yields:
        The models, with summands 0, 1 for V and 2, 3 for V*.
    """
    group = GroupType.sp(2)
    top = 2 * curve.genus - 2
    partner = {0: 2, 1: 3, 2: 0, 3: 1}
    back = _arrow_orbits([(i, j) for i in (2, 3) for j in (0, 1)], partner)
    for sigma in ({0: 0, 1: 1}, {0: 1, 1: 0}):
        forward = frozenset((i, partner[sigma[i]]) for i in (0, 1))
        for a in degree_range:
            b = top - a if sigma[0] == 1 else a
            if sigma[0] == 0 and 2 * a != top:
                continue
            if b not in degree_range:
                continue
            summands = (
                SplitSummand(0, a, Block.V),
                SplitSummand(1, b, Block.V),
                SplitSummand(2, -a, Block.V_DUAL),
                SplitSummand(3, -b, Block.V_DUAL),
            )
            for arrows in _subsets(back):
                yield ChainModel(curve, group, summands, forward | arrows)


_OPEN_FUNC: dict[str | None, Callable] = {
    None: open,
    "gzip": gzip.open,
    "bz2": bz2.open,
    "lzma": lzma.open,
}


def write_models_jsonl(
    models: Iterable[ChainModel],
    file: str | bytes | os.PathLike,
    compression: str | None = None,
) -> int:
    """Write models as JSON lines, optionally compressed.

    Args:
        models: The models.
        file: The path to write to.
        compression: The optional compression algorithm to use.
            Options: ``"gzip"``, ``"bz2"``, ``"lzma"``.

    Returns:
        The number of models written.
    """
    count = 0
    with _OPEN_FUNC[compression](file, "wb") as f:
        for model in models:
            f.write(orjson.dumps(model._json_(), option=orjson.OPT_SORT_KEYS))
            f.write(b"\n")
            count += 1
    return count


def read_models_jsonl(
    file: str | bytes | os.PathLike, compression: str | None = None
) -> Iterator[ChainModel]:
    """Read models written by :func:`write_models_jsonl`.

    Args:
        file: The path to read from.
        compression: The compression algorithm, if any, which was used to compress
            the file.
            Options: ``"gzip"``, ``"bz2"``, ``"lzma"``.
    """
    with _OPEN_FUNC[compression](file, "rb") as f:
        for line in f:
            if line.strip():
                yield ChainModel.from_json_data(orjson.loads(line))
