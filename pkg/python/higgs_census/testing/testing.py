# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Testing utilities."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from higgs_census.bundle_class import Curve
from higgs_census.groups import GroupType
from higgs_census.milnor_wood import bound

RANK_FOUR_GROUPS = (GroupType.su(2), GroupType.sp(2))


def generate_curves(genus_range: Iterable[int]) -> Iterator[Curve]:
    """Generate curves of the given genera."""
    for genus in genus_range:
        yield Curve(genus)


def generate_group_curve(
    groups: Iterable[GroupType], genus_range: Iterable[int]
) -> Iterator[tuple[GroupType, Curve]]:
    """Generate (`group`, `curve`) pairs for testing."""
    genera = list(genus_range)
    for group in groups:
        for genus in genera:
            yield group, Curve(genus)


def generate_group_curve_degree(
    groups: Iterable[GroupType], genus_range: Iterable[int]
) -> Iterator[tuple[GroupType, Curve, int]]:
    """Generate (`group`, `curve`, `d`) triples for testing.

    Given groups with two blocks and a range of genera, generates every Toledo
    invariant d allowed by the Milnor–Wood inequality.
    """
    for group, curve in generate_group_curve(groups, genus_range):
        limit = bound(group.n, curve.genus)
        for d in range(-limit, limit + 1):
            yield group, curve, d


def generate_groups(
    n_range: Iterable[int], *, complex_groups: bool = True
) -> Iterator[GroupType]:
    """Generate groups of every family for each value of n."""
    for n in n_range:
        yield GroupType.su(n)
        yield GroupType.sp(n)
        if complex_groups and n >= 2:
            yield GroupType.sl(n)
