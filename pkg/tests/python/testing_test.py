# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Tests for testing utilities."""

from __future__ import annotations

import higgs_census
from higgs_census import GroupType


def test_generate_group_curve_degree():
    """Test that every Toledo invariant in range is generated."""
    triples = list(
        higgs_census.testing.generate_group_curve_degree(
            higgs_census.testing.RANK_FOUR_GROUPS, range(2, 4)
        )
    )
    # 5 values of d in genus 2 and 9 in genus 3, for each group
    assert len(triples) == 2 * (5 + 9)
    group, curve, d = triples[0]
    assert group == GroupType.su(2)
    assert curve.genus == 2
    assert d == -2


def test_generate_group_curve():
    """Test the pairs of groups and curves."""
    pairs = list(
        higgs_census.testing.generate_group_curve([GroupType.sl(3)], range(2, 5))
    )
    assert [curve.genus for _, curve in pairs] == [2, 3, 4]
    assert [c.genus for c in higgs_census.testing.generate_curves([3, 5])] == [3, 5]


def test_generate_groups():
    """Test the groups generated for each n."""
    groups = list(higgs_census.testing.generate_groups(range(1, 3)))
    assert [str(g) for g in groups] == [
        "SU(1,1)",
        "Sp(2,R)",
        "SU(2,2)",
        "Sp(4,R)",
        "SL(2,C)",
    ]
    real = list(higgs_census.testing.generate_groups([2], complex_groups=False))
    assert real == [GroupType.su(2), GroupType.sp(2)]
