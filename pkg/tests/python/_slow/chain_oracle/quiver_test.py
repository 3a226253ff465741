# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Exhaustive comparison of the two stability notions."""

from __future__ import annotations

import os

import pytest

from higgs_census import Curve, GroupType
from higgs_census.chain_oracle import check_quiver_equivalence, generate_split_models


@pytest.mark.parametrize("group", [GroupType.su(2), GroupType.sp(2)])
def test_equivalence_full_corpus(group: GroupType):
    """Test that the two stability notions agree on the full rank-4 corpus."""
    models = generate_split_models(group, Curve(2), range(-6, 7))
    report = check_quiver_equivalence(models, max_workers=os.cpu_count() or 1)
    assert report.passed, report.counterexamples[:10]
    assert report.n_stable > 0
