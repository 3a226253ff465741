# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Full soundness search of the Milnor–Wood chain."""

from __future__ import annotations

from higgs_census.milnor_wood import soundness_search


def test_soundness_search():
    """Test the chain on the default box."""
    report = soundness_search()
    assert report.passed, report.counterexamples[:10]
    assert report.n_checked == 40 * 41 * 41 * (2 + 3 + 4) * 4
