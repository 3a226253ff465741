# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Classification of local minima for SU(2,2) and Sp(4,ℝ)."""

from higgs_census.minima.census import (
    ExtremalMinimum,
    MinimaCensus,
    ReducibleFamily,
    minima_census,
    minima_census_for_degree,
    reducible_minima,
    sp_extremal_minima,
)
from higgs_census.minima.classify import (
    Classification,
    Verdict,
    brute_force_minimum_feasible,
    classify,
    type_index,
    verify_witness,
    witness_model,
)
from higgs_census.minima.types import (
    FixedPointType,
    allowed_arrows,
    enumerate_types,
    evaluate_degrees,
)

__all__ = [
    "Classification",
    "ExtremalMinimum",
    "FixedPointType",
    "MinimaCensus",
    "ReducibleFamily",
    "Verdict",
    "allowed_arrows",
    "brute_force_minimum_feasible",
    "classify",
    "enumerate_types",
    "evaluate_degrees",
    "minima_census",
    "minima_census_for_degree",
    "reducible_minima",
    "sp_extremal_minima",
    "type_index",
    "verify_witness",
    "witness_model",
]
