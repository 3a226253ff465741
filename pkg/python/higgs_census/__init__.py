# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""higgs-census computes minima, Morse indices and component counts of Higgs moduli."""

from higgs_census import chain_oracle, linalg, minima, protocols, random, testing
from higgs_census.bundle_class import (
    BundleClass,
    Curve,
    canonical,
    euler_char,
    h0_line,
    slope,
    theta_characteristic,
)
from higgs_census.components import (
    ComponentCount,
    Determination,
    Stratum,
    StratumKind,
    count_components,
    strata,
    teichmuller_dims,
    total_lower_bound,
    triples_label,
    w_reduce,
)
from higgs_census.exceptions import DomainError, InvariantViolationError
from higgs_census.graded import (
    Block,
    GradedAdjoint,
    GradedBundle,
    GradedSummand,
    Weight,
    adjoint_decomposition,
    total_rank_degree_check,
)
from higgs_census.groups import GroupFamily, GroupType
from higgs_census.milnor_wood import MWScenario, bound, verify_chain
from higgs_census.morse import laumon_halfdim, moduli_dim, morse_index
from higgs_census.protocols import dumps, to_json_data
from higgs_census.stiefel_whitney import (
    H1Class,
    PrymComponent,
    QuadraticRefinement,
    SWClass,
    delta,
    homomorphism_check,
    prym_component,
    sw_multiply,
)

__all__ = [
    "Block",
    "BundleClass",
    "ComponentCount",
    "Curve",
    "Determination",
    "DomainError",
    "GradedAdjoint",
    "GradedBundle",
    "GradedSummand",
    "GroupFamily",
    "GroupType",
    "H1Class",
    "InvariantViolationError",
    "MWScenario",
    "PrymComponent",
    "QuadraticRefinement",
    "SWClass",
    "Stratum",
    "StratumKind",
    "Weight",
    "adjoint_decomposition",
    "bound",
    "canonical",
    "chain_oracle",
    "count_components",
    "delta",
    "dumps",
    "euler_char",
    "h0_line",
    "homomorphism_check",
    "laumon_halfdim",
    "linalg",
    "minima",
    "moduli_dim",
    "morse_index",
    "protocols",
    "prym_component",
    "random",
    "slope",
    "strata",
    "sw_multiply",
    "teichmuller_dims",
    "testing",
    "theta_characteristic",
    "to_json_data",
    "total_lower_bound",
    "total_rank_degree_check",
    "triples_label",
    "verify_chain",
    "w_reduce",
]
