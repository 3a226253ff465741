# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Brute-force stability oracle on fully split models."""

from higgs_census.chain_oracle.corpus import (
    generate_extremal_models,
    generate_split_models,
    read_models_jsonl,
    write_models_jsonl,
)
from higgs_census.chain_oracle.models import (
    RESTRICTION_NOTE,
    ChainModel,
    QBundleModel,
    SplitSummand,
    SubObject,
    arrow_realizable,
    closed_subsets,
    connected_components,
    unrealizable_arrows,
)
from higgs_census.chain_oracle.norms import NormSequence, phi_norm_sequence
from higgs_census.chain_oracle.quiver import (
    EquivalenceReport,
    FGSplit,
    check_quiver_equivalence,
    quiver_fg_split,
)
from higgs_census.chain_oracle.stability import (
    StabilityResult,
    StabilityStatus,
    enumerate_subobjects,
    invariant_subobjects,
    is_stable_higgs,
    is_stable_q,
    tau_stability_value,
)

__all__ = [
    "RESTRICTION_NOTE",
    "ChainModel",
    "EquivalenceReport",
    "FGSplit",
    "NormSequence",
    "QBundleModel",
    "SplitSummand",
    "StabilityResult",
    "StabilityStatus",
    "SubObject",
    "arrow_realizable",
    "check_quiver_equivalence",
    "closed_subsets",
    "connected_components",
    "enumerate_subobjects",
    "generate_extremal_models",
    "generate_split_models",
    "invariant_subobjects",
    "is_stable_higgs",
    "is_stable_q",
    "phi_norm_sequence",
    "quiver_fg_split",
    "read_models_jsonl",
    "tau_stability_value",
    "unrealizable_arrows",
    "write_models_jsonl",
]
