# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Exact linear algebra: affine forms and integer feasibility."""

from higgs_census.linalg.affine import (
    AffineForm,
    Scalar,
    as_form,
    linear_sum,
    simplify,
)
from higgs_census.linalg.fourier_motzkin import (
    FeasibilityResult,
    FeasibilityStatus,
    LinearConstraint,
    Relation,
    brute_force_feasibility,
    eq,
    ge,
    gt,
    integer_feasibility,
    le,
    lt,
)

__all__ = [
    "AffineForm",
    "FeasibilityResult",
    "FeasibilityStatus",
    "LinearConstraint",
    "Relation",
    "Scalar",
    "as_form",
    "brute_force_feasibility",
    "eq",
    "ge",
    "gt",
    "integer_feasibility",
    "le",
    "linear_sum",
    "lt",
    "simplify",
]
