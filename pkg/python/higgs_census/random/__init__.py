# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Random sampling utilities."""

from higgs_census.random.random import (
    random_degree_assignment,
    random_graded_bundle,
    random_h1_class,
    random_quadratic_refinement,
    random_sw_class,
    random_symplectic_matrix,
)

__all__ = [
    "random_degree_assignment",
    "random_graded_bundle",
    "random_h1_class",
    "random_quadratic_refinement",
    "random_sw_class",
    "random_symplectic_matrix",
]
