# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Tests for Fourier–Motzkin elimination and integer feasibility."""

from __future__ import annotations

import numpy as np
import pytest

from higgs_census.linalg import (
    AffineForm,
    FeasibilityStatus,
    brute_force_feasibility,
    eq,
    ge,
    gt,
    integer_feasibility,
    le,
    lt,
)

rng = np.random.default_rng(84513629015374)

x = AffineForm.variable("x")
y = AffineForm.variable("y")
z = AffineForm.variable("z")


def test_feasible_interval():
    """Test a bounded interval."""
    result = integer_feasibility([ge(x, 1), le(x, 3)])
    assert result.status is FeasibilityStatus.FEASIBLE
    assert result.feasible
    assert result.witness == {"x": 1}


def test_infeasible_certificate():
    """Test that infeasibility comes with the labels it was derived from."""
    result = integer_feasibility(
        [le(x + y, 0, "sum"), ge(x, 1, "x positive"), ge(y, 0, "y nonnegative")]
    )
    assert result.status is FeasibilityStatus.INFEASIBLE
    assert result.certificate == ("sum", "x positive", "y nonnegative")


def test_integer_tightening():
    """Test that 0 < 2x < 2 has rational but no integer solutions."""
    result = integer_feasibility([gt(2 * x, 0, "lower"), lt(2 * x, 2, "upper")])
    assert result.status is FeasibilityStatus.INFEASIBLE
    assert set(result.certificate) == {"lower", "upper"}


def test_parity_equality():
    """Test that 2x = 3 is infeasible."""
    result = integer_feasibility([eq(2 * x, 3, "odd")])
    assert result.status is FeasibilityStatus.INFEASIBLE
    assert result.certificate == ("odd",)


def test_needs_bound():
    """Test that an unbounded search is reported instead of truncated."""
    result = integer_feasibility([ge(x, 0), ge(y, x)])
    assert result.status is FeasibilityStatus.NEEDS_BOUND
    assert result.unbounded_variable in ("x", "y")
    bounded = integer_feasibility(
        [ge(x, 0), ge(y, x)], bounds={"x": (0, 5), "y": (0, 5)}
    )
    assert bounded.feasible


def test_equality_substitution():
    """Test that witnesses satisfy systems with equalities."""
    constraints = [eq(x + y, 4), ge(x, 0), le(x, 4), ge(y, 3), lt(z, x), gt(z, -2)]
    result = integer_feasibility(constraints)
    assert result.feasible
    assert all(c.is_satisfied(result.witness) for c in constraints)


@pytest.mark.parametrize("n_constraints", [1, 2, 3, 4])
def test_agrees_with_brute_force(n_constraints: int):
    """Test against an exhaustive search on random small systems."""
    box = {"x": (-4, 4), "y": (-4, 4)}
    relations = [le, lt, ge, gt, eq]
    for _ in range(50):
        constraints = []
        for k in range(n_constraints):
            a, b, c = (int(v) for v in rng.integers(-3, 4, size=3))
            relation = relations[rng.integers(len(relations))]
            constraints.append(relation(a * x + b * y, c, f"c{k}"))
        expected = brute_force_feasibility(constraints, box)
        result = integer_feasibility(constraints, bounds=box)
        assert result.feasible == (expected is not None)
        if result.feasible:
            assert all(c.is_satisfied(result.witness) for c in constraints)
