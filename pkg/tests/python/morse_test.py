# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Tests for Morse indices and the half-dimension check."""

from __future__ import annotations

import numpy as np
import pytest

import higgs_census
from higgs_census import BundleClass, Curve, DomainError, GroupType
from higgs_census.graded import (
    Block,
    GradedBundle,
    GradedSummand,
    Weight,
    adjoint_decomposition,
    sl_fixed_point_types,
)
from higgs_census.morse import laumon_halfdim, moduli_dim, morse_index

rng = np.random.default_rng(7730218411908375)


def _random_degrees(n: int) -> list[int]:
    degrees = [int(x) for x in rng.integers(-10, 11, size=n - 1)]
    return [*degrees, -sum(degrees)]


@pytest.mark.parametrize("genus", range(2, 6))
def test_index_su_four_lines(genus: int):
    """Test the index of the (1,1,1,1) SU(2,2) type on random degrees."""
    curve = Curve(genus)
    blocks = [Block.V, Block.V_PRIME, Block.V, Block.V_PRIME]
    for _ in range(20):
        degrees = _random_degrees(4)
        e = GradedBundle(
            GroupType.su(2),
            tuple(
                GradedSummand(Weight.from_twice(m), BundleClass(1, d), b)
                for m, d, b in zip((-3, -1, 1, 3), degrees, blocks)
            ),
        )
        report = morse_index(adjoint_decomposition(e), curve)
        assert report.index == 3 * (genus - 1) + degrees[1] - degrees[2]
        assert [c.k for c in report.contributions] == [2, 3]


@pytest.mark.parametrize("genus", range(2, 6))
def test_index_su_one_two_one(genus: int):
    """Test the index of the (1,2,1) SU(2,2) type on random degrees."""
    curve = Curve(genus)
    for _ in range(20):
        d_minus, d_zero, d_plus = _random_degrees(3)
        e = GradedBundle(
            GroupType.su(2),
            (
                GradedSummand(Weight.from_twice(-2), BundleClass(1, d_minus), Block.V),
                GradedSummand(
                    Weight.from_twice(0), BundleClass(2, d_zero), Block.V_PRIME
                ),
                GradedSummand(Weight.from_twice(2), BundleClass(1, d_plus), Block.V),
            ),
        )
        index = morse_index(adjoint_decomposition(e), curve).index
        assert index == genus - 1 - (2 * d_plus + d_zero)


@pytest.mark.parametrize("genus", range(2, 6))
@pytest.mark.parametrize("low", [-3, -1])
def test_index_sp_line_pairs(genus: int, low: int):
    """Test the index of Sp(4,ℝ) types with V a sum of two lines."""
    curve = Curve(genus)
    for _ in range(20):
        x, y = (int(v) for v in rng.integers(-10, 11, size=2))
        e = GradedBundle(
            GroupType.sp(2),
            (
                GradedSummand(Weight.from_twice(low), BundleClass(1, x)),
                GradedSummand(Weight.from_twice(low + 4), BundleClass(1, y)),
            ),
        )
        index = morse_index(adjoint_decomposition(e), curve).index
        sign = 1 if low == -1 else -1
        assert index == 2 * (genus - 1) + sign * (x + y)


def test_symbolic_index():
    """Test that the index of a symbolic type is an affine form."""
    # weights -1, 0, 1 with U_2 = Hom(F[-1], F[1])
    e = sl_fixed_point_types(3)[3]
    report = morse_index(adjoint_decomposition(e), Curve(3))
    assert report.index.variables == ("deg F[-1]", "deg F[0]")
    assert report.index.evaluate({"deg F[-1]": 1, "deg F[0]": -1}) == 2 + 2 - 1
    assert not report.minimum_candidate
    data = higgs_census.to_json_data(report)
    assert data["index"] == str(report.index)
    assert len(data["assumptions"]) == 2


def test_trivial_index_vanishes():
    """Test that Φ = 0 fixed points have index 0."""
    e = GradedBundle(
        GroupType.sp(2), (GradedSummand(Weight(0), BundleClass(2, 0)),)
    )
    report = morse_index(adjoint_decomposition(e), Curve(2))
    assert report.index == 0
    assert report.minimum_candidate
    assert report.contributions == ()


def test_laumon_sl2_genus2():
    """Test the half-dimension for SL(2,ℂ) in genus 2."""
    e = sl_fixed_point_types(2)[1]
    result = laumon_halfdim(adjoint_decomposition(e), Curve(2), GroupType.sl(2))
    assert result.computed == 3
    assert result.expected == 3
    assert result.passed


@pytest.mark.parametrize("n", range(2, 5))
@pytest.mark.parametrize("genus", range(2, 6))
def test_laumon_all_sl_types(n: int, genus: int):
    """Test the half-dimension on every SL(n,ℂ) type."""
    curve = Curve(genus)
    group = GroupType.sl(n)
    for e in sl_fixed_point_types(n):
        result = laumon_halfdim(adjoint_decomposition(e), curve, group)
        assert result.passed, e
        assert result.expected == (n**2 - 1) * (genus - 1)


def test_laumon_real_form():
    """Test that real forms are rejected."""
    e = GradedBundle(
        GroupType.sp(2), (GradedSummand(Weight(0), BundleClass(2, 0)),)
    )
    with pytest.raises(DomainError):
        laumon_halfdim(adjoint_decomposition(e), Curve(2), GroupType.sp(2))


@pytest.mark.parametrize("genus", range(2, 7))
def test_moduli_dim(genus: int):
    """Test the moduli dimensions."""
    curve = Curve(genus)
    assert moduli_dim(GroupType.sp(2), curve) == 10 * (genus - 1)
    assert moduli_dim(GroupType.su(2), curve) == 15 * (genus - 1)
    assert moduli_dim(GroupType.sl(2), curve) == 6 * (genus - 1)
