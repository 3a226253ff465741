# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Tests for the norm recursion."""

from __future__ import annotations

from fractions import Fraction

import pytest

from higgs_census import Curve, DomainError, GroupType
from higgs_census.chain_oracle import ChainModel, SplitSummand, phi_norm_sequence
from higgs_census.graded import Block, Weight


def test_norms_feasible():
    """Test a graded model whose norms are consistent with its arrows."""
    model = ChainModel(
        Curve(2),
        GroupType.su(1),
        (
            SplitSummand(0, 1, Block.V, Weight.from_twice(-1)),
            SplitSummand(1, -1, Block.V_PRIME, Weight.from_twice(1)),
        ),
        frozenset({(0, 1)}),
    )
    sequence = phi_norm_sequence(model)
    assert sequence.norms == (Fraction(1),)
    assert sequence.increments == (Fraction(1), Fraction(-1))
    assert sequence.top == 0
    assert sequence.feasible
    assert not sequence.vanishes


def test_norms_missing_arrow():
    """Test that a positive norm needs an arrow."""
    model = ChainModel(
        Curve(2),
        GroupType.su(1),
        (
            SplitSummand(0, 1, Block.V, Weight.from_twice(-1)),
            SplitSummand(1, -1, Block.V_PRIME, Weight.from_twice(1)),
        ),
    )
    sequence = phi_norm_sequence(model)
    assert not sequence.feasible
    assert "no arrow" in sequence.reasons[0]


def test_norms_negative():
    """Test that a negative norm is infeasible."""
    model = ChainModel(
        Curve(2),
        GroupType.su(1),
        (
            SplitSummand(0, -1, Block.V, Weight.from_twice(-1)),
            SplitSummand(1, 1, Block.V_PRIME, Weight.from_twice(1)),
        ),
        frozenset({(0, 1)}),
    )
    sequence = phi_norm_sequence(model)
    assert sequence.norms == (Fraction(-1),)
    assert not sequence.feasible


def test_norms_three_levels():
    """Test the recursion on the (1,2,1) SU(2,2) levels."""
    model = ChainModel(
        Curve(3),
        GroupType.su(2),
        (
            SplitSummand(0, 2, Block.V, Weight(-1)),
            SplitSummand(1, 0, Block.V_PRIME, Weight(0), rank=2),
            SplitSummand(2, -2, Block.V, Weight(1)),
        ),
        frozenset({(0, 1), (1, 2)}),
    )
    sequence = phi_norm_sequence(model)
    assert sequence.norms == (Fraction(2), Fraction(2))
    assert sequence.feasible
    assert sequence._json_()["norms"] == [Fraction(2), Fraction(2)]


def test_norms_ungraded():
    """Test that ungraded models are rejected."""
    model = ChainModel(
        Curve(2), GroupType.sl(2), (SplitSummand(0, 0), SplitSummand(1, 0))
    )
    with pytest.raises(DomainError):
        phi_norm_sequence(model)
