# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Tests for component counts and the strata of the maximal Sp(4,ℝ) component."""

from __future__ import annotations

import pytest

import higgs_census
from higgs_census import BundleClass, Curve, DomainError, GroupType
from higgs_census.chain_oracle import ChainModel, SplitSummand, generate_extremal_models
from higgs_census.components import (
    Determination,
    StratumKind,
    check_stability_transfer,
    count_components,
    lower_bound_report,
    maximal_component_count,
    orthogonal_split_invariants,
    strata,
    teichmuller_dims,
    total_lower_bound,
    triples_label,
    w_reduce,
    w_side_stable,
)
from higgs_census.graded import Block
from higgs_census.stiefel_whitney import H1Class


@pytest.mark.parametrize(
    "genus, count", [(2, 48), (3, 194), (4, 772), (5, 3078), (6, 12296)]
)
def test_maximal_component_count(genus: int, count: int):
    """Test the number of components with maximal Toledo invariant."""
    curve = Curve(genus)
    assert maximal_component_count(curve) == count
    result = count_components(GroupType.sp(2), curve, 2 * genus - 2)
    assert result.determined
    assert result.count == count
    assert count_components(GroupType.sp(2), curve, 2 - 2 * genus).count == count


@pytest.mark.parametrize("genus", range(2, 11))
def test_strata_count(genus: int):
    """Test that the strata add up to the number of components."""
    census = strata(Curve(genus))
    expected = 2 * (2 ** (2 * genus) - 1) + (2 * genus - 2) + 2 ** (2 * genus)
    assert len(census) == expected == 3 * 2 ** (2 * genus) + 2 * genus - 4
    assert census.counts() == {
        "nonorientable": 2 * (2 ** (2 * genus) - 1),
        "orientable": 2 * genus - 2,
        "maximal_root": 2 ** (2 * genus),
    }


def test_strata_genus_two():
    """Test the individual strata in genus 2."""
    census = strata(Curve(2))
    listed = list(census)
    assert len(listed) == 48
    assert listed == sorted(listed, key=lambda s: s.sort_key())
    assert len({s.label for s in listed}) == 48
    assert all(s.connected for s in listed)
    first = listed[0]
    assert first.kind is StratumKind.NONORIENTABLE
    assert first.label == "M^0_1000"
    assert first.w1 == H1Class.from_string("1000")
    orientable = [s for s in listed if s.kind is StratumKind.ORIENTABLE]
    assert [(s.degree, s.w2) for s in orientable] == [(0, 0), (1, 1)]
    roots = [s for s in listed if s.kind is StratumKind.MAXIMAL_ROOT]
    assert all(s.degree == 2 and s.w2 == 0 and s.w1.is_zero() for s in roots)
    assert roots[0].label == "M_0,0000^2"
    assert census.rows()[0]["kind"] == "nonorientable"
    assert higgs_census.to_json_data(census)["total"] == 48


@pytest.mark.parametrize(
    "group, genus, d, status, count",
    [
        (GroupType.su(2), 2, 2, Determination.DETERMINED, 1),
        (GroupType.su(2), 2, 0, Determination.DETERMINED, 1),
        (GroupType.su(2), 3, -4, Determination.DETERMINED, 1),
        (GroupType.su(2), 3, 1, Determination.NOT_DETERMINED, None),
        (GroupType.su(2), 2, 3, Determination.DETERMINED, 0),
        (GroupType.sp(2), 2, 0, Determination.DETERMINED, 1),
        (GroupType.sp(2), 2, -1, Determination.NOT_DETERMINED, None),
        (GroupType.sp(2), 2, 5, Determination.DETERMINED, 0),
        (GroupType.su(3), 2, 0, Determination.NOT_DETERMINED, None),
        (GroupType.sl(2), 2, 0, Determination.NOT_DETERMINED, None),
    ],
)
def test_count_components(group, genus, d, status, count):
    """Test which component counts are established."""
    result = count_components(group, Curve(genus), d)
    assert result.status is status
    assert result.count == count
    assert result.reason
    assert higgs_census.to_json_data(result)["status"] == status.value


def test_lower_bound():
    """Test the two lower bounds on the number of Sp(4,ℝ) components."""
    assert total_lower_bound(Curve(2)) == 51
    assert total_lower_bound(Curve(3)) == 203
    report = lower_bound_report(Curve(2))
    assert report.stated == 51
    assert report.naive_sum == 1 + 2 * 48 + 2
    assert report.undetermined_degrees == (-1, 1)
    report = lower_bound_report(Curve(3))
    assert report.naive_sum == 6 * 2**6 + 8 * 3 - 13


@pytest.mark.parametrize(
    "genus, vector_space, hitchin_dim", [(2, (3, 3, 7), 20), (3, (6, 6, 14), 40)]
)
def test_teichmuller_dims(genus, vector_space, hitchin_dim):
    """Test the dimensions attached to the Teichmüller components."""
    dims = teichmuller_dims(Curve(genus))
    assert dims.vector_space == vector_space
    assert dims.hitchin_dim == hitchin_dim


def test_triples_label():
    """Test the triple data of SU(2,2) minima."""
    label = triples_label(1, Curve(2))
    assert (label.rank_v, label.rank_v_tilde) == (2, 2)
    assert (label.deg_v, label.deg_v_tilde) == (1, 1)
    assert "triples" in label.note
    assert "fixed determinant" in triples_label(4, Curve(3)).note
    assert "zero Higgs field" in triples_label(0, Curve(3)).note
    assert triples_label(-2, Curve(2)).deg_v_tilde == 4
    with pytest.raises(DomainError):
        triples_label(3, Curve(2))


def test_w_reduce():
    """Test the passage from V to W."""
    reduction = w_reduce(2, Curve(3))
    assert reduction.v_class == BundleClass(2, 4)
    assert reduction.square_root == BundleClass(1, 2)
    assert reduction.w_class == BundleClass(2, 0)
    assert reduction.phi_twist == BundleClass(1, 8)
    assert reduction.quadratic_form and reduction.phi_symmetric
    assert w_reduce(3, Curve(2), 3).w_class == BundleClass(3, 0)
    with pytest.raises(DomainError):
        w_reduce(2, Curve(3), 3)


def test_orthogonal_split_invariants():
    """Test the Stiefel–Whitney classes of L ⊕ L⁻¹."""
    split = orthogonal_split_invariants(Curve(2), 1)
    assert split.w1.is_zero()
    assert split.w2 == 1
    assert orthogonal_split_invariants(Curve(3), 4).w2 == 0
    with pytest.raises(DomainError):
        orthogonal_split_invariants(Curve(2), 3)
    with pytest.raises(DomainError):
        orthogonal_split_invariants(Curve(2), -1)


def extremal(a: int, arrows) -> ChainModel:
    """V = L₁ ⊕ L₂ with deg L₁ = a in genus 2, Φ sending Lᵢ to L_{3-i}⁻¹ ⊗ K."""
    return ChainModel(
        Curve(2),
        GroupType.sp(2),
        (
            SplitSummand(0, a, Block.V),
            SplitSummand(1, 2 - a, Block.V),
            SplitSummand(2, -a, Block.V_DUAL),
            SplitSummand(3, a - 2, Block.V_DUAL),
        ),
        frozenset({(0, 3), (1, 2), *arrows}),
    )


def test_w_side_stable():
    """Test the stability of (W, C, φ) on explicit models."""
    assert w_side_stable(extremal(0, [(2, 0)]))
    assert not w_side_stable(extremal(1, [(2, 0)]))
    assert not w_side_stable(extremal(0, []))


def test_w_side_domain():
    """Test the models that are rejected."""
    model = ChainModel(
        Curve(2),
        GroupType.sp(2),
        (
            SplitSummand(0, 1, Block.V),
            SplitSummand(1, 0, Block.V),
            SplitSummand(2, -1, Block.V_DUAL),
            SplitSummand(3, 0, Block.V_DUAL),
        ),
    )
    with pytest.raises(DomainError):
        w_side_stable(model)
    su_model = ChainModel(
        Curve(2),
        GroupType.su(1),
        (SplitSummand(0, 0, Block.V), SplitSummand(1, 0, Block.V_PRIME)),
    )
    with pytest.raises(DomainError):
        w_side_stable(su_model)


@pytest.mark.parametrize("genus", [2, 3])
def test_stability_transfer(genus: int):
    """Test that both sides agree on every extremal model."""
    top = 2 * genus - 2
    models = generate_extremal_models(Curve(genus), range(-top, 2 * top + 1))
    report = check_stability_transfer(models)
    assert report.passed
    assert 0 < report.n_stable < report.n_models
