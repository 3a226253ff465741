# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Tests for mod-2 cohomology and the Prym labels."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

import higgs_census
from higgs_census import DomainError, InvariantViolationError, stiefel_whitney
from higgs_census.stiefel_whitney import (
    H1Class,
    PrymComponent,
    QuadraticRefinement,
    SWClass,
    all_classes,
    all_sw_classes,
    all_vectors,
    delta,
    homomorphism_check,
    is_symplectic,
    pairing,
    prym_component,
    quadratic_refinements,
    refinement_counts,
    sw_multiply,
    symplectic_gram,
    transvection,
)

rng = np.random.default_rng(5517203371460228)


def test_all_vectors():
    """Test that row k holds the bits of k."""
    np.testing.assert_array_equal(
        all_vectors(1), np.array([[0, 0], [1, 0], [0, 1], [1, 1]], dtype=np.uint8)
    )
    vectors = all_vectors(3)
    assert vectors.shape == (64, 6)
    for k in (0, 5, 37, 63):
        assert H1Class(tuple(vectors[k])).to_int() == k


def test_symplectic_gram():
    """Test the intersection form in genus 2."""
    np.testing.assert_array_equal(
        symplectic_gram(2),
        np.array(
            [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]], dtype=np.uint8
        ),
    )


def test_h1_class():
    """Test H¹ classes."""
    u = H1Class.from_string("1010")
    assert u.genus == 2
    assert u.to_int() == 5
    assert str(u) == "1010"
    assert H1Class.from_int(5, 2) == u
    assert u + u == H1Class.zero(2)
    assert (u + H1Class.basis(2, 0)) == H1Class.from_string("0010")
    assert not u.is_zero()
    assert len(list(all_classes(2))) == 16


@pytest.mark.parametrize("text", ["", "10a0", "2"])
def test_h1_class_parse_error(text: str):
    """Test that malformed bit strings are rejected."""
    with pytest.raises(DomainError):
        H1Class.from_string(text)


def test_h1_class_invalid():
    """Test that invalid classes are rejected."""
    with pytest.raises(InvariantViolationError):
        H1Class((1, 0, 1))
    with pytest.raises(InvariantViolationError):
        H1Class((1, 2))
    with pytest.raises(DomainError):
        H1Class.from_int(16, 2)
    with pytest.raises(DomainError):
        H1Class.zero(1) + H1Class.zero(2)


def test_pairing():
    """Test the intersection pairing on basis vectors."""
    a1, a2, b1, b2 = (H1Class.basis(2, k) for k in range(4))
    assert pairing(a1, b1) == 1
    assert pairing(b2, a2) == 1
    assert pairing(a1, a1) == 0
    assert pairing(a1, b2) == 0
    assert pairing(a1 + a2, b1 + b2) == 0


def test_sw_multiply():
    """Test the product of total Stiefel–Whitney classes."""
    a1, b1 = H1Class.basis(1, 0), H1Class.basis(1, 1)
    x = SWClass(a1, 0)
    y = SWClass(b1, 0)
    assert x * y == SWClass(a1 + b1, 1)
    assert x * x == SWClass.identity(1)
    assert SWClass.point_class(1) * SWClass.point_class(1) == SWClass.identity(1)
    assert str(x * y) == "(1, 11, 1)"
    with pytest.raises(InvariantViolationError):
        SWClass(a1, 2)


def test_sw_group_axioms():
    """Test that the Stiefel–Whitney classes of genus 1 form an abelian group."""
    classes = list(all_sw_classes(1))
    assert len(classes) == 8
    identity = SWClass.identity(1)
    for x in classes:
        assert x * identity == x
    for x, y, z in itertools.product(classes, repeat=3):
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x


@pytest.mark.parametrize("genus", range(1, 5))
def test_refinement_counts(genus: int):
    """Test the number of refinements of each Arf invariant."""
    refinements = quadratic_refinements(genus)
    assert len(refinements) == 4**genus
    even = sum(1 for q in refinements if q.arf == 0)
    assert (even, len(refinements) - even) == refinement_counts(genus)


@pytest.mark.parametrize("genus", range(1, 4))
def test_arf_from_basis(genus: int):
    """Test that the majority value is the Arf invariant from the basis."""
    for q in quadratic_refinements(genus):
        assert q.arf == q.arf_from_basis()


def test_refinement_values():
    """Test a refinement against its defining identity."""
    q = QuadraticRefinement(2, [1, 0, 1, 1])
    for u, v in itertools.product(all_classes(2), repeat=2):
        assert q(u + v) == (q(u) + q(v) + pairing(u, v)) % 2
    assert [q(H1Class.basis(2, k)) for k in range(4)] == [1, 0, 1, 1]
    assert q.table()[5] == q(H1Class.from_int(5, 2))
    assert q == QuadraticRefinement(2, (1, 0, 1, 1))
    assert higgs_census.to_json_data(q) == {"genus": 2, "values": "1011"}
    with pytest.raises(InvariantViolationError):
        QuadraticRefinement(2, [1, 0, 1])


def test_homomorphism_exhaustive():
    """Test that δ is a homomorphism in genus 2."""
    q = higgs_census.random.random_quadratic_refinement(2, seed=rng)
    report = homomorphism_check(q)
    assert report.exhaustive
    assert report.n_pairs == 1024
    assert report.passed


def test_homomorphism_sampled():
    """Test that δ is a homomorphism on sampled pairs in genus 5."""
    q = higgs_census.random.random_quadratic_refinement(5, seed=rng)
    report = homomorphism_check(q, seed=rng, n_samples=2000)
    assert not report.exhaustive
    assert report.n_pairs == 2000
    assert report.passed


def test_homomorphism_wrong_form():
    """Test that a form q does not refine exhibits failures."""
    q = QuadraticRefinement(2, [0, 0, 0, 0])
    report = homomorphism_check(q, form=np.zeros((4, 4), dtype=np.uint8))
    assert not report.passed
    assert report._json_()["n_failures"] == report.n_failures > 0


@pytest.mark.parametrize("genus", [1, 2])
def test_homomorphism_multiplies_elements(genus: int, monkeypatch):
    """Test that the check multiplies group elements and catches a wrong product."""
    q = QuadraticRefinement(genus, [1] * (2 * genus))
    assert homomorphism_check(q).n_pairs == (1 << (2 * genus + 1)) ** 2

    def multiply_without_pairing(x, y, form=None):
        return SWClass(x.u + y.u, (x.v + y.v) % 2)

    stiefel_whitney._product_table.cache_clear()
    monkeypatch.setattr(stiefel_whitney, "sw_multiply", multiply_without_pairing)
    try:
        assert not homomorphism_check(q).passed
    finally:
        stiefel_whitney._product_table.cache_clear()


def test_delta():
    """Test δ on explicit classes."""
    q = QuadraticRefinement(1, [1, 0])
    a1, b1 = H1Class.basis(1, 0), H1Class.basis(1, 1)
    assert delta(q, SWClass(a1, 0)) == 1
    assert delta(q, SWClass(b1, 0)) == 0
    assert delta(q, SWClass(a1 + b1, 1)) == (1 + 0 + 1 + 1) % 2
    for x, y in itertools.product(all_sw_classes(1), repeat=2):
        assert delta(q, sw_multiply(x, y)) == (delta(q, x) + delta(q, y)) % 2


def test_prym_component():
    """Test that changing w₂ changes the Prym component."""
    q = QuadraticRefinement(2, [1, 1, 0, 1])
    for u in all_classes(2):
        if u.is_zero():
            with pytest.raises(DomainError):
                prym_component(q, u, 0)
            continue
        plus = prym_component(q, u, 0)
        minus = prym_component(q, u, 1)
        assert {plus, minus} == {PrymComponent.PLUS, PrymComponent.MINUS}
    with pytest.raises(DomainError):
        prym_component(q, H1Class.basis(2, 0), 2)


@pytest.mark.parametrize("genus", range(1, 4))
def test_transvection(genus: int):
    """Test that transvections are symplectic involutions."""
    for u in all_classes(genus):
        t = transvection(u)
        assert is_symplectic(t)
        np.testing.assert_array_equal(
            (t.astype(np.int64) @ t) % 2, np.eye(2 * genus, dtype=np.int64)
        )
    assert not is_symplectic(np.zeros((2 * genus, 2 * genus), dtype=np.uint8))


@pytest.mark.parametrize("genus", range(1, 4))
def test_arf_invariant_under_symplectic(genus: int):
    """Test that composing with a symplectic matrix keeps the Arf invariant."""
    for _ in range(10):
        matrix = higgs_census.random.random_symplectic_matrix(genus, seed=rng)
        assert is_symplectic(matrix)
        q = higgs_census.random.random_quadratic_refinement(genus, seed=rng)
        composed = q.compose(matrix)
        assert composed.arf == q.arf
        for u in all_classes(genus):
            image = (matrix.astype(np.int64) @ u.vector) % 2
            assert composed(u) == q(H1Class(tuple(image)))
