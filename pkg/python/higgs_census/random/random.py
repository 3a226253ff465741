# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from higgs_census.bundle_class import BundleClass
from higgs_census.graded import (
    Block,
    GradedBundle,
    GradedSummand,
    compositions,
    trace_free_weights,
)
from higgs_census.groups import GroupFamily, GroupType
from higgs_census.stiefel_whitney import (
    H1Class,
    QuadraticRefinement,
    SWClass,
    transvection,
)


def _random_composition(n: int, rng: np.random.Generator) -> tuple[int, ...]:
    choices = list(compositions(n))
    return choices[rng.integers(len(choices))]


def _zero_sum_degrees(
    count: int, degree_range: range, rng: np.random.Generator
) -> list[int]:
    degrees = [int(rng.choice(degree_range)) for _ in range(count - 1)]
    return degrees + [-sum(degrees)]


def random_graded_bundle(
    group: GroupType, *, seed=None, degree_range: range = range(-10, 11)
) -> GradedBundle:
    """Return a random valid graded bundle for a group.

    The rank vector is sampled among those the group allows, the weights are
    consecutive and trace-free, and the degrees are sampled from a range subject
    to the total degree vanishing.

    Args:
        group: The group.
        seed: A seed to initialize the pseudorandom number generator.
            Should be a valid input to ``np.random.default_rng``.
        degree_range: The range of free summand degrees.

    Returns:
        The sampled graded bundle.
    """
    rng = np.random.default_rng(seed)
    n = group.n
    if group.family is GroupFamily.SL_N_C:
        ranks = _random_composition(n, rng)
        degrees = _zero_sum_degrees(len(ranks), degree_range, rng)
        summands = [
            GradedSummand(weight, BundleClass(rank, degree))
            for weight, rank, degree in zip(trace_free_weights(ranks), ranks, degrees)
        ]
        return GradedBundle(group, tuple(summands))

    blocks = (Block.V, Block.V_PRIME)
    if group.family is GroupFamily.SP_2N_R:
        half = _random_composition(n, rng)
        ranks = half + half[::-1]
        blocks = (Block.V, Block.V_DUAL)
    else:
        while True:
            ranks = _random_composition(2 * n, rng)
            if len(ranks) > 1 and sum(ranks[::2]) == n:
                break
            if len(ranks) == 1 and rng.integers(2):
                degrees = _zero_sum_degrees(2, degree_range, rng)
                return GradedBundle(
                    group,
                    tuple(
                        GradedSummand(
                            trace_free_weights(ranks)[0], BundleClass(n, degree), block
                        )
                        for degree, block in zip(degrees, blocks)
                    ),
                )
    start = int(rng.integers(2))
    level_blocks = [blocks[(start + i) % 2] for i in range(len(ranks))]
    weights = trace_free_weights(ranks)
    if group.family is GroupFamily.SP_2N_R:
        summands = [
            GradedSummand(weight, BundleClass(rank, int(rng.choice(degree_range))))
            for weight, rank, block in zip(weights, ranks, level_blocks)
            if block is Block.V
        ]
    else:
        degrees = _zero_sum_degrees(len(ranks), degree_range, rng)
        summands = [
            GradedSummand(weight, BundleClass(rank, degree), block)
            for weight, rank, degree, block in zip(
                weights, ranks, degrees, level_blocks
            )
        ]
    return GradedBundle(group, tuple(summands))


def random_h1_class(genus: int, *, seed=None) -> H1Class:
    """Return a uniformly random class in H¹(Σ; ℤ/2).

    Args:
        genus: The genus.
        seed: A seed to initialize the pseudorandom number generator.
            Should be a valid input to ``np.random.default_rng``.
    """
    rng = np.random.default_rng(seed)
    return H1Class(tuple(int(b) for b in rng.integers(2, size=2 * genus)))


def random_sw_class(genus: int, *, seed=None) -> SWClass:
    rng = np.random.default_rng(seed)
    return SWClass(random_h1_class(genus, seed=rng), int(rng.integers(2)))


def random_quadratic_refinement(genus: int, *, seed=None) -> QuadraticRefinement:
    """Return a uniformly random refinement of the intersection form."""
    rng = np.random.default_rng(seed)
    return QuadraticRefinement(genus, rng.integers(2, size=2 * genus).tolist())


def random_symplectic_matrix(
    genus: int, *, seed=None, n_transvections: int = 20
) -> np.ndarray:
    """Return a random symplectic matrix over 𝔽₂ as a product of transvections.

    Args:
        genus: The genus.
        seed: A seed to initialize the pseudorandom number generator.
            Should be a valid input to ``np.random.default_rng``.
        n_transvections: The number of random transvections to multiply.

    Returns:
        The sampled matrix, with uint8 entries.
    """
    rng = np.random.default_rng(seed)
    matrix = np.eye(2 * genus, dtype=np.int64)
    for _ in range(n_transvections):
        t = transvection(random_h1_class(genus, seed=rng)).astype(np.int64)
        matrix = (t @ matrix) % 2
    return matrix.astype(np.uint8)


def random_degree_assignment(
    variables: Iterable[str], *, seed=None, radius: int = 10
) -> dict[str, int]:
    """Assign a random integer in [−radius, radius] to each degree variable."""
    rng = np.random.default_rng(seed)
    return {name: int(rng.integers(-radius, radius + 1)) for name in sorted(variables)}
