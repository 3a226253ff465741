# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Comparison of Higgs-bundle stability with Q-bundle stability."""

from __future__ import annotations

import concurrent.futures
import dataclasses
import logging
from collections.abc import Iterable
from fractions import Fraction
from typing import Any

from higgs_census.bundle_class import BundleClass
from higgs_census.chain_oracle.models import (
    RESTRICTION_NOTE,
    ChainModel,
    QBundleModel,
    SubObject,
)
from higgs_census.chain_oracle.stability import (
    enumerate_subobjects,
    is_stable_higgs,
    is_stable_q,
)
from higgs_census.exceptions import DomainError

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class FGSplit:
    """The image and kernel pieces of an invariant sub-object.

    For F′ ⊂ E₁ ⊕ E₂, F = F₁ ⊕ F₂ is the sum of the projections of F′ to the two
    vertices and G = G₂ ⊕ G₁ the sum of its intersections with them. Both are
    Q-sub-bundles.

    Attributes:
        sub: The sub-object F′.
        f: The class of F.
        g: The class of G.
        rank_identity: Whether 2 rk F′ = rk F + rk G.
        degree_convexity: Whether 2 deg F′ ≤ deg F + deg G.
        slope_conclusion: Whether the larger of μ(F), μ(G) is at least μ(F′).
    """

    sub: SubObject
    f: BundleClass
    g: BundleClass
    rank_identity: bool
    degree_convexity: bool
    slope_conclusion: bool

    @property
    def passed(self) -> bool:
        return self.rank_identity and self.degree_convexity and self.slope_conclusion

    def _json_(self) -> dict[str, Any]:
        return {
            "sub": self.sub._json_(),
            "f": self.f._json_(),
            "g": self.g._json_(),
            "rank_identity": self.rank_identity,
            "degree_convexity": self.degree_convexity,
            "slope_conclusion": self.slope_conclusion,
            "passed": self.passed,
        }


def _is_invariant(model: ChainModel, sub: SubObject) -> bool:
    inside = set(sub.summands)
    for a, b in sub.diagonals:
        if a in inside or b in inside or a == b:
            return False
        sa, sb = model.by_index[a], model.by_index[b]
        if sa.rank != sb.rank or not model.opposite(sa, sb):
            return False
        if not (model.targets(a) | model.targets(b)) <= sub.summands:
            return False
    ends = [i for pair in sub.diagonals for i in pair]
    if len(ends) != len(set(ends)):
        return False
    return all(model.targets(i) <= sub.summands for i in inside)


def quiver_fg_split(model: ChainModel, sub: SubObject) -> FGSplit:
    """Compute F and G for an invariant sub-object and certify the convexity step.

    Args:
        model: A two-block model.
        sub: A Φ-invariant sub-object of the model.

    Returns:
        The split with its certificate.

    Raises:
        DomainError: The model has one block or the sub-object is not invariant.
    """
    if not model.group.is_two_block:
        raise DomainError(f"{model.group} is not a two-block group.")
    if not _is_invariant(model, sub):
        raise DomainError(f"The sub-object {sub.describe()} is not Φ-invariant.")
    ends = {i for pair in sub.diagonals for i in pair}
    f = model.class_of(sub.summands | ends)
    g = model.class_of(sub.summands)
    prime = sub.cls
    slopes = [
        Fraction(int(c.degree), c.rank) for c in (f, g) if c.rank > 0
    ]
    mu_prime = Fraction(int(prime.degree), prime.rank)
    return FGSplit(
        sub,
        f,
        g,
        rank_identity=2 * prime.rank == f.rank + g.rank,
        degree_convexity=2 * int(prime.degree) <= int(f.degree) + int(g.degree),
        slope_conclusion=max(slopes) >= mu_prime,
    )


@dataclasses.dataclass(frozen=True)
class EquivalenceReport:
    """The outcome of comparing the two stability notions on a corpus.

    Attributes:
        n_models: The number of models checked.
        n_subobjects: The number of sub-objects whose F/G certificate was checked.
        n_stable: The number of stable models.
        counterexamples: Indices of models on which the two notions disagree.
        certificate_failures: (model index, sub-object) pairs whose certificate
            failed.
        note: The class of sub-objects examined.
    """

    n_models: int
    n_subobjects: int
    n_stable: int
    counterexamples: tuple[int, ...]
    certificate_failures: tuple[tuple[int, str], ...]
    note: str = RESTRICTION_NOTE

    @property
    def passed(self) -> bool:
        return not self.counterexamples and not self.certificate_failures

    def _json_(self) -> dict[str, Any]:
        return {
            "n_models": self.n_models,
            "n_subobjects": self.n_subobjects,
            "n_stable": self.n_stable,
            "counterexamples": list(self.counterexamples),
            "certificate_failures": [list(f) for f in self.certificate_failures],
            "passed": self.passed,
            "note": self.note,
        }


def _check_model(model: ChainModel) -> tuple[bool, bool, int, list[str]]:
    higgs = is_stable_higgs(model).stable
    q = is_stable_q(QBundleModel.from_chain(model)).stable
    subs = enumerate_subobjects(model)
    failures = [
        sub.describe() for sub in subs if not quiver_fg_split(model, sub).passed
    ]
    return higgs, q, len(subs), failures


def check_quiver_equivalence(
    models: Iterable[ChainModel], *, max_workers: int = 1
) -> EquivalenceReport:
    """Check that Higgs stability and Q-bundle stability agree on every model.

    Each sub-object's F/G certificate is also checked.

    Args:
        models: Two-block models.
        max_workers: The number of worker processes. With 1 the check runs
            serially. Results do not depend on this value.

    Returns:
        The report.
    """
    models = list(models)
    if max_workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers) as executor:
            results = list(executor.map(_check_model, models, chunksize=64))
    else:
        results = [_check_model(model) for model in models]
    counterexamples = []
    failures = []
    n_subobjects = 0
    n_stable = 0
    for k, (higgs, q, n_subs, bad) in enumerate(results):
        n_subobjects += n_subs
        n_stable += higgs
        if higgs != q:
            counterexamples.append(k)
        failures.extend((k, sub) for sub in bad)
    logger.debug(
        "Checked %d models and %d sub-objects: %d stable, %d counterexamples",
        len(models),
        n_subobjects,
        n_stable,
        len(counterexamples),
    )
    return EquivalenceReport(
        len(models), n_subobjects, n_stable, tuple(counterexamples), tuple(failures)
    )
