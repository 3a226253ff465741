# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""The Milnor–Wood inequality for SU(n,n) and Sp(2n,ℝ) and its extremal case."""

from __future__ import annotations

import dataclasses
import itertools
import logging
from collections.abc import Iterator
from typing import Any

import numpy as np

from higgs_census.exceptions import DomainError, InvariantViolationError
from higgs_census.groups import GroupFamily

logger = logging.getLogger(__name__)


def bound(n: int, genus: int) -> int:
    """Return the Milnor–Wood bound n(g − 1) on |d|.

    Raises:
        DomainError: n < 1 or g < 2.
    """
    if n < 1 or genus < 2:
        raise DomainError(f"Need n >= 1 and g >= 2. Got n={n}, g={genus}.")
    return n * (genus - 1)


@dataclasses.dataclass(frozen=True)
class MWScenario:
    """Numerical data entering the proof of the Milnor–Wood inequality.

    Here U is the kernel of c and U′ the image of c twisted back, where c is
    the component of the Higgs field mapping V to V*⊗K (Sp(2n,ℝ)) or to V′⊗K
    (SU(n,n)).

    Attributes:
        n: Half the rank of E.
        genus: The genus of the curve.
        d: The Toledo invariant deg V.
        deg_u: The degree of U.
        deg_uprime: The degree of U′.
        rk_c: The rank of c.
        family: Selects the target of c in labels.
    """

    n: int
    genus: int
    d: int
    deg_u: int
    deg_uprime: int
    rk_c: int
    family: GroupFamily = GroupFamily.SP_2N_R

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be at least 1. Got {self.n}.")
        if self.genus < 2:
            raise DomainError(f"The genus must be at least 2. Got {self.genus}.")
        if not 0 <= self.rk_c <= self.n:
            raise InvariantViolationError(
                f"rk(c) must lie in [0, {self.n}]. Got {self.rk_c}."
            )
        if self.family is GroupFamily.SL_N_C:
            raise DomainError(
                "The Milnor–Wood chain applies to SU(n,n) and Sp(2n,R) only."
            )

    @property
    def c_target(self) -> str:
        """The target bundle of c."""
        return "V*⊗K" if self.family is GroupFamily.SP_2N_R else "V'⊗K"

    def hypotheses(self) -> dict[str, bool]:
        """Evaluate the three inequalities the proof combines."""
        return {
            "deg_uprime_nonpositive": self.deg_uprime <= 0,
            "d_plus_deg_u_nonpositive": self.d + self.deg_u <= 0,
            "degree_of_c_nonnegative": self.deg_uprime
            - self.d
            + self.deg_u
            + (2 * self.genus - 2) * self.rk_c
            >= 0,
        }


@dataclasses.dataclass(frozen=True)
class ChainReport:
    """The result of checking the inequality chain on one scenario.

    Attributes:
        scenario: The scenario.
        hypotheses: Each hypothesis and whether it holds.
        rank_bound: (g − 1) rk(c), the bound the chain yields on d.
        bound: The Milnor–Wood bound n(g − 1).
    """

    scenario: MWScenario
    hypotheses: dict[str, bool]
    rank_bound: int
    bound: int

    @property
    def all_hold(self) -> bool:
        """Whether every hypothesis holds."""
        return all(self.hypotheses.values())

    @property
    def failed(self) -> tuple[str, ...]:
        """The hypotheses that fail."""
        return tuple(name for name, ok in self.hypotheses.items() if not ok)

    @property
    def conclusion(self) -> bool | None:
        """d ≤ (g − 1) rk(c) when all hypotheses hold, else None."""
        if not self.all_hold:
            return None
        return self.scenario.d <= self.rank_bound

    def _json_(self) -> dict[str, Any]:
        s = self.scenario
        return {
            "scenario": {
                "n": s.n,
                "genus": s.genus,
                "d": s.d,
                "deg_u": s.deg_u,
                "deg_uprime": s.deg_uprime,
                "rk_c": s.rk_c,
                "c_target": s.c_target,
            },
            "hypotheses": self.hypotheses,
            "all_hold": self.all_hold,
            "failed": list(self.failed),
            "conclusion": self.conclusion,
            "rank_bound": self.rank_bound,
            "bound": self.bound,
        }


def verify_chain(scenario: MWScenario) -> ChainReport:
    """Check the inequality chain of the Milnor–Wood proof on a scenario.

    Adding deg U′ ≤ 0 and d + deg U ≤ 0 to
    deg U′ − d + deg U + (2g − 2) rk(c) ≥ 0 gives d ≤ (g − 1) rk(c) ≤ n(g − 1).

    Args:
        scenario: The scenario, with d > 0.

    Returns:
        The report. When all hypotheses hold, the conclusion is checked.

    Raises:
        DomainError: d ≤ 0. Apply the outer automorphism d ↦ −d first.
        InvariantViolationError: The hypotheses hold but the conclusion fails.
    """
    if scenario.d <= 0:
        raise DomainError(
            f"The chain assumes d > 0. Got d={scenario.d}; dualize first."
        )
    report = ChainReport(
        scenario,
        scenario.hypotheses(),
        (scenario.genus - 1) * scenario.rk_c,
        bound(scenario.n, scenario.genus),
    )
    if report.conclusion is False:
        raise InvariantViolationError(
            f"The hypotheses hold but d={scenario.d} exceeds the bound."
        )
    return report


@dataclasses.dataclass(frozen=True)
class ExtremalReport:
    """Consequences of the Milnor–Wood proof for large d.

    Attributes:
        n: Half the rank of E.
        genus: The genus.
        d: The Toledo invariant.
        rank_full: Whether c must have full rank n.
        c_isomorphism: Whether c must be an isomorphism V ≅ V*⊗K.
    """

    n: int
    genus: int
    d: int
    rank_full: bool
    c_isomorphism: bool

    def _json_(self) -> dict[str, Any]:
        return dataclasses.asdict(self)


def extremal_consequences(n: int, genus: int, d: int) -> ExtremalReport:
    """Return what the inequality d ≤ (g − 1) rk(c) forces on c.

    rk(c) = n as soon as d > (n − 1)(g − 1), and c is an isomorphism when d is
    maximal.

    Raises:
        DomainError: d is outside [0, n(g − 1)].
    """
    top = bound(n, genus)
    if not 0 <= d <= top:
        raise DomainError(f"d must lie in [0, {top}]. Got {d}.")
    return ExtremalReport(n, genus, d, d > (n - 1) * (genus - 1), d == top)


def satisfying_assignments(
    n: int,
    genus: int,
    d: int,
    deg_u_range: range,
    deg_uprime_range: range,
    family: GroupFamily = GroupFamily.SP_2N_R,
) -> Iterator[MWScenario]:
    """Yield the scenarios in a box on which all three hypotheses hold.

    Iteration order is rk(c), then deg U, then deg U′, each ascending. The
    scenarios carry ``family``.
    """
    for rk_c, deg_u, deg_uprime in itertools.product(
        range(n + 1), deg_u_range, deg_uprime_range
    ):
        scenario = MWScenario(n, genus, d, deg_u, deg_uprime, rk_c, family=family)
        if all(scenario.hypotheses().values()):
            yield scenario


@dataclasses.dataclass(frozen=True)
class SoundnessReport:
    """Outcome of the exhaustive soundness search.

    Attributes:
        n_checked: The number of integer tuples examined.
        n_satisfying: The number on which all hypotheses hold.
        counterexamples: Tuples (n, g, d, deg U, deg U′, rk c) that satisfy the
            hypotheses but violate d ≤ (g − 1) rk(c).
    """

    n_checked: int
    n_satisfying: int
    counterexamples: tuple[tuple[int, ...], ...]

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def _json_(self) -> dict[str, Any]:
        return {
            "n_checked": self.n_checked,
            "n_satisfying": self.n_satisfying,
            "counterexamples": [list(c) for c in self.counterexamples],
            "passed": self.passed,
        }


def soundness_search(
    max_n: int = 3, max_genus: int = 5, radius: int = 20
) -> SoundnessReport:
    """Check d ≤ (g − 1) rk(c) on every box tuple satisfying the hypotheses.

    The box is 1 ≤ n ≤ max_n, 2 ≤ g ≤ max_genus, 0 ≤ rk(c) ≤ n,
    |deg U|, |deg U′| ≤ radius and 1 ≤ d ≤ 2 radius.

    Returns:
        The report, with counterexamples in lexicographic order.
    """
    values = np.arange(-radius, radius + 1, dtype=np.int64)
    ds = np.arange(1, 2 * radius + 1, dtype=np.int64)
    d, deg_u, deg_uprime = np.meshgrid(ds, values, values, indexing="ij")
    n_checked = 0
    n_satisfying = 0
    counterexamples: list[tuple[int, ...]] = []
    for n in range(1, max_n + 1):
        for genus in range(2, max_genus + 1):
            for rk_c in range(n + 1):
                holds = (
                    (deg_uprime <= 0)
                    & (d + deg_u <= 0)
                    & (deg_uprime - d + deg_u + (2 * genus - 2) * rk_c >= 0)
                )
                bad = holds & (d > (genus - 1) * rk_c)
                n_checked += d.size
                n_satisfying += int(np.count_nonzero(holds))
                for i, j, k in np.argwhere(bad):
                    counterexamples.append(
                        (
                            n,
                            genus,
                            int(d[i, j, k]),
                            int(deg_u[i, j, k]),
                            int(deg_uprime[i, j, k]),
                            rk_c,
                        )
                    )
    logger.debug(
        "Milnor-Wood soundness: %d tuples, %d satisfying, %d counterexamples",
        n_checked,
        n_satisfying,
        len(counterexamples),
    )
    return SoundnessReport(n_checked, n_satisfying, tuple(sorted(counterexamples)))
