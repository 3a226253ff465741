# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Connected components of the Sp(4,ℝ) and SU(2,2) moduli spaces."""

from __future__ import annotations

import dataclasses
import enum
import logging
from collections.abc import Iterable, Iterator
from fractions import Fraction
from typing import Any, NamedTuple, Optional

from higgs_census.bundle_class import (
    BundleClass,
    Curve,
    canonical,
    dual,
    h0_line,
    line_power,
    tensor,
    theta_characteristic,
)
from higgs_census.chain_oracle.models import ChainModel, closed_subsets
from higgs_census.chain_oracle.stability import is_stable_higgs
from higgs_census.exceptions import DomainError
from higgs_census.graded import Block
from higgs_census.groups import GroupFamily, GroupType
from higgs_census.milnor_wood import bound
from higgs_census.stiefel_whitney import H1Class, all_classes

logger = logging.getLogger(__name__)

SP4_REAL_DIMENSION = 10


class StratumKind(enum.Enum):
    """The three families of strata of the maximal Sp(4,ℝ) component."""

    NONORIENTABLE = "nonorientable"
    """w₁ = u ≠ 0 and w₂ = v."""

    ORIENTABLE = "orientable"
    """W = L ⊕ L⁻¹ with 0 ≤ deg L < 2g − 2."""

    MAXIMAL_ROOT = "maximal_root"
    """W = L ⊕ L⁻¹ with L² = K², one stratum per square root."""


_KIND_ORDER = {kind: k for k, kind in enumerate(StratumKind)}


@dataclasses.dataclass(frozen=True)
class Stratum:
    """A stratum of the Sp(4,ℝ) moduli space at d = 2g − 2.

    Attributes:
        kind: The family.
        genus: The genus.
        u: The first Stiefel–Whitney class, for nonorientable strata.
        v: The second Stiefel–Whitney class, for nonorientable strata.
        degree: deg L, for orientable strata.
        root: The 2-torsion class ξ with L = K ⊗ ξ, for maximal-root strata.
        connected: Whether the stratum is known to be connected.
    """

    kind: StratumKind
    genus: int
    u: Optional[H1Class] = None
    v: Optional[int] = None
    degree: Optional[int] = None
    root: Optional[H1Class] = None
    connected: bool = True

    @property
    def w1(self) -> H1Class:
        return self.u if self.u is not None else H1Class.zero(self.genus)

    @property
    def w2(self) -> int:
        if self.kind is StratumKind.NONORIENTABLE:
            return int(self.v)  # type: ignore[arg-type]
        if self.kind is StratumKind.ORIENTABLE:
            return int(self.degree) % 2  # type: ignore[arg-type]
        return (2 * self.genus - 2) % 2

    @property
    def label(self) -> str:
        if self.kind is StratumKind.NONORIENTABLE:
            return f"M^{self.v}_{self.u}"
        if self.kind is StratumKind.ORIENTABLE:
            return f"M_0^{self.degree}"
        return f"M_0,{self.root}^{2 * self.genus - 2}"

    def sort_key(self) -> tuple:
        parameters = (
            self.u.to_int() if self.u is not None else -1,
            self.v if self.v is not None else -1,
            self.degree if self.degree is not None else -1,
            self.root.to_int() if self.root is not None else -1,
        )
        return (_KIND_ORDER[self.kind], parameters)

    def row(self) -> dict[str, Any]:
        """A flat table row."""
        return {
            "kind": self.kind.value,
            "label": self.label,
            "w1": str(self.w1),
            "w2": self.w2,
            "deg_L": "" if self.degree is None else self.degree,
            "root": "" if self.root is None else str(self.root),
            "connected": self.connected,
        }

    def _json_(self) -> dict[str, Any]:
        return self.row()


class StratumFamily:
    """One family of strata, generated lazily from its parameter ranges."""

    def __init__(self, kind: StratumKind, curve: Curve):
        self.kind = kind
        self.curve = curve

    def __len__(self) -> int:
        g = self.curve.genus
        if self.kind is StratumKind.NONORIENTABLE:
            return 2 * ((1 << (2 * g)) - 1)
        if self.kind is StratumKind.ORIENTABLE:
            return 2 * g - 2
        return 1 << (2 * g)

    def __iter__(self) -> Iterator[Stratum]:
        g = self.curve.genus
        if self.kind is StratumKind.NONORIENTABLE:
            for u in all_classes(g):
                if u.is_zero():
                    continue
                for v in (0, 1):
                    yield Stratum(self.kind, g, u=u, v=v)
        elif self.kind is StratumKind.ORIENTABLE:
            for degree in range(2 * g - 2):
                yield Stratum(self.kind, g, degree=degree)
        else:
            for root in all_classes(g):
                yield Stratum(self.kind, g, degree=2 * g - 2, root=root)

    def __repr__(self) -> str:
        return f"StratumFamily({self.kind.value}, genus={self.curve.genus})"


@dataclasses.dataclass(frozen=True)
class StrataCensus:
    """The strata of the Sp(4,ℝ) moduli space at d = 2g − 2, family by family.

    Iterating yields the strata sorted by kind, then by parameters. The length
    is computed from the parameter ranges without generating any stratum.
    """

    curve: Curve
    families: tuple[StratumFamily, ...]

    def __len__(self) -> int:
        return sum(len(family) for family in self.families)

    def __iter__(self) -> Iterator[Stratum]:
        for family in self.families:
            yield from family

    def counts(self) -> dict[str, int]:
        return {family.kind.value: len(family) for family in self.families}

    def rows(self) -> list[dict[str, Any]]:
        return [stratum.row() for stratum in self]

    def _json_(self) -> dict[str, Any]:
        return {
            "genus": self.curve.genus,
            "counts": self.counts(),
            "total": len(self),
        }


def strata(curve: Curve) -> StrataCensus:
    """Return the strata of the Sp(4,ℝ) moduli space with d = 2g − 2.

    There are 2(2^{2g} − 1) nonorientable strata M^v_u, 2g − 2 strata M_0^l with
    0 ≤ l < 2g − 2, and 2^{2g} strata M_{0,L}^{2g−2}, one per square root L of
    K². Each is connected.
    """
    families = tuple(StratumFamily(kind, curve) for kind in StratumKind)
    return StrataCensus(curve, families)


class Determination(enum.Enum):
    """Whether a count is established."""

    DETERMINED = "determined"
    """The count is established."""

    NOT_DETERMINED = "not determined"
    """No established count exists for this group and degree."""


@dataclasses.dataclass(frozen=True)
class ComponentCount:
    """The number of connected components of a moduli space M_d.

    Attributes:
        group: The group.
        genus: The genus.
        d: The Toledo invariant.
        status: Whether the count is established.
        count: The count, or None when not determined.
        reason: Where the count comes from, or why it is missing.
    """

    group: GroupType
    genus: int
    d: int
    status: Determination
    count: Optional[int]
    reason: str

    @property
    def determined(self) -> bool:
        return self.status is Determination.DETERMINED

    def _json_(self) -> dict[str, Any]:
        return {
            "group": self.group.tag,
            "genus": self.genus,
            "d": self.d,
            "status": self.status.value,
            "count": self.count,
            "reason": self.reason,
        }


def maximal_component_count(curve: Curve) -> int:
    """3·2^{2g} + 2g − 4."""
    return 3 * (1 << (2 * curve.genus)) + 2 * curve.genus - 4


def count_components(group: GroupType, curve: Curve, d: int) -> ComponentCount:
    """Count the connected components of M_d.

    Counts are reported only where they are established: M_d is empty beyond the
    Milnor–Wood bound; for SU(2,2) it is connected for d ∈ {0, ±(2g − 2)}; for
    Sp(4,ℝ) it is connected for d = 0 and has 3·2^{2g} + 2g − 4 components for
    |d| = 2g − 2. Anything else is reported as not determined.
    """
    g = curve.genus

    def result(status: Determination, count: int | None, reason: str):
        return ComponentCount(group, g, d, status, count, reason)

    if group.family is GroupFamily.SL_N_C:
        return result(
            Determination.NOT_DETERMINED, None, "no count for complex groups"
        )
    limit = bound(group.n, g)
    if abs(d) > limit:
        return result(
            Determination.DETERMINED, 0, f"empty: |d| exceeds the bound {limit}"
        )
    if group.n != 2:
        return result(Determination.NOT_DETERMINED, None, "only rank 4 is covered")
    if group.family is GroupFamily.SU_NN and d in (0, limit, -limit):
        return result(Determination.DETERMINED, 1, "connected")
    if group.family is GroupFamily.SP_2N_R:
        if d == 0:
            return result(Determination.DETERMINED, 1, "connected")
        if abs(d) == limit:
            return result(
                Determination.DETERMINED,
                maximal_component_count(curve),
                "strata of the maximal component",
            )
    return result(
        Determination.NOT_DETERMINED,
        None,
        "expected connected, but no count is established",
    )


def total_lower_bound(curve: Curve) -> int:
    """The stated lower bound 3·2^{2g} + 8g − 13 on the total number of components."""
    return 3 * (1 << (2 * curve.genus)) + 8 * curve.genus - 13


class LowerBoundReport(NamedTuple):
    """Both ways of bounding the total number of Sp(4,ℝ) components.

    ``naive_sum`` adds the established counts over all d and counts one component
    for each other nonempty M_d. The two values are reported side by side and are
    not asserted against each other.
    """

    stated: int
    naive_sum: int
    undetermined_degrees: tuple[int, ...]

    def _json_(self) -> dict[str, Any]:
        return {
            "stated": self.stated,
            "naive_sum": self.naive_sum,
            "undetermined_degrees": list(self.undetermined_degrees),
        }


def lower_bound_report(curve: Curve) -> LowerBoundReport:
    group = GroupType.sp(2)
    limit = bound(2, curve.genus)
    total = 0
    undetermined = []
    for d in range(-limit, limit + 1):
        count = count_components(group, curve, d)
        if count.determined:
            total += int(count.count)  # type: ignore[arg-type]
        else:
            undetermined.append(d)
            total += 1
    return LowerBoundReport(total_lower_bound(curve), total, tuple(undetermined))


class TeichmullerDims(NamedTuple):
    """The dimensions describing the Teichmüller components.

    Attributes:
        vector_space: (h⁰(K²), h⁰(K²), h⁰(K⁴)), the summands of the complex vector
            space parametrizing a Teichmüller component.
        hitchin_dim: The real dimension (2g − 2)·dim Sp(4,ℝ) of the Hitchin
            component.
    """

    vector_space: tuple[int, int, int]
    hitchin_dim: int

    def _json_(self) -> dict[str, Any]:
        return {
            "vector_space": list(self.vector_space),
            "hitchin_dim": self.hitchin_dim,
        }


def teichmuller_dims(curve: Curve) -> TeichmullerDims:
    k = canonical(curve)
    quadratic = h0_line(line_power(k, 2), curve)
    quartic = h0_line(line_power(k, 4), curve)
    return TeichmullerDims(
        (quadratic, quadratic, quartic),
        (2 * curve.genus - 2) * SP4_REAL_DIMENSION,
    )


@dataclasses.dataclass(frozen=True)
class TriplesLabel:
    """The holomorphic triple attached to the SU(2,2) minima with Toledo invariant d.

    The minima are triples (V, Ṽ′, γ) with rk V = rk Ṽ′ = 2, deg V = d and
    deg Ṽ′ = 2g − 2 − d, with γ: Ṽ′ → V.

    Attributes:
        d: The Toledo invariant.
        genus: The genus.
        rank_v: rk V.
        rank_v_tilde: rk Ṽ′.
        deg_v: deg V.
        deg_v_tilde: deg Ṽ′.
        note: A description of the minima at the ends of the range.
        flagged: The Sp(4,ℝ) version of the identification is keyed to the quiver
            correspondence, not to a displayed involution formula.
    """

    d: int
    genus: int
    rank_v: int
    rank_v_tilde: int
    deg_v: int
    deg_v_tilde: int
    note: str
    flagged: bool = True

    def _json_(self) -> dict[str, Any]:
        return dataclasses.asdict(self)


def triples_label(d: int, curve: Curve) -> TriplesLabel:
    """Return the triple numerical data for minima with Toledo invariant d.

    Raises:
        DomainError: |d| > 2g − 2.
    """
    g = curve.genus
    top = 2 * g - 2
    if abs(d) > top:
        raise DomainError(f"Need |d| <= {top}. Got {d}.")
    if d == top:
        note = (
            "minima form the moduli space of rank 2, degree 2g-2 bundles "
            "with fixed determinant"
        )
    elif d == 0:
        note = "minima have zero Higgs field"
    else:
        note = "minima are stable triples"
    return TriplesLabel(d, g, 2, 2, d, top - d, note)


@dataclasses.dataclass(frozen=True)
class WReduction:
    """The data (W, C, φ) equivalent to a Higgs bundle with maximal Toledo invariant.

    With L₀ a square root of K, W = V ⊗ L₀⁻¹ carries the orthogonal structure
    C = c ⊗ 1 and φ = (b ⊗ 1) ∘ (c ⊗ 1) ∈ H⁰(End W ⊗ K²).

    Attributes:
        n: The rank of V.
        genus: The genus.
        v_class: The class of V.
        square_root: The class of L₀.
        w_class: The class of W.
        phi_twist: The class of K².
        quadratic_form: C is a nondegenerate quadratic form on W.
        phi_symmetric: φ is symmetric with respect to C.
    """

    n: int
    genus: int
    v_class: BundleClass
    square_root: BundleClass
    w_class: BundleClass
    phi_twist: BundleClass
    quadratic_form: bool = True
    phi_symmetric: bool = True

    def _json_(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "genus": self.genus,
            "v": self.v_class._json_(),
            "square_root": self.square_root._json_(),
            "w": self.w_class._json_(),
            "phi_twist": self.phi_twist._json_(),
            "quadratic_form": self.quadratic_form,
            "phi_symmetric": self.phi_symmetric,
        }


def w_reduce(n: int, curve: Curve, deg_v: int | None = None) -> WReduction:
    """Pass from V to W = V ⊗ L₀⁻¹ in the extremal case deg V = n(g − 1).

    Args:
        n: The rank of V.
        curve: The curve.
        deg_v: deg V. Defaults to n(g − 1).

    Raises:
        DomainError: deg V is not n(g − 1). For d = −n(g − 1) apply the reduction
            to the dual Higgs bundle.
    """
    top = bound(n, curve.genus)
    if deg_v is None:
        deg_v = top
    if deg_v != top:
        raise DomainError(f"The reduction needs deg V = {top}. Got {deg_v}.")
    v_class = BundleClass(n, deg_v)
    square_root = theta_characteristic(curve)
    w_class = tensor(v_class, dual(square_root))
    return WReduction(
        n,
        curve.genus,
        v_class,
        square_root,
        w_class,
        line_power(canonical(curve), 2),
    )


class OrthogonalSplit(NamedTuple):
    """Invariants of a rank-2 orthogonal bundle W = L ⊕ L⁻¹ in a stable triple."""

    deg_l: int
    w1: H1Class
    w2: int


def orthogonal_split_invariants(curve: Curve, deg_l: int) -> OrthogonalSplit:
    """Stiefel–Whitney classes of W = L ⊕ L⁻¹.

    w₁ vanishes and w₂ = deg L mod 2. Stability of (W, C, φ) forces
    0 ≤ deg L ≤ 2g − 2 after ordering L and L⁻¹.

    Raises:
        DomainError: deg L lies outside [0, 2g − 2].
    """
    top = 2 * curve.genus - 2
    if not 0 <= deg_l <= top:
        raise DomainError(f"Need 0 <= deg L <= {top}. Got {deg_l}.")
    return OrthogonalSplit(deg_l, H1Class.zero(curve.genus), deg_l % 2)


def _phi_arrows(model: ChainModel) -> set[tuple[int, int]]:
    v_nodes = {s.index for s in model.summands if s.block is Block.V}
    return {
        (i, j)
        for i, k in model.arrows
        if i in v_nodes
        for k2, j in model.arrows
        if k2 == k and j in v_nodes
    }


def w_side_stable(model: ChainModel) -> bool:
    """Stability of (W, C, φ) for a split extremal Sp(4,ℝ) model.

    The model is stable exactly when every proper nonzero φ-invariant sum of
    summands U ⊂ V has μ(U) < g − 1, i.e. μ(U ⊗ L₀⁻¹) < 0. Here i → j in φ when Φ
    takes summand i to some summand of V* and that one on to j.

    Raises:
        DomainError: The model is not an Sp(4,ℝ) model with deg V = 2g − 2.
    """
    if model.group != GroupType.sp(2):
        raise DomainError(f"Expected an Sp(4,R) model. Got {model.group}.")
    v_nodes = [s.index for s in model.summands if s.block is Block.V]
    top = bound(2, model.curve.genus)
    if model.class_of(v_nodes).degree != top:
        raise DomainError(f"Expected deg V = {top}.")
    threshold = Fraction(model.curve.genus - 1)
    for subset in closed_subsets(v_nodes, _phi_arrows(model)):
        if not subset or len(subset) == len(v_nodes):
            continue
        cls = model.class_of(subset)
        if Fraction(int(cls.degree), cls.rank) >= threshold:
            return False
    return True


@dataclasses.dataclass(frozen=True)
class TransferReport:
    """Agreement between the stability of (E, Φ) and of (W, C, φ).

    Attributes:
        n_models: The number of models checked.
        n_stable: The number of stable models.
        mismatches: The models on which the two verdicts differ.
    """

    n_models: int
    n_stable: int
    mismatches: tuple[ChainModel, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def _json_(self) -> dict[str, Any]:
        return {
            "n_models": self.n_models,
            "n_stable": self.n_stable,
            "mismatches": [m._json_() for m in self.mismatches],
            "passed": self.passed,
        }


def check_stability_transfer(models: Iterable[ChainModel]) -> TransferReport:
    """Compare the stability of each extremal model on the E side and the W side."""
    n_models = 0
    n_stable = 0
    mismatches = []
    for model in models:
        n_models += 1
        e_stable = is_stable_higgs(model).stable
        n_stable += e_stable
        if e_stable != w_side_stable(model):
            mismatches.append(model)
    logger.debug(
        "Checked %d extremal models, %d stable, %d mismatches",
        n_models,
        n_stable,
        len(mismatches),
    )
    return TransferReport(n_models, n_stable, tuple(mismatches))
