# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Mod-2 cohomology of a surface, Stiefel–Whitney classes and Prym labels."""

from __future__ import annotations

import dataclasses
import enum
import functools
import itertools
from collections.abc import Iterator, Sequence
from typing import Any

import numpy as np

from higgs_census.exceptions import DomainError, InvariantViolationError

EXHAUSTIVE_MAX_GENUS = 4


def _bits_of(value: int, length: int) -> tuple[int, ...]:
    return tuple((value >> k) & 1 for k in range(length))


def all_vectors(genus: int) -> np.ndarray:
    """Every vector of 𝔽₂^{2g} as the rows of a uint8 matrix.

    Row k holds the little-endian bits of k, so that XOR of row indices is
    addition of vectors.
    """
    n = 2 * genus
    indices = np.arange(1 << n, dtype=np.uint64)
    return ((indices[:, None] >> np.arange(n, dtype=np.uint64)) & 1).astype(np.uint8)


def symplectic_gram(genus: int) -> np.ndarray:
    """The Gram matrix of the intersection form in the basis a₁..a_g, b₁..b_g."""
    eye = np.eye(genus, dtype=np.uint8)
    zero = np.zeros((genus, genus), dtype=np.uint8)
    return np.block([[zero, eye], [eye, zero]])


@dataclasses.dataclass(frozen=True)
class H1Class:
    """A class in H¹(Σ; ℤ/2) ≅ 𝔽₂^{2g}.

    Attributes:
        bits: The coordinates in the symplectic basis a₁, ..., a_g, b₁, ..., b_g.
    """

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if len(bits) % 2 or not bits:
            raise InvariantViolationError(
                f"H1 classes need an even positive number of bits. Got {len(bits)}."
            )
        if any(b not in (0, 1) for b in bits):
            raise InvariantViolationError(f"Bits must be 0 or 1. Got {bits}.")
        object.__setattr__(self, "bits", bits)

    @staticmethod
    def zero(genus: int) -> H1Class:
        return H1Class((0,) * (2 * genus))

    @staticmethod
    def from_int(value: int, genus: int) -> H1Class:
        """The class whose k-th coordinate is bit k of value."""
        if not 0 <= value < 1 << (2 * genus):
            raise DomainError(f"{value} does not encode a class for genus {genus}.")
        return H1Class(_bits_of(value, 2 * genus))

    @staticmethod
    def from_string(text: str) -> H1Class:
        """Parse a bit string such as ``"1000"``."""
        if not text or any(c not in "01" for c in text):
            raise DomainError(f"Expected a string of 0s and 1s. Got {text!r}.")
        return H1Class(tuple(int(c) for c in text))

    @staticmethod
    def basis(genus: int, k: int) -> H1Class:
        return H1Class(tuple(int(i == k) for i in range(2 * genus)))

    @property
    def genus(self) -> int:
        return len(self.bits) // 2

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)

    def to_int(self) -> int:
        return sum(b << k for k, b in enumerate(self.bits))

    def is_zero(self) -> bool:
        return not any(self.bits)

    def __add__(self, other: H1Class) -> H1Class:
        if self.genus != other.genus:
            raise DomainError("Cannot add classes of different genera.")
        return H1Class(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def _json_(self) -> str:
        return str(self)


def all_classes(genus: int) -> Iterator[H1Class]:
    """Every class of H¹(Σ; ℤ/2), in the order of :func:`all_vectors`."""
    for value in range(1 << (2 * genus)):
        yield H1Class.from_int(value, genus)


def pairing(u: H1Class, v: H1Class, form: np.ndarray | None = None) -> int:
    """The intersection pairing ⟨u, v⟩, or the bilinear form given by a matrix."""
    if form is None:
        form = symplectic_gram(u.genus)
    x = u.vector.astype(np.int64)
    y = v.vector.astype(np.int64)
    return int((x @ form.astype(np.int64) @ y) % 2)


@dataclasses.dataclass(frozen=True)
class SWClass:
    """A total Stiefel–Whitney class (1, u, v) with u ∈ H¹ and v ∈ H² = ℤ/2.

    Attributes:
        u: The degree-1 part w₁.
        v: The degree-2 part w₂.
    """

    u: H1Class
    v: int

    def __post_init__(self):
        if self.v not in (0, 1):
            raise InvariantViolationError(f"v must be 0 or 1. Got {self.v}.")

    @staticmethod
    def identity(genus: int) -> SWClass:
        return SWClass(H1Class.zero(genus), 0)

    @staticmethod
    def point_class(genus: int) -> SWClass:
        """(1, 0, 1), the class of the reduced tautological element."""
        return SWClass(H1Class.zero(genus), 1)

    def __mul__(self, other: SWClass) -> SWClass:
        return sw_multiply(self, other)

    def __str__(self) -> str:
        return f"(1, {self.u}, {self.v})"

    def _json_(self) -> dict[str, Any]:
        return {"u": str(self.u), "v": self.v}


def all_sw_classes(genus: int) -> Iterator[SWClass]:
    for u in all_classes(genus):
        for v in (0, 1):
            yield SWClass(u, v)


def sw_multiply(x: SWClass, y: SWClass, form: np.ndarray | None = None) -> SWClass:
    """Multiply in the cohomology ring: (1,u,v)(1,u′,v′) = (1, u+u′, v+v′+⟨u,u′⟩)."""
    return SWClass(x.u + y.u, (x.v + y.v + pairing(x.u, y.u, form)) % 2)


class QuadraticRefinement:
    """A quadratic form q on 𝔽₂^{2g} refining a bilinear form.

    q(u + u′) = q(u) + q(u′) + ⟨u, u′⟩ determines q from its values on the basis:
    q(x) = Σ xₖ q(eₖ) + Σ_{i<j} xᵢ xⱼ ⟨eᵢ, eⱼ⟩.
    """

    def __init__(
        self,
        genus: int,
        values: Sequence[int],
        form: np.ndarray | None = None,
    ):
        """Initialize the refinement.

        Args:
            genus: The genus.
            values: q on the basis a₁, ..., a_g, b₁, ..., b_g.
            form: The bilinear form. Defaults to the intersection form.

        Raises:
            InvariantViolationError: The values are not 2g bits.
        """
        values = tuple(int(v) for v in values)
        if len(values) != 2 * genus or any(v not in (0, 1) for v in values):
            raise InvariantViolationError(
                f"Expected {2 * genus} basis values in {{0, 1}}. Got {values}."
            )
        self.genus = genus
        self.values = values
        self.form = symplectic_gram(genus) if form is None else form
        self._upper = np.triu(self.form.astype(np.int64), k=1)

    def __call__(self, u: H1Class) -> int:
        x = u.vector.astype(np.int64)
        return int((x @ np.array(self.values) + x @ self._upper @ x) % 2)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadraticRefinement):
            return NotImplemented
        return (
            self.genus == other.genus
            and self.values == other.values
            and np.array_equal(self.form, other.form)
        )

    def __hash__(self) -> int:
        return hash((self.genus, self.values))

    def __repr__(self) -> str:
        return f"QuadraticRefinement(genus={self.genus}, values={self.values})"

    def table(self) -> np.ndarray:
        """q on every vector, in the order of :func:`all_vectors`."""
        x = all_vectors(self.genus).astype(np.int64)
        linear = x @ np.array(self.values, dtype=np.int64)
        quadratic = np.einsum("ki,ij,kj->k", x, self._upper, x)
        return ((linear + quadratic) % 2).astype(np.uint8)

    @property
    def arf(self) -> int:
        """The Arf invariant: the value q takes most often."""
        table = self.table()
        return int(2 * int(np.count_nonzero(table)) > table.size)

    def arf_from_basis(self) -> int:
        """The Arf invariant Σ q(aᵢ) q(bᵢ) in the standard symplectic basis."""
        g = self.genus
        return sum(self.values[i] * self.values[g + i] for i in range(g)) % 2

    def compose(self, matrix: np.ndarray) -> QuadraticRefinement:
        """The refinement x ↦ q(Mx) for a symplectic matrix M."""
        images = (matrix.astype(np.int64) % 2).T
        values = [self(H1Class(tuple(int(b) for b in column))) for column in images]
        return QuadraticRefinement(self.genus, values, self.form)

    def _json_(self) -> dict[str, Any]:
        return {"genus": self.genus, "values": "".join(map(str, self.values))}


def quadratic_refinements(genus: int) -> list[QuadraticRefinement]:
    """All 2^{2g} refinements of the intersection form."""
    return [
        QuadraticRefinement(genus, values)
        for values in itertools.product((0, 1), repeat=2 * genus)
    ]


def refinement_counts(genus: int) -> tuple[int, int]:
    """The numbers of refinements with Arf invariant 0 and 1.

    These are 2^{g−1}(2^g + 1) and 2^{g−1}(2^g − 1).
    """
    half = 1 << (genus - 1)
    return half * ((1 << genus) + 1), half * ((1 << genus) - 1)


def delta(q: QuadraticRefinement, x: SWClass) -> int:
    """The homomorphism δ(1, u, v) = q(u) + v to ℤ/2 determined by q."""
    return (q(x.u) + x.v) % 2


class PrymComponent(enum.Enum):
    """The two components of the Prym variety of a double cover."""

    PLUS = "P+"
    """δ = 0."""

    MINUS = "P-"
    """δ = 1."""


def prym_component(q: QuadraticRefinement, u: H1Class, w2: int) -> PrymComponent:
    """Label the Prym component of rank-2 orthogonal data with w₁ = u and w₂.

    The label is δ(1, u, w₂), read as P+ for 0 and P− for 1. It depends on the
    refinement q, which stands for the choice of a square root of K; changing
    w₂ always changes the label.

    Raises:
        DomainError: u = 0, so there is no double cover.
    """
    if u.is_zero():
        raise DomainError("w1 must be nonzero to define a double cover.")
    if w2 not in (0, 1):
        raise DomainError(f"w2 must be 0 or 1. Got {w2}.")
    value = delta(q, SWClass(u, w2))
    return PrymComponent.PLUS if value == 0 else PrymComponent.MINUS


@dataclasses.dataclass(frozen=True)
class HomomorphismReport:
    """The outcome of checking δ(xy) = δ(x) + δ(y).

    Attributes:
        n_pairs: The number of pairs (x, y) of group elements checked.
        n_failures: The number of pairs on which the identity fails.
        exhaustive: Whether every pair was checked.
    """

    n_pairs: int
    n_failures: int
    exhaustive: bool

    @property
    def passed(self) -> bool:
        return self.n_failures == 0

    def _json_(self) -> dict[str, Any]:
        return {
            "n_pairs": self.n_pairs,
            "n_failures": self.n_failures,
            "exhaustive": self.exhaustive,
            "passed": self.passed,
        }


def _element_index(x: SWClass) -> int:
    return 2 * x.u.to_int() + x.v


@functools.cache
def _product_table(genus: int, form_bytes: bytes) -> np.ndarray:
    """Indices of x·y for every pair of group elements, under a given form."""
    n = 2 * genus
    form = np.frombuffer(form_bytes, dtype=np.uint8).reshape(n, n)
    elements = list(all_sw_classes(genus))
    return np.array(
        [[_element_index(sw_multiply(x, y, form)) for y in elements] for x in elements],
        dtype=np.int64,
    )


def homomorphism_check(
    q: QuadraticRefinement,
    *,
    form: np.ndarray | None = None,
    seed=None,
    n_samples: int = 10_000,
) -> HomomorphismReport:
    """Check that δ is a homomorphism on the Stiefel–Whitney group.

    Products use the bilinear form ``form`` (the intersection form by default),
    so passing a form that q does not refine exhibits failures. When g ≤ 4 every
    pair of the 2^{2g+1} group elements is multiplied and δ is evaluated on the
    product; otherwise ``n_samples`` random pairs are.

    Args:
        q: The refinement.
        form: The bilinear form used for products.
        seed: A seed to initialize the pseudorandom number generator.
            Should be a valid input to ``np.random.default_rng``.
        n_samples: The number of random pairs when g > 4.

    Returns:
        The report.
    """
    genus = q.genus
    form = symplectic_gram(genus) if form is None else form
    form = (np.asarray(form) % 2).astype(np.uint8)
    if genus <= EXHAUSTIVE_MAX_GENUS:
        values = np.array([delta(q, x) for x in all_sw_classes(genus)], dtype=np.int64)
        products = _product_table(genus, form.tobytes())
        lhs = values[products]
        rhs = (values[:, None] + values[None, :]) % 2
        failures = int(np.count_nonzero(lhs != rhs))
        return HomomorphismReport(products.size, failures, True)
    rng = np.random.default_rng(seed)
    failures = 0
    for _ in range(n_samples):
        x, y = (
            SWClass(
                H1Class.from_int(int(rng.integers(1 << (2 * genus))), genus),
                int(rng.integers(2)),
            )
            for _ in range(2)
        )
        product = sw_multiply(x, y, form)
        failures += int(delta(q, product) != (delta(q, x) + delta(q, y)) % 2)
    return HomomorphismReport(n_samples, failures, False)


def transvection(u: H1Class, form: np.ndarray | None = None) -> np.ndarray:
    """The matrix of the symplectic transvection x ↦ x + ⟨x, u⟩ u."""
    form = symplectic_gram(u.genus) if form is None else form
    vector = u.vector.astype(np.int64)
    matrix = np.eye(2 * u.genus, dtype=np.int64) + np.outer(
        vector, vector @ form.astype(np.int64)
    )
    return (matrix % 2).astype(np.uint8)


def is_symplectic(matrix: np.ndarray, form: np.ndarray | None = None) -> bool:
    """Whether Mᵀ J M = J over 𝔽₂."""
    genus = matrix.shape[0] // 2
    form = symplectic_gram(genus) if form is None else form
    m = matrix.astype(np.int64)
    return bool(np.array_equal((m.T @ form.astype(np.int64) @ m) % 2, form % 2))
