# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""The groups whose Higgs bundles are studied."""

from __future__ import annotations

import dataclasses
import enum
import re

from higgs_census.exceptions import DomainError


class GroupFamily(enum.Enum):
    """A family of groups indexed by a positive integer n."""

    SU_NN = "su"
    """The real form SU(n,n); E = V ⊕ V′ with rk V = rk V′ = n."""

    SP_2N_R = "sp"
    """The real form Sp(2n,ℝ); E = V ⊕ V* with rk V = n."""

    SL_N_C = "sl"
    """The complex group SL(n,ℂ); E has rank n."""


@dataclasses.dataclass(frozen=True)
class GroupType:
    """A group from one of the supported families.

    Attributes:
        family: The family.
        n: The family parameter.
    """

    family: GroupFamily
    n: int

    def __post_init__(self):
        minimum = 2 if self.family is GroupFamily.SL_N_C else 1
        if self.n < minimum:
            raise DomainError(
                f"{self.family.name} needs n >= {minimum}. Got n = {self.n}."
            )

    @staticmethod
    def su(n: int) -> GroupType:
        """Return SU(n,n)."""
        return GroupType(GroupFamily.SU_NN, n)

    @staticmethod
    def sp(n: int) -> GroupType:
        """Return Sp(2n,ℝ)."""
        return GroupType(GroupFamily.SP_2N_R, n)

    @staticmethod
    def sl(n: int) -> GroupType:
        """Return SL(n,ℂ)."""
        return GroupType(GroupFamily.SL_N_C, n)

    @staticmethod
    def from_tag(tag: str) -> GroupType:
        """Parse a group tag such as ``su22``, ``sp4r`` or ``sl3c``.

        Raises:
            DomainError: The tag is not recognized.
        """
        tag = tag.strip().lower()
        if match := re.fullmatch(r"su(\d+)", tag):
            digits = match.group(1)
            half = len(digits) // 2
            if len(digits) % 2 == 0 and digits[:half] == digits[half:]:
                return GroupType.su(int(digits[:half]))
        elif match := re.fullmatch(r"sp(\d+)r", tag):
            size = int(match.group(1))
            if size % 2 == 0:
                return GroupType.sp(size // 2)
        elif match := re.fullmatch(r"sl(\d+)c", tag):
            return GroupType.sl(int(match.group(1)))
        raise DomainError(
            f"Unrecognized group tag {tag!r}. "
            "Expected su<n><n>, sp<2n>r or sl<n>c, e.g. su22, sp4r, sl2c."
        )

    @property
    def tag(self) -> str:
        """The short tag of the group, inverse to :meth:`from_tag`."""
        if self.family is GroupFamily.SU_NN:
            return f"su{self.n}{self.n}"
        if self.family is GroupFamily.SP_2N_R:
            return f"sp{2 * self.n}r"
        return f"sl{self.n}c"

    @property
    def is_complex(self) -> bool:
        """Whether the group is a complex group rather than a real form."""
        return self.family is GroupFamily.SL_N_C

    @property
    def is_two_block(self) -> bool:
        """Whether E splits into two blocks interchanged by Φ."""
        return not self.is_complex

    @property
    def rank_e(self) -> int:
        """The rank of the vector bundle E of the standard representation."""
        if self.family is GroupFamily.SL_N_C:
            return self.n
        return 2 * self.n

    @property
    def dim_g(self) -> int:
        """The complex dimension of the complexified Lie algebra."""
        n = self.n
        if self.family is GroupFamily.SU_NN:
            return (2 * n) ** 2 - 1
        if self.family is GroupFamily.SP_2N_R:
            return n * (2 * n + 1)
        return n**2 - 1

    def __str__(self) -> str:
        if self.family is GroupFamily.SU_NN:
            return f"SU({self.n},{self.n})"
        if self.family is GroupFamily.SP_2N_R:
            return f"Sp({2 * self.n},R)"
        return f"SL({self.n},C)"

    def _json_(self) -> str:
        return self.tag
