# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Exceptions raised by higgs-census."""

from __future__ import annotations


class DomainError(ValueError):
    """An operation was called outside the range where it is defined.

    Examples are the slope of a zero-rank class, a degree outside the
    Milnor–Wood range, or h⁰ of a line bundle whose numerical class does not
    determine it.
    """


class InvariantViolationError(ValueError):
    """An input object violates a structural invariant.

    Raised for malformed gradings, arrows that do not raise weight by one,
    arrows inside a single block, nonzero total degree and similar defects.
    """
