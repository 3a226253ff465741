# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Tests for the JSON protocol."""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import NamedTuple

import numpy as np
import orjson
import pytest

from higgs_census import BundleClass, DomainError, GroupFamily
from higgs_census.linalg import AffineForm, le
from higgs_census.protocols import dumps, to_json_data


class Pair(NamedTuple):
    left: int
    right: Fraction


@dataclasses.dataclass
class Record:
    name: str
    values: frozenset[int]


def test_plain_values():
    """Test conversion of scalars and containers."""
    assert to_json_data(None) is None
    assert to_json_data(True) is True
    assert to_json_data(np.int64(3)) == 3
    assert to_json_data(Fraction(-3, 2)) == "-3/2"
    assert to_json_data(GroupFamily.SU_NN) == GroupFamily.SU_NN.value
    assert to_json_data((1, [2, Fraction(1, 2)])) == [1, [2, "1/2"]]
    assert to_json_data({1: "a"}) == {"1": "a"}
    assert to_json_data(np.array([1, 2])) == [1, 2]


def test_structured_values():
    """Test conversion of records and objects with a JSON method."""
    assert to_json_data(Pair(1, Fraction(2))) == {"left": 1, "right": "2"}
    assert to_json_data(Record("r", frozenset({3, 1, 2}))) == {
        "name": "r",
        "values": [1, 2, 3],
    }
    x = AffineForm.variable("x")
    assert to_json_data(BundleClass(2, x + 1)) == {"rank": 2, "degree": "x + 1"}
    assert to_json_data(2 * x - 3) == "2*x - 3"
    assert to_json_data(le(x, 1, "bound")) == str(le(x, 1, "bound"))


def test_errors():
    """Test values that cannot be converted."""
    with pytest.raises(DomainError):
        to_json_data(1 << 64)
    with pytest.raises(TypeError):
        to_json_data(object())


def test_dumps():
    """Test serialization with sorted keys."""
    document = dumps({"b": 1, "a": Fraction(1, 3)}, indent=False)
    assert document == b'{"a":"1/3","b":1}'
    indented = dumps({"b": [1]})
    assert indented.startswith(b"{\n  ")
    assert orjson.loads(indented) == {"b": [1]}
