# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""JSON protocol."""

from __future__ import annotations

import dataclasses
import enum
from collections.abc import Mapping
from fractions import Fraction
from typing import Any, Protocol

import numpy as np
import orjson

from higgs_census.exceptions import DomainError
from higgs_census.linalg import AffineForm, LinearConstraint

_INT64_MIN = -(1 << 63)
_INT64_MAX = (1 << 63) - 1


class SupportsJson(Protocol):
    """An object that can be converted to JSON data."""

    def _json_(self) -> Any:
        """Return plain data representing the object.

        The data may contain other objects supporting this protocol, fractions
        and enums; :func:`to_json_data` converts them recursively.
        """


def to_json_data(obj: Any) -> Any:
    """Return plain JSON data representing the object.

    Args:
        obj: The object to convert.

    Returns:
        Data made of dicts with string keys, lists, strings, booleans, None and
        integers. Fractions become ``"p/q"`` strings and enums their values.

    Raises:
        DomainError: An integer does not fit in a signed 64-bit integer.
        TypeError: The object cannot be converted.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        value = int(obj)
        if not _INT64_MIN <= value <= _INT64_MAX:
            raise DomainError(f"Integer {value} does not fit in 64 bits.")
        return value
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, enum.Enum):
        return to_json_data(obj.value)
    method = getattr(obj, "_json_", None)
    if method is not None:
        return to_json_data(method())
    if isinstance(obj, (AffineForm, LinearConstraint)):
        return str(obj)
    if isinstance(obj, Mapping):
        return {str(to_json_data(k)): to_json_data(v) for k, v in obj.items()}
    if isinstance(obj, tuple) and hasattr(obj, "_asdict"):
        return to_json_data(obj._asdict())
    if isinstance(obj, (list, tuple, set, frozenset, np.ndarray)):
        items = list(obj)
        if isinstance(obj, (set, frozenset)):
            items = sorted(items, key=repr)
        return [to_json_data(x) for x in items]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            field.name: to_json_data(getattr(obj, field.name))
            for field in dataclasses.fields(obj)
        }
    raise TypeError(f"Object of type {type(obj)} has no _json_ method.")


def dumps(obj: Any, *, indent: bool = True) -> bytes:
    """Serialize an object to JSON with sorted keys.

    Args:
        obj: The object to serialize.
        indent: Whether to indent with 2 spaces.

    Returns:
        The UTF-8 encoded document.
    """
    option = orjson.OPT_SORT_KEYS
    if indent:
        option |= orjson.OPT_INDENT_2
    return orjson.dumps(to_json_data(obj), option=option)
