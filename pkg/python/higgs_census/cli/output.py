# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Output documents of the command-line interface."""

from __future__ import annotations

import csv
import enum
from collections.abc import Mapping, Sequence
from typing import IO, Any

from higgs_census.protocols import dumps, to_json_data

SCHEMA_VERSION = 1


class Status(enum.Enum):
    """The status field of an output document."""

    OK = "ok"
    """The command succeeded and every check passed."""

    FAIL = "fail"
    """At least one invariant check failed."""

    NOT_DETERMINED = "not determined"
    """The requested value is not established."""

    ERROR = "error"
    """The inputs were rejected."""


def envelope(command: str, status: Status, result: Any) -> dict[str, Any]:
    """Wrap a result in the versioned document envelope."""
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "status": status.value,
        "result": to_json_data(result),
    }


def write_json(document: Mapping[str, Any], stream: IO[str]) -> None:
    stream.write(dumps(document).decode())
    stream.write("\n")


def _cell(value: Any) -> str:
    value = to_json_data(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return dumps(value, indent=False).decode()
    return str(value)


def flatten(result: Any) -> list[dict[str, Any]]:
    """Turn a single JSON result into a one-row table."""
    data = to_json_data(result)
    if isinstance(data, dict):
        return [data]
    return [{"value": data}]


def write_tsv(rows: Sequence[Mapping[str, Any]], stream: IO[str]) -> None:
    """Write rows as a tab-separated table.

    Columns follow the keys of the first row, and rows are written in the given
    order.
    """
    if not rows:
        return
    writer = csv.DictWriter(
        stream, fieldnames=list(rows[0]), delimiter="\t", lineterminator="\n"
    )
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(value) for key, value in row.items()})
