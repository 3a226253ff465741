# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Run configuration for the command-line interface."""

from __future__ import annotations

import dataclasses
import enum
import os
from collections.abc import Mapping
from fractions import Fraction
from typing import Any, Optional

from higgs_census.bundle_class import BundleClass, Curve
from higgs_census.exceptions import DomainError
from higgs_census.graded import Block, GradedBundle, GradedSummand, Weight
from higgs_census.groups import GroupType
from higgs_census.milnor_wood import bound

THREADS_ENV_VAR = "HIGGS_CENSUS_THREADS"


class UsageError(Exception):
    """The command line or the environment is malformed."""


class OutputFormat(enum.Enum):
    """The format of the output document."""

    JSON = "json"
    """A JSON envelope."""

    TSV = "tsv"
    """A tab-separated table with a header row."""


def max_workers_from_env(environ: Mapping[str, str] | None = None) -> int | None:
    """Read the worker cap from the environment.

    Returns:
        The cap, or None when the variable is unset.

    Raises:
        UsageError: The value is not a positive integer.
    """
    environ = os.environ if environ is None else environ
    value = environ.get(THREADS_ENV_VAR)
    if value is None or value == "":
        return None
    try:
        cap = int(value)
    except ValueError:
        raise UsageError(
            f"{THREADS_ENV_VAR} must be a positive integer. Got {value!r}."
        ) from None
    if cap < 1:
        raise UsageError(f"{THREADS_ENV_VAR} must be a positive integer. Got {cap}.")
    return cap


def parse_summands(group: GroupType, text: str) -> GradedBundle:
    """Parse a graded bundle from a comma-separated summand list.

    Each item reads ``weight:rank:degree`` with an optional ``:block`` suffix,
    where the weight is an exact rational such as ``-1/2`` and the block is
    ``V``, ``V'`` or ``V*``. For Sp(2n,ℝ) only the summands of V are listed.

    Raises:
        UsageError: An item is malformed.
    """
    summands = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        fields = item.split(":")
        if len(fields) not in (3, 4):
            raise UsageError(f"Expected weight:rank:degree[:block]. Got {item!r}.")
        try:
            weight = Weight(Fraction(fields[0]))
            cls = BundleClass(int(fields[1]), int(fields[2]))
            block = Block(fields[3]) if len(fields) == 4 else None
        except ValueError as error:
            raise UsageError(f"Malformed summand {item!r}: {error}") from None
        summands.append(GradedSummand(weight, cls, block))
    summands.sort(key=lambda s: s.weight)
    return GradedBundle(group, tuple(summands))


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs.

    Attributes:
        command: The subcommand.
        group: The group, for subcommands that take one.
        genus: The genus, for subcommands that take one.
        degree: The Toledo invariant, when given.
        output_format: The output format.
        seed: The seed of the sampled checks.
        max_workers: The number of worker processes.
        params: Subcommand-specific parameters.
    """

    command: str
    group: Optional[GroupType] = None
    genus: Optional[int] = None
    degree: Optional[int] = None
    output_format: OutputFormat = OutputFormat.JSON
    seed: Optional[int] = None
    max_workers: int = 1
    params: Mapping[str, Any] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        if self.genus is not None:
            Curve(self.genus)
        if self.degree is not None and self.group is not None and self.genus:
            if self.group.is_two_block:
                limit = bound(self.group.n, self.genus)
                if abs(self.degree) > limit:
                    raise DomainError(
                        f"|d| must not exceed the Milnor–Wood bound {limit}. "
                        f"Got {self.degree}."
                    )
        if self.max_workers < 1:
            raise UsageError(f"max_workers must be positive. Got {self.max_workers}.")

    @property
    def curve(self) -> Curve:
        if self.genus is None:
            raise UsageError(f"{self.command} needs --genus.")
        return Curve(self.genus)

    @staticmethod
    def from_namespace(
        namespace: Any, environ: Mapping[str, str] | None = None
    ) -> RunConfig:
        """Build a configuration from parsed arguments and the environment.

        The worker count is ``--max-workers`` (default 1) capped by
        ``HIGGS_CENSUS_THREADS``.
        """
        values = dict(vars(namespace))
        group_tag = values.pop("group", None)
        try:
            group = GroupType.from_tag(group_tag) if group_tag else None
        except ValueError as error:
            raise UsageError(str(error)) from None
        max_workers = values.pop("max_workers", None) or 1
        cap = max_workers_from_env(environ)
        if cap is not None:
            max_workers = min(max_workers, cap)
        for key in ("command", "func", "verbose"):
            values.pop(key, None)
        return RunConfig(
            command=namespace.command,
            group=group,
            genus=values.pop("genus", None),
            degree=values.pop("degree", None),
            output_format=OutputFormat(values.pop("format", "json")),
            seed=values.pop("seed", None),
            max_workers=max_workers,
            params=values,
        )
