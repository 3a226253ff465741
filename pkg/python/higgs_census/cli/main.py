# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Command-line interface."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from typing import IO, Any, NamedTuple, NoReturn, Optional

import numpy as np

from higgs_census.bundle_class import Curve
from higgs_census.chain_oracle import (
    check_quiver_equivalence,
    generate_extremal_models,
    generate_split_models,
    read_models_jsonl,
    write_models_jsonl,
)
from higgs_census.cli.config import (
    OutputFormat,
    RunConfig,
    UsageError,
    parse_summands,
)
from higgs_census.cli.output import Status, envelope, flatten, write_json, write_tsv
from higgs_census.components import (
    check_stability_transfer,
    count_components,
    lower_bound_report,
    strata,
    teichmuller_dims,
)
from higgs_census.exceptions import DomainError, InvariantViolationError
from higgs_census.graded import (
    adjoint_decomposition,
    sl_fixed_point_types,
    total_rank_degree_check,
)
from higgs_census.groups import GroupType
from higgs_census.milnor_wood import MWScenario, bound, soundness_search, verify_chain
from higgs_census.minima import (
    Verdict,
    minima_census,
    minima_census_for_degree,
    verify_witness,
)
from higgs_census.morse import laumon_halfdim, moduli_dim, morse_index
from higgs_census.random import random_graded_bundle
from higgs_census.stiefel_whitney import (
    H1Class,
    QuadraticRefinement,
    all_classes,
    homomorphism_check,
    prym_component,
    quadratic_refinements,
    refinement_counts,
)
from higgs_census.testing import RANK_FOUR_GROUPS, generate_groups

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_CHECK_FAILED = 2
EXIT_USAGE = 64

SUITES = (
    "quiver",
    "milnor-wood",
    "laumon",
    "adjoint",
    "prym",
    "classifier",
    "transfer",
)


class CommandResult(NamedTuple):
    """What a subcommand produces: a status, a JSON result and table rows."""

    status: Status
    result: Any
    rows: Optional[list[dict[str, Any]]] = None


class SuiteReport(NamedTuple):
    """The outcome of one invariant suite of the oracle."""

    name: str
    n_checked: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def _json_(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "n_checked": self.n_checked,
            "failures": list(self.failures),
            "passed": self.passed,
        }


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _require_group(config: RunConfig) -> GroupType:
    if config.group is None:
        raise UsageError(f"{config.command} needs --group.")
    return config.group


def _status(passed: bool) -> Status:
    return Status.OK if passed else Status.FAIL


def cmd_dim(config: RunConfig) -> CommandResult:
    group = _require_group(config)
    dim = moduli_dim(group, config.curve)
    return CommandResult(
        Status.OK, {"group": group.tag, "genus": config.genus, "dim": dim}
    )


def cmd_mw_bound(config: RunConfig) -> CommandResult:
    n = config.params["n"]
    return CommandResult(
        Status.OK,
        {"n": n, "genus": config.genus, "bound": bound(n, config.curve.genus)},
    )


def cmd_mw_verify(config: RunConfig) -> CommandResult:
    group = config.group or GroupType.sp(2)
    params = config.params
    scenario = MWScenario(
        group.n,
        config.curve.genus,
        params["d"],
        params["deg_u"],
        params["deg_uprime"],
        params["rk_c"],
        group.family,
    )
    try:
        report = verify_chain(scenario)
    except InvariantViolationError as error:
        return CommandResult(Status.FAIL, {"error": str(error)})
    rows = [
        {"hypothesis": name, "holds": holds}
        for name, holds in report.hypotheses.items()
    ]
    return CommandResult(Status.OK, report, rows)


def cmd_adjoint(config: RunConfig) -> CommandResult:
    group = _require_group(config)
    bundle = parse_summands(group, config.params["summands"])
    adjoint = adjoint_decomposition(bundle)
    check = total_rank_degree_check(bundle)
    compact = adjoint.compact
    noncompact = adjoint.noncompact
    rows = [
        {
            "k": k,
            "rank": cls.rank,
            "degree": cls.degree,
            "compact_rank": compact[k].rank if k in compact else 0,
            "noncompact_rank": noncompact[k].rank if k in noncompact else 0,
        }
        for k, cls in adjoint.entries.items()
    ]
    result = {"bundle": bundle, "adjoint": adjoint, "check": check}
    return CommandResult(_status(check.passed), result, rows)


def cmd_index(config: RunConfig) -> CommandResult:
    group = _require_group(config)
    bundle = parse_summands(group, config.params["summands"])
    report = morse_index(adjoint_decomposition(bundle), config.curve)
    rows = [
        {"k": c.k, "rank_term": c.rank_term, "degree_term": c.degree_term}
        for c in report.contributions
    ]
    return CommandResult(Status.OK, report, rows)


def _laumon_rows(n: int, curve: Curve) -> list[dict[str, Any]]:
    group = GroupType.sl(n)
    rows = []
    for bundle in sl_fixed_point_types(n):
        rank_vector = ",".join(str(s.cls.rank) for s in bundle.summands)
        result = laumon_halfdim(adjoint_decomposition(bundle), curve, group)
        rows.append(
            {
                "n": n,
                "genus": curve.genus,
                "rank_vector": rank_vector,
                "computed": result.computed,
                "expected": result.expected,
                "passed": result.passed,
            }
        )
    return rows


def cmd_laumon(config: RunConfig) -> CommandResult:
    rows = _laumon_rows(config.params["n"], config.curve)
    passed = all(row["passed"] for row in rows)
    return CommandResult(_status(passed), {"types": rows, "passed": passed}, rows)


def cmd_classify(config: RunConfig) -> CommandResult:
    group = _require_group(config)
    if config.degree is None:
        censuses = minima_census(group, config.curve)
    else:
        censuses = (minima_census_for_degree(group, config.curve, config.degree),)
    rows = [row for census in censuses for row in census.rows()]
    return CommandResult(Status.OK, list(censuses), rows)


def _suite_quiver(config: RunConfig) -> Any:
    params = config.params
    compression = params.get("compression")
    if params.get("read_corpus"):
        models = list(read_models_jsonl(params["read_corpus"], compression))
    else:
        degrees = range(-params["radius"], params["radius"] + 1)
        models = [
            model
            for group in RANK_FOUR_GROUPS
            for model in generate_split_models(group, config.curve, degrees)
        ]
    if params.get("write_corpus"):
        write_models_jsonl(models, params["write_corpus"], compression)
    return check_quiver_equivalence(models, max_workers=config.max_workers)


def _suite_milnor_wood(config: RunConfig) -> Any:
    return soundness_search(radius=config.params["mw_radius"])


def _suite_laumon(config: RunConfig) -> SuiteReport:
    failures = []
    n_checked = 0
    for n in (2, 3, 4):
        try:
            rows = _laumon_rows(n, config.curve)
        except InvariantViolationError as error:
            failures.append(f"SL({n},C): {error}")
            continue
        n_checked += len(rows)
        failures.extend(
            f"SL({n},C) {row['rank_vector']}: {row['computed']} != {row['expected']}"
            for row in rows
            if not row["passed"]
        )
    return SuiteReport("laumon", n_checked, tuple(failures))


def _suite_adjoint(config: RunConfig) -> SuiteReport:
    rng = np.random.default_rng(config.seed)
    groups = list(generate_groups(range(1, 4)))
    failures = []
    n_samples = config.params["samples"]
    for k in range(n_samples):
        bundle = random_graded_bundle(groups[k % len(groups)], seed=rng)
        report = total_rank_degree_check(bundle)
        failures.extend(f"{bundle.group} sample {k}: {f}" for f in report.failures)
    return SuiteReport("adjoint", n_samples, tuple(failures))


def _suite_prym(config: RunConfig) -> SuiteReport:
    genus = config.curve.genus
    rng = np.random.default_rng(config.seed)
    refinements = quadratic_refinements(genus)
    failures = []
    if len(refinements) != 1 << (2 * genus):
        failures.append(f"{len(refinements)} refinements for genus {genus}")
    even = sum(1 for q in refinements if q.arf == 0)
    if (even, len(refinements) - even) != refinement_counts(genus):
        failures.append(f"{even} even refinements for genus {genus}")
    nonzero = [u for u in all_classes(genus) if not u.is_zero()]
    for q in refinements:
        if not homomorphism_check(q, seed=rng).passed:
            failures.append(f"delta is not a homomorphism for {q}")
        failures.extend(
            f"w2 does not separate the components for {q} and u = {u}"
            for u in nonzero
            if prym_component(q, u, 0) is prym_component(q, u, 1)
        )
    return SuiteReport("prym", len(refinements), tuple(failures))


def _suite_classifier(config: RunConfig) -> SuiteReport:
    failures = []
    n_checked = 0
    for group in RANK_FOUR_GROUPS:
        for census in minima_census(group, config.curve):
            for t, c in census.entries:
                n_checked += 1
                if c.verdict is not Verdict.MINIMUM_FEASIBLE:
                    continue
                if c.witness is None or not verify_witness(t, c.witness):
                    failures.append(f"{group} d={t.d} {t.label}: witness rejected")
    return SuiteReport("classifier", n_checked, tuple(failures))


def _suite_transfer(config: RunConfig) -> Any:
    radius = config.params["radius"]
    top = bound(2, config.curve.genus)
    degrees = range(-radius, top + radius + 1)
    return check_stability_transfer(generate_extremal_models(config.curve, degrees))


_SUITE_FUNCS: dict[str, Callable[[RunConfig], Any]] = {
    "quiver": _suite_quiver,
    "milnor-wood": _suite_milnor_wood,
    "laumon": _suite_laumon,
    "adjoint": _suite_adjoint,
    "prym": _suite_prym,
    "classifier": _suite_classifier,
    "transfer": _suite_transfer,
}


def cmd_oracle(config: RunConfig) -> CommandResult:
    names = config.params.get("suite") or list(SUITES)
    if "all" in names:
        names = list(SUITES)
    reports = {}
    for name in SUITES:
        if name in names:
            logger.info("Running the %s suite", name)
            reports[name] = _SUITE_FUNCS[name](config)
    passed = all(report.passed for report in reports.values())
    rows = [
        {"suite": name, "passed": report.passed} for name, report in reports.items()
    ]
    return CommandResult(
        _status(passed), {"suites": reports, "passed": passed}, rows
    )


def cmd_components(config: RunConfig) -> CommandResult:
    group = _require_group(config)
    if config.degree is None:
        raise UsageError("components needs --degree.")
    count = count_components(group, config.curve, config.degree)
    status = Status.OK if count.determined else Status.NOT_DETERMINED
    return CommandResult(status, count)


def cmd_strata(config: RunConfig) -> CommandResult:
    census = strata(config.curve)
    result: dict[str, Any] = {
        "census": census,
        "lower_bound": lower_bound_report(config.curve),
    }
    if config.params.get("list"):
        result["strata"] = census.rows()
    rows = census.rows() if config.output_format is OutputFormat.TSV else None
    return CommandResult(Status.OK, result, rows)


def cmd_teich(config: RunConfig) -> CommandResult:
    return CommandResult(Status.OK, teichmuller_dims(config.curve))


def _h1_class(text: str, genus: int, name: str) -> H1Class:
    if len(text) != 2 * genus:
        raise UsageError(f"--{name} needs {2 * genus} bits. Got {text!r}.")
    try:
        return H1Class.from_string(text)
    except DomainError as error:
        raise UsageError(str(error)) from None


def cmd_prym(config: RunConfig) -> CommandResult:
    genus = config.curve.genus
    params = config.params
    q = QuadraticRefinement(genus, _h1_class(params["q"], genus, "q").bits)
    u = _h1_class(params["u"], genus, "u")
    component = prym_component(q, u, params["w2"])
    result = {
        "genus": genus,
        "q": q,
        "u": u,
        "w2": params["w2"],
        "component": component,
        "arf": q.arf,
    }
    return CommandResult(Status.OK, result)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default="json"
    )
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to stderr. Repeat for debug output.",
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser of the ``higgs-census`` command."""
    parser = _ArgumentParser(
        prog="higgs-census",
        description="Minima, Morse indices and component counts of Higgs moduli.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, summary: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=summary)
        _add_common(sub)
        sub.set_defaults(func=func)
        return sub

    sub = add("dim", cmd_dim, "Dimension of the moduli space")
    sub.add_argument("--group", required=True)
    sub.add_argument("--genus", type=int, required=True)

    sub = add("mw-bound", cmd_mw_bound, "The Milnor–Wood bound n(g − 1)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--genus", type=int, required=True)

    sub = add("mw-verify", cmd_mw_verify, "Check the Milnor–Wood inequality chain")
    sub.add_argument("--group", default="sp4r")
    sub.add_argument("--genus", type=int, required=True)
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--deg-u", type=int, required=True)
    sub.add_argument("--deg-uprime", type=int, required=True)
    sub.add_argument("--rk-c", type=int, required=True)

    summands_help = "Comma-separated weight:rank:degree[:block] items"
    sub = add("adjoint", cmd_adjoint, "Weight decomposition of the adjoint bundle")
    sub.add_argument("--group", required=True)
    sub.add_argument("--summands", required=True, help=summands_help)

    sub = add("index", cmd_index, "Morse index of a fixed point")
    sub.add_argument("--group", required=True)
    sub.add_argument("--genus", type=int, required=True)
    sub.add_argument("--summands", required=True, help=summands_help)

    sub = add("laumon", cmd_laumon, "Half-dimension check for SL(n,C)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--genus", type=int, required=True)

    sub = add("classify", cmd_classify, "Classify the fixed-point types")
    sub.add_argument("--group", required=True)
    sub.add_argument("--genus", type=int, required=True)
    sub.add_argument("--degree", type=int)

    sub = add("oracle", cmd_oracle, "Run the invariant suites")
    sub.add_argument("--genus", type=int, default=2)
    sub.add_argument(
        "--suite", action="append", choices=["all", *SUITES], default=None
    )
    sub.add_argument("--radius", type=int, default=2)
    sub.add_argument("--mw-radius", type=int, default=20)
    sub.add_argument("--samples", type=int, default=1000)
    sub.add_argument("--max-workers", type=int, default=None)
    sub.add_argument("--write-corpus")
    sub.add_argument("--read-corpus")
    sub.add_argument("--compression", choices=["gzip", "bz2", "lzma"])

    sub = add("components", cmd_components, "Number of connected components")
    sub.add_argument("--group", required=True)
    sub.add_argument("--genus", type=int, required=True)
    sub.add_argument("--degree", type=int, required=True)

    sub = add("strata", cmd_strata, "Strata of the maximal Sp(4,R) component")
    sub.add_argument("--genus", type=int, required=True)
    sub.add_argument("--list", action="store_true")

    sub = add("teich", cmd_teich, "Dimensions of the Teichmüller components")
    sub.add_argument("--genus", type=int, required=True)

    sub = add("prym", cmd_prym, "Prym component label of rank-2 orthogonal data")
    sub.add_argument("--genus", type=int, required=True)
    sub.add_argument("--q", required=True)
    sub.add_argument("--u", required=True)
    sub.add_argument("--w2", type=int, choices=[0, 1], required=True)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _emit(
    command: str, outcome: CommandResult, output_format: OutputFormat, stream: IO[str]
) -> None:
    if output_format is OutputFormat.TSV:
        rows = outcome.rows if outcome.rows is not None else flatten(outcome.result)
        write_tsv(rows, stream)
    else:
        write_json(envelope(command, outcome.status, outcome.result), stream)


_EXIT_CODES = {
    Status.OK: EXIT_OK,
    Status.NOT_DETERMINED: EXIT_OK,
    Status.FAIL: EXIT_CHECK_FAILED,
    Status.ERROR: EXIT_DOMAIN_ERROR,
}


_NEGATIVE_VALUE_OPTIONS = ("--summands",)


def _attach_values(argv: Sequence[str]) -> list[str]:
    """Join options whose values may start with "-" to their values.

    argparse reads a separate "-1/2:1:0" as an option, so "--summands VALUE"
    becomes "--summands=VALUE".
    """
    joined: list[str] = []
    args = iter(argv)
    for arg in args:
        if arg in _NEGATIVE_VALUE_OPTIONS:
            value = next(args, None)
            joined.append(arg if value is None else f"{arg}={value}")
        else:
            joined.append(arg)
    return joined


def run(
    argv: Sequence[str] | None = None,
    stdout: IO[str] | None = None,
    environ=None,
) -> int:
    """Parse arguments, run one subcommand and write its document.

    Returns:
        The exit status: 0 on success, 1 when the inputs are rejected, 2 when an
        invariant check fails and 64 on usage errors.
    """
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(
            _attach_values(sys.argv[1:] if argv is None else argv)
        )
        config = RunConfig.from_namespace(args, environ)
    except UsageError as error:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"higgs-census: error: {error}\n")
        return EXIT_USAGE
    except (DomainError, InvariantViolationError) as error:
        _configure_logging(0)
        logger.error("%s", error)
        outcome = CommandResult(Status.ERROR, {"error": str(error)})
        _emit(args.command, outcome, OutputFormat(args.format), stdout)
        return EXIT_DOMAIN_ERROR
    _configure_logging(args.verbose)
    try:
        outcome = args.func(config)
    except UsageError as error:
        sys.stderr.write(f"higgs-census: error: {error}\n")
        return EXIT_USAGE
    except (DomainError, InvariantViolationError) as error:
        logger.error("%s", error)
        outcome = CommandResult(Status.ERROR, {"error": str(error)})
    _emit(config.command, outcome, config.output_format, stdout)
    return _EXIT_CODES[outcome.status]


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
