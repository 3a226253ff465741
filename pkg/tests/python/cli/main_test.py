# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Tests for the command-line interface."""

from __future__ import annotations

import csv
import io

import orjson
import pytest

from higgs_census.cli.main import (
    EXIT_CHECK_FAILED,
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_USAGE,
    run,
)


def _run(*argv: str, environ=None) -> tuple[int, str]:
    stdout = io.StringIO()
    code = run(list(argv), stdout=stdout, environ={} if environ is None else environ)
    return code, stdout.getvalue()


def _document(*argv: str) -> tuple[int, dict]:
    code, text = _run(*argv)
    return code, orjson.loads(text)


def test_components_maximal():
    """The maximal Sp(4,R) component count at genus 2 is 48."""
    code, doc = _document(
        "components", "--group", "sp4r", "--genus", "2", "--degree", "2"
    )
    assert code == EXIT_OK
    assert doc["schema_version"] == 1
    assert doc["command"] == "components"
    assert doc["status"] == "ok"
    assert doc["result"]["count"] == 48


def test_components_not_determined():
    """An unestablished count reports its status and still exits 0."""
    code, doc = _document(
        "components", "--group", "su22", "--genus", "2", "--degree", "1"
    )
    assert code == EXIT_OK
    assert doc["status"] == "not determined"
    assert doc["result"]["count"] is None


def test_components_degree_out_of_range():
    """A Toledo invariant beyond the bound is a domain error."""
    code, doc = _document(
        "components", "--group", "sp4r", "--genus", "2", "--degree", "5"
    )
    assert code == EXIT_DOMAIN_ERROR
    assert doc["status"] == "error"
    assert "Milnor" in doc["result"]["error"]


def test_mw_bound():
    """mw-bound prints n(g - 1)."""
    code, doc = _document("mw-bound", "--n", "2", "--genus", "3")
    assert code == EXIT_OK
    assert doc["result"] == {"n": 2, "genus": 3, "bound": 4}


def test_mw_verify():
    """mw-verify reports every hypothesis."""
    code, doc = _document(
        "mw-verify",
        "--genus",
        "3",
        "--d",
        "4",
        "--deg-u",
        "2",
        "--deg-uprime",
        "-2",
        "--rk-c",
        "2",
    )
    assert code == EXIT_OK
    assert doc["status"] == "ok"
    assert doc["result"]["scenario"]["d"] == 4


def test_dim():
    """dim gives the dimension of the moduli space."""
    code, doc = _document("dim", "--group", "sp4r", "--genus", "3")
    assert code == EXIT_OK
    assert doc["result"]["dim"] == 20


def test_laumon_passes():
    """The half-dimension check passes for SL(3,C)."""
    code, doc = _document("laumon", "--n", "3", "--genus", "2")
    assert code == EXIT_OK
    assert doc["result"]["passed"] is True
    assert all(row["passed"] for row in doc["result"]["types"])


def test_laumon_tsv():
    """The tsv format writes a header and one row per type."""
    code, text = _run("laumon", "--n", "2", "--genus", "3", "--format", "tsv")
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0].split("\t") == [
        "n",
        "genus",
        "rank_vector",
        "computed",
        "expected",
        "passed",
    ]
    assert len(lines) > 1
    assert all(line.endswith("\ttrue") for line in lines[1:])


def test_adjoint():
    """adjoint decomposes a graded SU(2,2) bundle."""
    code, doc = _document(
        "adjoint", "--group", "su22", "--summands", "-1/2:2:1:V,1/2:2:-1:V'"
    )
    assert code == EXIT_OK
    assert doc["result"]["check"]["passed"] is True


def test_index_tsv():
    """index lists one contribution per positive weight."""
    code, text = _run(
        "index",
        "--group",
        "su22",
        "--genus",
        "2",
        "--summands",
        "-1/2:2:1:V,1/2:2:-1:V'",
        "--format",
        "tsv",
    )
    assert code == EXIT_OK
    assert text.splitlines()[0] == "k\trank_term\tdegree_term"


@pytest.mark.parametrize(
    "summands",
    [
        ["--summands", "-1/2:2:1:V,1/2:2:-1:V'"],
        ["--summands=-1/2:2:1:V,1/2:2:-1:V'"],
    ],
)
def test_negative_summands(summands: list[str]):
    """A summand list starting with a negative weight is accepted in both forms."""
    code, doc = _document("adjoint", "--group", "su22", *summands)
    assert code == EXIT_OK
    assert doc["result"]["check"]["passed"] is True


def test_malformed_summands():
    """A malformed summand list is a usage error."""
    code, text = _run("adjoint", "--group", "su22", "--summands", "1/2:2")
    assert code == EXIT_USAGE
    assert text == ""


def test_invalid_grading():
    """A grading that is not trace-free is rejected with exit status 1."""
    code, doc = _document(
        "adjoint", "--group", "su22", "--summands", "-1/2:2:0:V,3/2:2:0:V'"
    )
    assert code == EXIT_DOMAIN_ERROR
    assert doc["status"] == "error"


def test_classify_degree():
    """classify at one degree reports the (2,2) minimum of SU(2,2)."""
    code, doc = _document(
        "classify", "--group", "su22", "--genus", "2", "--degree", "1"
    )
    assert code == EXIT_OK
    (census,) = doc["result"]
    assert census["d"] == 1
    assert census["minimum_types"]


def test_classify_tsv_order():
    """classify writes TSV rows sorted by rank vector."""
    code, text = _run(
        "classify",
        "--group",
        "su22",
        "--genus",
        "2",
        "--degree",
        "1",
        "--format",
        "tsv",
    )
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(text), delimiter="\t"))
    rank_vectors = [tuple(map(int, row["rank_vector"].split(","))) for row in rows]
    assert rank_vectors == [
        (1, 1, 1, 1),
        (1, 1, 2),
        (1, 2, 1),
        (2, 1, 1),
        (2, 2),
        (4,),
    ]


def test_strata_list():
    """strata --list adds one record per stratum."""
    code, doc = _document("strata", "--genus", "2", "--list")
    assert code == EXIT_OK
    assert doc["result"]["census"]["total"] == 48
    assert len(doc["result"]["strata"]) == 48
    assert doc["result"]["lower_bound"]["stated"] == 51


def test_teich():
    """teich reports the Teichmüller component dimensions."""
    code, doc = _document("teich", "--genus", "3")
    assert code == EXIT_OK
    assert doc["result"]["hitchin_dim"] == 40
    assert doc["result"]["vector_space"] == [6, 6, 14]


def test_prym():
    """prym labels the component of rank-2 orthogonal data."""
    code, doc = _document(
        "prym", "--genus", "2", "--q", "0000", "--u", "1000", "--w2", "0"
    )
    assert code == EXIT_OK
    assert doc["result"]["arf"] == 0


def test_prym_wrong_length():
    """A class of the wrong length is a usage error."""
    code, _ = _run("prym", "--genus", "2", "--q", "000", "--u", "1000", "--w2", "0")
    assert code == EXIT_USAGE


def test_oracle_suites():
    """Selected oracle suites pass."""
    code, doc = _document(
        "oracle",
        "--genus",
        "2",
        "--suite",
        "laumon",
        "--suite",
        "prym",
        "--suite",
        "adjoint",
        "--samples",
        "50",
        "--seed",
        "1234",
    )
    assert code == EXIT_OK
    assert doc["result"]["passed"] is True
    assert set(doc["result"]["suites"]) == {"laumon", "prym", "adjoint"}


def test_oracle_corpus_round_trip(tmp_path):
    """The quiver suite writes a corpus and reads it back."""
    path = tmp_path / "corpus.jsonl.gz"
    args = ["oracle", "--suite", "quiver", "--radius", "0", "--compression", "gzip"]
    code, written = _document(*args, "--write-corpus", str(path))
    assert code == EXIT_OK
    code, read = _document(*args, "--read-corpus", str(path))
    assert code == EXIT_OK
    quiver_written = written["result"]["suites"]["quiver"]
    quiver_read = read["result"]["suites"]["quiver"]
    assert quiver_read["n_models"] == quiver_written["n_models"] > 0


@pytest.mark.parametrize(
    "argv",
    [
        ["components", "--group", "sp4r", "--genus", "2"],
        ["components", "--group", "so5", "--genus", "2", "--degree", "0"],
        ["mw-bound", "--n", "2", "--genus", "2", "--bogus"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(argv):
    """Malformed command lines exit with status 64."""
    code, text = _run(*argv)
    assert code == EXIT_USAGE
    assert text == ""


@pytest.mark.parametrize("value", ["zero", "0", "-3"])
def test_bad_threads_variable(value):
    """A malformed worker cap in the environment is a usage error."""
    code, _ = _run(
        "oracle", "--suite", "laumon", environ={"HIGGS_CENSUS_THREADS": value}
    )
    assert code == EXIT_USAGE


def test_exit_codes_distinct():
    """The exit codes are distinct."""
    assert len({EXIT_OK, EXIT_DOMAIN_ERROR, EXIT_CHECK_FAILED, EXIT_USAGE}) == 4
