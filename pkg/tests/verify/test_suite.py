import logging

import pytest
import pytest_mock

from purepolylog import errors
from purepolylog.verify import report
from purepolylog.verify import suite


def test_every_tag_belongs_to_a_group():
    groups = {entry.group for entry in suite.SUPPORTED_CHECKS.values()}

    assert len(suite.SUPPORTED_CHECKS) == 24
    assert groups == set(suite.GROUPS) - {suite.ALL}


def test_resolve_groups_and_tags():
    """Tests that selections come back in registry order without
    duplicates."""
    selection = suite.resolve_selection(" four_term, classical,two_term,")

    assert selection == ("two_term", "four_term", "inversion",
                         "distribution", "distribution_mod", "powers_mod")


def test_resolve_all():
    assert suite.resolve_selection(["all"]) == tuple(suite.SUPPORTED_CHECKS)


def test_resolve_empty_selection():
    assert suite.resolve_selection("") == ()
    assert len(suite.run_suite([3], "")) == 0


def test_unknown_selector():
    with pytest.raises(errors.BadArgument) as exception:
        suite.resolve_selection("classical,five_term")

    message = str(exception.value)
    assert message.startswith(
        "Unknown identity or group 'five_term'; expected a group (all, "
        "exponential, classical, coefficients, congruences) or a tag "
        "(laguerre_differential, ")


def test_build_tasks_expands_grids():
    tasks = suite.build_tasks([3, 5], ["two_term", "powers_mod"])

    assert tasks == [("two_term", 3, {}), ("powers_mod", 3, {"d": 1}),
                     ("two_term", 5, {}), ("powers_mod", 5, {"d": 1}),
                     ("powers_mod", 5, {"d": 2}),
                     ("powers_mod", 5, {"d": 3})]


@pytest.mark.parametrize("jobs", [0, -2])
def test_jobs_must_be_positive(jobs: int):
    with pytest.raises(errors.BadArgument) as exception:
        suite.run_suite([3], "two_term", jobs=jobs)

    assert str(exception.value) == (
        "jobs={} must be a positive integer".format(jobs))


def test_primes_are_validated():
    with pytest.raises(errors.BadArgument) as exception:
        suite.run_suite([3, 15], "two_term")

    assert str(exception.value) == "15 is not an odd prime"


def test_errors_become_reports(mocker: pytest_mock.MockFixture, caplog):
    """Tests that an exception inside a check is recorded, logged and does
    not stop the other checks."""
    entry = suite.SUPPORTED_CHECKS["two_term"]
    failing = mocker.Mock(
        side_effect=errors.InternalInconsistency("boom"))
    mocker.patch.dict(suite.SUPPORTED_CHECKS, {
        "two_term": entry._replace(function=failing)})

    with caplog.at_level(logging.WARNING, logger="purepolylog.verify.suite"):
        result = suite.run_suite([3, 5], "two_term,four_term")

    assert result.summary == {"pass": 2, "fail": 0, "error": 2}
    errored = [r for r in result if r.status == report.CheckReport.ERROR]
    assert [(r.identity, r.p) for r in errored] == [("two_term", 3),
                                                    ("two_term", 5)]
    assert errored[0].error == "InternalInconsistency: boom"
    assert "two_term at p=3 {} raised InternalInconsistency: boom" in (
        caplog.text)


def test_run_suite_summary():
    result = suite.run_suite([3, 5, 7], suite.CLASSICAL)

    record = result.to_record()
    assert record["summary"] == {"pass": len(result), "fail": 0,
                                 "error": 0}
    assert [run["p"] for run in record["runs"][:1]] == [3]


def test_parallel_run_matches_serial_run():
    """Tests that the worker count changes nothing but timings."""
    def strip(result: report.SuiteResult):
        records = result.to_record()["runs"]
        for record in records:
            record.pop("millis")
        return records

    serial = suite.run_suite([3, 5], "classical,coefficients")
    parallel = suite.run_suite([3, 5], "classical,coefficients", jobs=2)

    assert strip(parallel) == strip(serial)
