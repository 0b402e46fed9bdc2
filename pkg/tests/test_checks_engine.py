import pytest

from severi.checks_engine import evaluate_check, load_checks, run_checks, worst_failure
from severi.config import get_data_path
from severi.exceptions import CheckFileError


def test_equals_operator():
    check = {
        "id": "TEST-001",
        "route": "count",
        "args": {"surface": "p2", "class": [3]},
        "jmespath": "value",
        "operator": "equals",
        "expected": 12,
    }
    result = evaluate_check(check)
    assert result["passed"]
    assert result["observed"] == 12


def test_absent_operator():
    check = {
        "id": "TEST-002",
        "route": "closed_2c",
        "args": {"n": 2},
        "jmespath": "foo.baz",
        "operator": "absent",
    }
    assert evaluate_check(check)["passed"]


def test_list_results_are_flattened():
    check = {
        "id": "TEST-003",
        "route": "s_reductions",
        "args": {"n": 5},
        "jmespath": "values(identities)",
        "operator": "equals",
        "expected": True,
    }
    result = evaluate_check(check)
    assert result["passed"]
    assert len(result["observed"]) == 8


def test_computation_errors_fail_the_check():
    check = {
        "id": "TEST-004",
        "severity": "critical",
        "route": "count",
        "args": {"surface": "f2", "class": [1, -2]},
        "jmespath": "value",
        "operator": "exists",
    }
    result = evaluate_check(check)
    assert not result["passed"]
    assert "exceptional" in result["message"]


def test_packaged_checks_all_pass():
    checks = load_checks(str(get_data_path("checks/known_values.yaml")))
    assert len(checks) >= 20
    results = run_checks(checks)
    assert [r["id"] for r in results if not r["passed"]] == []
    assert not worst_failure(results, "info")


def test_worst_failure_respects_level():
    results = [{"passed": False, "severity": "warning"}, {"passed": True, "severity": "critical"}]
    assert worst_failure(results, "warning")
    assert worst_failure(results, "info")
    assert not worst_failure(results, "critical")


def test_invalid_check_files(tmp_path):
    unknown = tmp_path / "unknown.yaml"
    unknown.write_text("- {id: X-1, route: nowhere, jmespath: value}\n")
    with pytest.raises(CheckFileError):
        load_checks(str(unknown))

    bad_operator = tmp_path / "bad.yaml"
    bad_operator.write_text("- {id: X-2, route: count, jmespath: value, operator: almost}\n")
    with pytest.raises(CheckFileError):
        load_checks(str(bad_operator))

    not_a_list = tmp_path / "scalar.yaml"
    not_a_list.write_text("just text\n")
    with pytest.raises(CheckFileError):
        load_checks(str(not_a_list))


def test_bad_args_and_expressions_fail_the_check():
    base = {"id": "TEST-005", "route": "closed_2c", "jmespath": "value",
            "operator": "equals", "expected": 10}
    out_of_range = evaluate_check(dict(base, args={"n": 0}))
    assert not out_of_range["passed"]
    assert "ValueError" in out_of_range["message"]

    missing = evaluate_check(dict(base, args={}))
    assert not missing["passed"]
    assert "KeyError" in missing["message"]

    broken = evaluate_check(dict(base, args={"n": 2}, jmespath="value[?"))
    assert not broken["passed"]
    assert broken["observed"] is None


def test_check_file_with_bad_args_reports_failures(tmp_path):
    path = tmp_path / "mine.yaml"
    path.write_text(
        "- {id: M-1, severity: critical, route: closed_2c, args: {n: 0}, jmespath: value, operator: exists}\n"
        "- {id: M-2, severity: info, route: closed_2c, args: {n: 3}, jmespath: value, operator: equals, expected: 69}\n"
    )
    results = run_checks(load_checks(str(path)))
    assert [r["passed"] for r in results] == [False, True]
    assert worst_failure(results, "critical")
