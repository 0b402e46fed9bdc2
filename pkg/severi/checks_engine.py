"""Known-value checks: YAML entries evaluated against computed result documents.

Each check names a ``route`` (what to compute) with ``args``, a JMESPath
expression selecting a value from the route's result document, and an
``operator``/``expected`` pair deciding pass or fail.
"""
import logging

import jmespath
import jsonschema
import yaml
from jmespath.exceptions import JMESPathError

from .exceptions import CheckFileError, SeveriError
from .fn2c import altsum_2c, closed_2c, genfunc_2c, ledger_2c, oracle_2c, s_reductions
from .fngeneral import TangentialDegreeTable, fn2_diagnostic
from .lattice import DivisorClass, parse_surface
from .recursion import NTable, f2_balance, plane_N_symmetric, resolve_N

logger = logging.getLogger(__name__)

OPERATORS = {"exists", "absent", "equals", "not_equals", "in", "gt", "lt"}
SEVERITIES = ("info", "warning", "critical")

CHECK_SCHEMA = {
    "type": "object",
    "properties": {
        "id": {"type": "string"},
        "title": {"type": "string"},
        "severity": {"enum": list(SEVERITIES)},
        "route": {"type": "string"},
        "args": {"type": "object"},
        "jmespath": {"type": "string"},
        "operator": {"enum": sorted(OPERATORS)},
        "expected": {},
        "message": {"type": "string"},
        "reference": {"type": "string"},
    },
    "required": ["id", "route", "jmespath"],
    "additionalProperties": False,
}


def _divisor(args):
    return DivisorClass(parse_surface(args["surface"]), tuple(args["class"]))


def _count(args, table):
    d = _divisor(args)
    i = args.get("i", 1)
    if i == 1:
        return {"value": resolve_N(d.surface, d, table)}
    return {"value": TangentialDegreeTable(table).lookup(d, i)}


ROUTES = {
    "count": _count,
    "plane_symmetric": lambda args, table: {"value": plane_N_symmetric(args["d"])},
    "closed_2c": lambda args, table: {"value": closed_2c(args["n"])},
    "altsum_2c": lambda args, table: {"value": altsum_2c(args["n"])},
    "genfunc_2c": lambda args, table: {"value": genfunc_2c(args["n"])},
    "oracle_2c": lambda args, table: {"value": oracle_2c(args["n"])},
    "ledger_2c": lambda args, table: ledger_2c(args["n"]).to_dict(),
    "s_reductions": lambda args, table: s_reductions(args["n"]).to_dict(),
    "f2_balance": lambda args, table: f2_balance(_divisor(args), table).to_dict(),
    "fn_diagnostic": lambda args, table: fn2_diagnostic(
        _divisor(args), TangentialDegreeTable(table)).to_dict(),
}


def load_checks(path_or_list):
    checks = []
    if isinstance(path_or_list, (list, tuple)):
        for p in path_or_list:
            checks.extend(load_checks(p))
        return checks
    with open(path_or_list, "r") as f:
        data = yaml.safe_load(f)
    if isinstance(data, dict) and "checks" in data:
        data = data["checks"]
    if not isinstance(data, list):
        raise CheckFileError(f"{path_or_list}: expected a list of checks")
    for entry in data:
        try:
            jsonschema.validate(entry, CHECK_SCHEMA)
        except jsonschema.ValidationError as e:
            raise CheckFileError(f"{path_or_list}: check {entry.get('id', '?')}: {e.message}")
        if entry["route"] not in ROUTES:
            raise CheckFileError(f"{path_or_list}: check {entry['id']}: unknown route {entry['route']!r}")
        checks.append(entry)
    return checks


def compute_document(route, args, table):
    return ROUTES[route](args or {}, table)


def evaluate_check(check, table=None):
    table = table if table is not None else NTable()
    operator = check.get("operator", "exists")
    expected = check.get("expected")
    observed = None
    error = None
    try:
        doc = compute_document(check["route"], check.get("args"), table)
        observed = jmespath.search(check["jmespath"], doc)
    except (SeveriError, ValueError, KeyError, TypeError, JMESPathError) as e:
        # bad args or a broken expression become a failed check
        error = f"{type(e).__name__}: {e}"

    if error is not None:
        passed = False
    elif isinstance(observed, list):
        flat = []
        for item in observed:
            if isinstance(item, list):
                flat.extend(item)
            else:
                flat.append(item)
        observed = flat
        passed = bool(flat) and all(_eval_single(operator, item, expected) for item in flat)
    else:
        passed = _eval_single(operator, observed, expected)

    return {
        "id": check.get("id"),
        "title": check.get("title"),
        "severity": check.get("severity", "info"),
        "passed": passed,
        "observed": observed,
        "expected": expected,
        "message": error or check.get("message"),
        "reference": check.get("reference"),
    }


def _eval_single(operator, observed, expected):
    if operator == "exists":
        return observed is not None
    elif operator == "absent":
        return observed is None
    elif operator == "equals":
        return observed == expected
    elif operator == "not_equals":
        return observed != expected
    elif operator == "in":
        return observed in expected if observed is not None else False
    elif operator == "gt":
        return observed is not None and observed > expected
    elif operator == "lt":
        return observed is not None and observed < expected
    return False


def run_checks(checks, table=None):
    table = table if table is not None else NTable()
    results = []
    for c in checks:
        results.append(evaluate_check(c, table))
    return results


def worst_failure(results, fail_level):
    """True when a failed check sits at or above ``fail_level``."""
    order = {s: idx for idx, s in enumerate(SEVERITIES)}
    return any(
        (not r["passed"]) and order[r["severity"]] >= order[fail_level]
        for r in results
    )
