import pytest

from severi.fn2c import (
    Z_CC,
    altsum_2c,
    closed_2c,
    genfunc_2c,
    ledger_2c,
    oracle_2c,
    s_reductions,
)
from severi.lattice import Surface
from severi.recursion import NTable, f2_N


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 10), (3, 69), (4, 406)])
def test_known_values(n, expected):
    assert closed_2c(n) == expected


def test_four_routes_agree():
    for n in range(1, 101):
        value = closed_2c(n)
        assert altsum_2c(n) == value
        assert genfunc_2c(n) == value
        assert oracle_2c(n) == value


def test_oracle_matches_f2_recursion():
    s = Surface.hirzebruch(2)
    assert oracle_2c(2) == f2_N(2 * s.C, NTable())


def test_invalid_index():
    for fn in (closed_2c, altsum_2c, genfunc_2c, oracle_2c, ledger_2c, s_reductions):
        with pytest.raises(ValueError):
            fn(0)


def test_ledger_on_f2():
    ledger = ledger_2c(2)
    assert ledger.zero_fixed_total == 32 + 8
    assert ledger.pole_total == 48 + 12
    assert ledger.solve() == 10
    assert ledger.zero_total(10) == ledger.pole_total
    assert ledger.by_case("zero")[Z_CC] == 32


def test_ledger_on_f3():
    ledger = ledger_2c(3)
    assert ledger.zero_fixed_total == 559
    assert ledger.pole_total == 766
    assert ledger.solve() == 69


def test_ledger_identity_with_closed_formula():
    for n in range(1, 51):
        ledger = ledger_2c(n)
        assert ledger.zero_total(closed_2c(n)) == ledger.pole_total


def test_ledger_document():
    doc = ledger_2c(3).to_dict()
    assert doc["N"] == 69
    assert doc["zero_total"] == doc["pole_total"] == 766
    assert doc["irreducible"] == 3 * 69
    assert all(t["contribution"] == t["count"] * t["multiplicity"] for t in doc["zero_terms"])


def test_s_reductions_on_f2():
    red = s_reductions(2)
    assert (red.s, red.s_prime, red.s_double_prime, red.telescoped) == (4, 16, 12, 20)


def test_s_reduction_chain():
    for n in range(1, 51):
        red = s_reductions(n)
        assert red.failed() == []
        assert red.telescoped == n * closed_2c(n)
