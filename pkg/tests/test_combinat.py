import pytest

from severi.combinat import binomial, multinomial, series_coeff


def test_binomial_out_of_range_is_zero():
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(-1, 0) == 0
    assert binomial(0, 0) == 1


def test_pascal():
    for n in range(1, 201):
        for k in range(-1, n + 2):
            assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)


def test_multinomial():
    assert multinomial(5, [2, 2, 1]) == 30
    assert multinomial(5, [2, 2]) == 30
    assert multinomial(4, [2]) == 6
    assert multinomial(4, [3, 2]) == 0
    assert multinomial(4, [-1, 2]) == 0
    assert multinomial(3, [-1, 2]) == 0
    assert multinomial(40, [13, 13, 14]) == multinomial(40, [13, 13])


def test_series_coefficient_examples():
    assert series_coeff(9, 2) == 69
    assert series_coeff(7, 1) == 10
    assert series_coeff(7, 2) == 48
    with pytest.raises(ValueError):
        series_coeff(3, -1)


def _series_brute(a, m):
    # (1+t)^a truncated, then three passes of prefix sums for 1/(1-t)^3
    coeffs = [binomial(a, k) for k in range(m + 1)]
    for _ in range(3):
        for k in range(1, m + 1):
            coeffs[k] += coeffs[k - 1]
    return coeffs[m]


def test_series_coefficient_matches_brute_force():
    for a in range(0, 25):
        for m in range(0, 15):
            assert series_coeff(a, m) == _series_brute(a, m)


def test_telescoping_identities():
    for n in range(1, 60):
        b = lambda k: binomial(2 * n, k)  # noqa: E731
        for k in range(0, 2 * n + 3):
            assert b(k) + 2 * b(k - 1) + b(k - 2) == binomial(2 * n + 2, k)
        assert n ** 3 * (b(n) - b(n - 1)) == n * n * b(n - 1)
        assert sum(binomial(2 * n + 2, k) for k in range(2 * n + 3)) == 4 * sum(b(k) for k in range(2 * n + 1))
