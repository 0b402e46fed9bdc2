"""Exact integer combinatorics.

Counts are plain Python ints (arbitrary precision). Out-of-range binomials
and multinomials are 0, never an error: the recursions rely on boundary
terms vanishing.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

Count = int


def binomial(n: int, k: int) -> Count:
    """C(n, k) for 0 <= k <= n, else 0."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=4096)
def _factorial(n: int) -> int:
    return math.factorial(n)


def multinomial(n: int, parts: Sequence[int]) -> Count:
    """n! / (prod(parts_j!) * (n - sum(parts))!).

    The residual slot absorbs whatever ``parts`` leaves of ``n``; any negative
    part, or parts summing past ``n``, gives 0.
    """
    if n < 0 or any(p < 0 for p in parts):
        return 0
    residual = n - sum(parts)
    if residual < 0:
        return 0
    denom = _factorial(residual)
    for p in parts:
        denom *= _factorial(p)
    return _factorial(n) // denom


def series_coeff(a: int, m: int) -> Count:
    """Coefficient of t^m in (1+t)^a / (1-t)^3."""
    if a < 0 or m < 0:
        raise ValueError(f"series_coeff needs a >= 0 and m >= 0, got a={a}, m={m}")
    return sum(binomial(a, k) * binomial(m - k + 2, 2) for k in range(m + 1))
