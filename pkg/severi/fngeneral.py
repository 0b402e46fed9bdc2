"""Tangential gamma function and the right-hand side of the general F_n formula.

The formula needs the tangential degrees N_i(D), i >= 2, which no
recursion here produces: they come from a TangentialDegreeTable filled from
an external file. i = 1 values fall back to ``recursion.resolve_N``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence

from .combinat import Count, multinomial
from .exceptions import ConsistencyError, MissingDegreeError, SurfaceMismatchError
from .lattice import (
    DivisorClass,
    SurfaceKind,
    TangencyTuple,
    decompositions,
    intersect,
    r0,
    r0_tangential,
)
from .recursion import NTable, Provenance, f2_N, resolve_N

logger = logging.getLogger(__name__)


class TangentialDegreeTable:
    """N_i(D) lookups: i = 1 auto-filled from the recursions, i >= 2 strict."""

    def __init__(self, table: Optional[NTable] = None):
        self.table = table if table is not None else NTable()

    def set(self, d: DivisorClass, i: int, value: Count) -> None:
        self.table.put(d, value, i, Provenance.EXTERNAL)

    def lookup(self, d: DivisorClass, i: int) -> Count:
        value = self.table.get(d, i)
        if value is not None:
            return value
        if i == 1:
            return resolve_N(d.surface, d, self.table)
        raise MissingDegreeError(d, i, "tangential degrees must be supplied externally")


def tangency_tuples(t: int, n: int) -> List[TangencyTuple]:
    """Ordered (i_1..i_t), i_j >= 1, with sum(i_j - 1) = n - t."""
    if not 2 <= t <= n:
        raise ValueError(f"need 2 <= t <= n, got t={t}, n={n}")

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    return [TangencyTuple(tuple(e + 1 for e in c)) for c in compositions(n - t, t)]


def gamma_multi(is_: TangencyTuple, ds: Sequence[DivisorClass], d_total: DivisorClass,
                table: TangentialDegreeTable) -> Count:
    """gamma_{i_1..i_t}(D_1..D_t), evaluated exactly as written over the rationals.

    For t = 2 the sums over j >= 3 are empty, so only the second multinomial
    term survives.
    """
    is_ = is_ if isinstance(is_, TangencyTuple) else TangencyTuple(tuple(is_))
    t = len(is_)
    if t < 2 or len(ds) != t:
        raise ValueError(f"need matching tuples of length >= 2, got {len(is_)} and {len(ds)}")
    s = d_total.surface
    if s.kind is not SurfaceKind.HIRZEBRUCH:
        raise SurfaceMismatchError(f"gamma_multi works on F_n, got {s.tag}")

    weight = 1
    for i, d in zip(is_, ds):
        weight *= i * table.lookup(d, i)
        if weight == 0:
            return 0

    c = [intersect(s.C, d) for d in ds]
    inv = [Fraction(1, i) for i in is_]
    rr = [r0_tangential(d, i) for d, i in zip(ds, is_)]
    top = r0(d_total) - 3

    first_parts = [rr[0] - 1, rr[1] - 1] + rr[2:]
    second_parts = [rr[0] - 2] + rr[1:]
    head = c[0] * inv[0] + c[1] * inv[1]
    first_bracket = (sum(c[j] * inv[j] * head for j in range(2, t))
                     - sum(c[j] ** 2 * inv[j] for j in range(2, t)))
    second_bracket = (sum(c[j] ** 2 * (inv[j] + inv[0]) for j in range(1, t))
                      + inv[0] * sum(c[j] * c[k] for j, k in combinations(range(1, t), 2)))

    value = Fraction(weight) * (multinomial(top, first_parts) * first_bracket
                                - multinomial(top, second_parts) * second_bracket)
    if value.denominator != 1:
        raise ConsistencyError(
            f"gamma_{is_}({', '.join(map(str, ds))}) = {value} is not an integer"
        )
    return int(value)


def theorem_fn_rhs(d: DivisorClass, n: int, table: TangentialDegreeTable) -> Count:
    """Right-hand side of n N(D) = sum (D1.D2) gamma_{1,1} + sum over D - E (...)."""
    s = d.surface
    if s.kind is not SurfaceKind.HIRZEBRUCH or s.n != n:
        raise SurfaceMismatchError(f"class {d} is not on F{n}")
    ones = TangencyTuple((1, 1))
    total = sum(intersect(d1, d2) * gamma_multi(ones, (d1, d2), d, table)
                for d1, d2 in decompositions(d, 2))
    e = s.E
    rest = d - e
    for t in range(2, n + 1):
        tuples = tangency_tuples(t, n)
        for ds in decompositions(rest, t):
            for is_ in tuples:
                factor = 1
                for i, dj in zip(is_, ds):
                    if i == 1:
                        factor *= intersect(e, dj)
                if factor == 0:
                    continue
                total += factor * gamma_multi(is_, ds, d, table)
    logger.debug("theorem_fn_rhs(%s, n=%d) = %s", d, n, total)
    return total


@dataclass(frozen=True)
class Fn2Diagnostic:
    divisor: DivisorClass
    rhs: Count
    recursion_value: Count

    @property
    def rhs_over_n(self) -> Fraction:
        return Fraction(self.rhs, 2)

    @property
    def agrees(self) -> bool:
        return self.rhs_over_n == self.recursion_value

    @property
    def discrepancy(self) -> Fraction:
        return self.rhs_over_n - self.recursion_value

    def to_dict(self) -> dict:
        return {
            "divisor": self.divisor.to_dict(),
            "rhs": self.rhs,
            "rhs_over_n": str(self.rhs_over_n),
            "recursion": self.recursion_value,
            "agrees": self.agrees,
            "discrepancy": str(self.discrepancy),
        }


def fn2_diagnostic(d: DivisorClass, table: Optional[TangentialDegreeTable] = None) -> Fn2Diagnostic:
    """Compare the general formula at n = 2 against the F2 recursion."""
    table = table or TangentialDegreeTable()
    rhs = theorem_fn_rhs(d, 2, table)
    value = f2_N(d, table.table)
    diag = Fn2Diagnostic(d, rhs, value)
    if not diag.agrees:
        logger.info("general formula at n=2 gives %s for %s, recursion gives %s",
                    diag.rhs_over_n, d, value)
    return diag
