"""The gamma kernel and the complete recursions for P2, P1xP1 and F2.

All decomposition sums run over ordered tuples. Values are memoized in an
``NTable``; resolve_N mutates the table and does no locking, so callers
share a table across threads only with writes serialized.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .combinat import Count, binomial
from .exceptions import (
    ConsistencyError,
    ExcludedClassError,
    IncompleteRecursionError,
    SurfaceMismatchError,
    TableConflictError,
)
from .lattice import (
    DivisorClass,
    Eligibility,
    Surface,
    SurfaceKind,
    decompositions,
    eligibility,
    intersect,
    r0,
    reference_curves as default_reference_curves,
)

logger = logging.getLogger(__name__)

RefCurves = Tuple[DivisorClass, DivisorClass]


class Provenance(str, enum.Enum):
    COMPUTED = "computed"
    SEEDED = "seeded"
    EXTERNAL = "external"


@dataclass(frozen=True)
class TableEntry:
    value: Count
    provenance: Provenance


def _key_order(key: Tuple[DivisorClass, int]):
    d, i = key
    return (d.surface.sort_key, d.coords, i)


class NTable:
    """Memo of Severi degrees keyed by (class, tangency index i).

    ``i == 1`` entries are the plain degrees N(D); ``i >= 2`` entries are the
    tangential degrees N_i(D), which only ever arrive from outside.
    """

    def __init__(self):
        self._entries: Dict[Tuple[DivisorClass, int], TableEntry] = {}

    def get(self, d: DivisorClass, i: int = 1) -> Optional[Count]:
        entry = self._entries.get((d, i))
        return None if entry is None else entry.value

    def entry(self, d: DivisorClass, i: int = 1) -> Optional[TableEntry]:
        return self._entries.get((d, i))

    def has(self, d: DivisorClass, i: int = 1) -> bool:
        return (d, i) in self._entries

    def put(self, d: DivisorClass, value: Count, i: int = 1,
            provenance: Provenance = Provenance.COMPUTED) -> None:
        if i < 1:
            raise ValueError(f"tangency index must be >= 1, got {i}")
        if value < 0:
            raise ConsistencyError(f"refusing to store negative count {value} for N_{i}({d})")
        old = self._entries.get((d, i))
        if old is not None:
            if old.value != value:
                raise TableConflictError(f"N_{i}({d}) on {d.surface.tag}", old.value, value)
            return
        self._entries[(d, i)] = TableEntry(value, Provenance(provenance))

    def merge(self, other: "NTable") -> None:
        for (d, i), entry in other.items():
            self.put(d, entry.value, i, entry.provenance)

    def items(self) -> Iterator[Tuple[Tuple[DivisorClass, int], TableEntry]]:
        for key in sorted(self._entries, key=_key_order):
            yield key, self._entries[key]

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, NTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self):
        return f"NTable({len(self)} entries)"


def gamma(d1: DivisorClass, d2: DivisorClass, d_total: DivisorClass,
          c3: DivisorClass, c4: DivisorClass, table: NTable) -> Count:
    """N(D1)N(D2)[C(r0(D)-3, r0(D1)-1)(D1.C3)(D2.C4) - C(r0(D)-3, r0(D1)-2)(D2.C3)(D2.C4)].

    ``d_total`` supplies r0(D) explicitly: in the second F2 sum the parts add
    up to D - E, not D. The result is signed.
    """
    refs = (c3, c4)
    n1 = resolve_N(d1.surface, d1, table, reference_curves=refs)
    if n1 == 0:
        return 0
    n2 = resolve_N(d2.surface, d2, table, reference_curves=refs)
    if n2 == 0:
        return 0
    top = r0(d_total) - 3
    k = r0(d1)
    bracket = (binomial(top, k - 1) * intersect(d1, c3) * intersect(d2, c4)
               - binomial(top, k - 2) * intersect(d2, c3) * intersect(d2, c4))
    return n1 * n2 * bracket


def _pair_sum(d: DivisorClass, table: NTable, refs: RefCurves) -> Count:
    c3, c4 = refs
    return sum(gamma(d1, d2, d, c3, c4, table) * intersect(d1, d2)
               for d1, d2 in decompositions(d, 2))


def f2_subtotals(d: DivisorClass, table: NTable,
                 reference_curves: Optional[RefCurves] = None) -> Tuple[Count, Count]:
    """The two halves of the F2 recursion: (1/2 * sum over D, sum over D - E)."""
    _require_surface(d, lambda s: s.kind is SurfaceKind.HIRZEBRUCH and s.n == 2, "F2")
    s = d.surface
    refs = reference_curves or default_reference_curves(s)
    c3, c4 = refs
    first = _pair_sum(d, table, refs)
    if first % 2:
        raise ConsistencyError(
            f"first F2 sum for {d} is odd ({first}); the halving must be exact"
        )
    e = s.E
    second = sum(gamma(d1, d2, d, c3, c4, table) * intersect(d1, e) * intersect(d2, e)
                 for d1, d2 in decompositions(d - e, 2))
    return first // 2, second


def _recurse(d: DivisorClass, table: NTable, refs: RefCurves) -> Count:
    s = d.surface
    if s.kind in (SurfaceKind.PLANE, SurfaceKind.QUADRIC):
        return _pair_sum(d, table, refs)
    if s.n == 2:
        half, second = f2_subtotals(d, table, refs)
        return half + second
    if d == 2 * s.C:
        from .fn2c import closed_2c
        return closed_2c(s.n)
    raise IncompleteRecursionError(
        d, 1, f"no complete recursion on {s.tag}; supply the value externally"
    )


def resolve_N(surface: Surface, d: DivisorClass, table: NTable,
              reference_curves: Optional[RefCurves] = None) -> Count:
    """N(D) on any supported surface, memoized in ``table``.

    With non-default ``reference_curves`` pass a fresh table: entries are
    keyed by class only.
    """
    if d.surface != surface:
        raise SurfaceMismatchError(f"class {d} lives on {d.surface.tag}, not {surface.tag}")
    kind = eligibility(d)
    if kind is Eligibility.EXCLUDED:
        raise ExcludedClassError(d)
    if kind is Eligibility.ZERO:
        return 0
    cached = table.get(d)
    if cached is not None:
        return cached
    if kind is Eligibility.SEED1:
        table.put(d, 1, provenance=Provenance.SEEDED)
        return 1
    refs = reference_curves or default_reference_curves(surface)
    value = _recurse(d, table, refs)
    logger.debug("N(%s) on %s = %s", d, surface.tag, value)
    table.put(d, value, provenance=Provenance.COMPUTED)
    return value


def _require_surface(d: DivisorClass, pred, name: str):
    if not pred(d.surface):
        raise SurfaceMismatchError(f"expected a class on {name}, got one on {d.surface.tag}")


def plane_N(d: int, table: NTable, reference_curves: Optional[RefCurves] = None) -> Count:
    """Kontsevich's recursion for degree-d rational plane curves."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    s = Surface.plane()
    return resolve_N(s, s.cls(d), table, reference_curves)


def quadric_N(d: DivisorClass, table: NTable,
              reference_curves: Optional[RefCurves] = None) -> Count:
    _require_surface(d, lambda s: s.kind is SurfaceKind.QUADRIC, "P1xP1")
    return resolve_N(d.surface, d, table, reference_curves)


def f2_N(d: DivisorClass, table: NTable,
         reference_curves: Optional[RefCurves] = None) -> Count:
    _require_surface(d, lambda s: s.kind is SurfaceKind.HIRZEBRUCH and s.n == 2, "F2")
    return resolve_N(d.surface, d, table, reference_curves)


@lru_cache(maxsize=None)
def plane_N_symmetric(d: int) -> Count:
    """Textbook form of Kontsevich's formula, kept apart from the NTable path.

    N(d) = sum N(d1)N(d2)[d1^2 d2^2 C(3d-4, 3d1-2) - d1^3 d2 C(3d-4, 3d1-1)]
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if d == 1:
        return 1
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        total += plane_N_symmetric(d1) * plane_N_symmetric(d2) * (
            d1 * d1 * d2 * d2 * binomial(3 * d - 4, 3 * d1 - 2)
            - d1 ** 3 * d2 * binomial(3 * d - 4, 3 * d1 - 1)
        )
    return total


@dataclass
class CrossRatioBalance:
    """Zeroes and poles of the cross-ratio function for a class on F2."""

    divisor: DivisorClass
    n_value: Count
    zero_terms: List[Tuple[str, Count]] = field(default_factory=list)
    pole_terms: List[Tuple[str, Count]] = field(default_factory=list)

    @property
    def zero_total(self) -> Count:
        return sum(v for _, v in self.zero_terms)

    @property
    def pole_total(self) -> Count:
        return sum(v for _, v in self.pole_terms)

    @property
    def balanced(self) -> bool:
        return self.zero_total == self.pole_total

    def to_dict(self) -> dict:
        return {
            "divisor": self.divisor.to_dict(),
            "N": self.n_value,
            "zero_terms": [{"label": k, "value": v} for k, v in self.zero_terms],
            "pole_terms": [{"label": k, "value": v} for k, v in self.pole_terms],
            "zero_total": self.zero_total,
            "pole_total": self.pole_total,
            "balanced": self.balanced,
        }


def f2_balance(d: DivisorClass, table: NTable) -> CrossRatioBalance:
    """Tabulate deg phi*(0) and deg phi*(inf) for a class on F2, with C3 = C4 = C."""
    n_value = f2_N(d, table)
    s = d.surface
    c, e = s.C, s.E
    top = r0(d) - 3

    def split_terms(target, weight_of):
        zero = pole = 0
        for d1, d2 in decompositions(target, 2):
            nn = resolve_N(s, d1, table) * resolve_N(s, d2, table)
            if nn == 0:
                continue
            w = weight_of(d1, d2)
            k = r0(d1)
            zero += nn * binomial(top, k - 2) * w * intersect(d2, c) ** 2
            pole += nn * binomial(top, k - 1) * w * intersect(d1, c) * intersect(d2, c)
        return zero, pole

    zero_d, pole_d = split_terms(d, intersect)
    zero_e, pole_e = split_terms(d - e, lambda a, b: intersect(a, e) * intersect(b, e))
    return CrossRatioBalance(
        divisor=d,
        n_value=n_value,
        zero_terms=[
            ("irreducible through C3 ∩ C4", 2 * n_value),
            ("D1 + D2 = D", zero_d),
            ("E + D1 + D2", 2 * zero_e),
        ],
        pole_terms=[
            ("D1 + D2 = D", pole_d),
            ("E + D1 + D2", 2 * pole_e),
        ],
    )
