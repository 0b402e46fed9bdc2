"""Picard lattices of the plane, the quadric and the Hirzebruch surfaces F_n.

Classes are integer vectors in a fixed basis:

* plane ``P2``: the degree ``d`` (multiple of the line class);
* quadric ``Q``: the bidegree ``(a, b)``;
* Hirzebruch ``F<n>``: ``(alpha, beta)`` meaning ``alpha*C + beta*F`` with
  ``C^2 = n``, ``C.F = 1``, ``F^2 = 0``. The negative curve is ``E = C - nF``.
"""
from __future__ import annotations

import enum
import itertools
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple, Union

from .exceptions import SurfaceMismatchError

logger = logging.getLogger(__name__)


class SurfaceKind(enum.Enum):
    PLANE = "P2"
    QUADRIC = "Q"
    HIRZEBRUCH = "F"


class Eligibility(enum.Enum):
    """How a class enters the recursions."""

    SEED1 = "seed1"
    RECURSE = "recurse"
    ZERO = "zero"
    EXCLUDED = "excluded"


_TAG_RE = re.compile(r"^(?:(p2)|(q)|f(\d+))$", re.IGNORECASE)


@dataclass(frozen=True)
class Surface:
    kind: SurfaceKind
    n: Optional[int] = None

    def __post_init__(self):
        if self.kind is SurfaceKind.HIRZEBRUCH:
            if self.n is None or self.n < 1:
                raise SurfaceMismatchError(f"Hirzebruch index must be >= 1, got {self.n!r}")
        elif self.n is not None:
            raise SurfaceMismatchError(f"{self.kind.value} takes no index")

    @classmethod
    def plane(cls) -> "Surface":
        return cls(SurfaceKind.PLANE)

    @classmethod
    def quadric(cls) -> "Surface":
        return cls(SurfaceKind.QUADRIC)

    @classmethod
    def hirzebruch(cls, n: int) -> "Surface":
        return cls(SurfaceKind.HIRZEBRUCH, n)

    @property
    def tag(self) -> str:
        if self.kind is SurfaceKind.HIRZEBRUCH:
            return f"F{self.n}"
        return self.kind.value

    @property
    def rank(self) -> int:
        return 1 if self.kind is SurfaceKind.PLANE else 2

    @property
    def form(self) -> Tuple[Tuple[int, ...], ...]:
        """Gram matrix of the intersection form in the chosen basis."""
        if self.kind is SurfaceKind.PLANE:
            return ((1,),)
        if self.kind is SurfaceKind.QUADRIC:
            return ((0, 1), (1, 0))
        return ((self.n, 1), (1, 0))

    @property
    def sort_key(self) -> Tuple[int, int]:
        order = {SurfaceKind.PLANE: 0, SurfaceKind.QUADRIC: 1, SurfaceKind.HIRZEBRUCH: 2}
        return (order[self.kind], self.n or 0)

    def cls(self, *coords: int) -> "DivisorClass":
        return DivisorClass(self, tuple(coords))

    @property
    def zero(self) -> "DivisorClass":
        return DivisorClass(self, (0,) * self.rank)

    # Hirzebruch generators
    @property
    def C(self) -> "DivisorClass":
        self._require_hirzebruch()
        return DivisorClass(self, (1, 0))

    @property
    def F(self) -> "DivisorClass":
        self._require_hirzebruch()
        return DivisorClass(self, (0, 1))

    @property
    def E(self) -> "DivisorClass":
        self._require_hirzebruch()
        return DivisorClass(self, (1, -self.n))

    def _require_hirzebruch(self):
        if self.kind is not SurfaceKind.HIRZEBRUCH:
            raise SurfaceMismatchError(f"{self.tag} has no C, F, E generators")

    def __str__(self):
        return self.tag


def parse_surface(tag: str) -> Surface:
    """Parse ``p2``, ``q`` or ``f<n>`` (case-insensitive)."""
    m = _TAG_RE.match(tag.strip())
    if not m:
        raise SurfaceMismatchError(f"unknown surface tag {tag!r} (expected p2, q or f<n>)")
    if m.group(1):
        return Surface.plane()
    if m.group(2):
        return Surface.quadric()
    return Surface.hirzebruch(int(m.group(3)))


@dataclass(frozen=True)
class DivisorClass:
    surface: Surface
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != self.surface.rank:
            raise SurfaceMismatchError(
                f"{self.surface.tag} classes have {self.surface.rank} coordinate(s), got {list(self.coords)}"
            )

    def _check(self, other: "DivisorClass"):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.surface != self.surface:
            raise SurfaceMismatchError(f"cannot combine {self.surface.tag} and {other.surface.tag} classes")
        return None

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(self.surface, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.surface, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "DivisorClass":
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(self.surface, tuple(k * a for a in self.coords))

    def __str__(self):
        kind = self.surface.kind
        if kind is SurfaceKind.PLANE:
            return str(self.coords[0])
        if kind is SurfaceKind.QUADRIC:
            return "({},{})".format(*self.coords)
        return _format_cf(*self.coords)

    def to_dict(self) -> dict:
        return {"surface": self.surface.tag, "coords": list(self.coords)}

    @classmethod
    def from_dict(cls, data: dict) -> "DivisorClass":
        return cls(parse_surface(data["surface"]), tuple(data["coords"]))


def _format_cf(alpha: int, beta: int) -> str:
    parts = []
    for coeff, sym in ((alpha, "C"), (beta, "F")):
        if coeff == 0:
            continue
        mag = "" if abs(coeff) == 1 else str(abs(coeff))
        sign = "-" if coeff < 0 else ("+" if parts else "")
        parts.append(f"{sign}{mag}{sym}")
    return "".join(parts) or "0"


def parse_class(surface: Surface, text: str) -> DivisorClass:
    """Parse comma-separated coordinates, e.g. ``2,0`` for 2C on F_n."""
    try:
        coords = tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise SurfaceMismatchError(f"class coordinates must be comma-separated integers, got {text!r}")
    return DivisorClass(surface, coords)


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number ``d1 . d2``."""
    if d1.surface != d2.surface:
        raise SurfaceMismatchError(f"cannot intersect {d1.surface.tag} class with {d2.surface.tag} class")
    form = d1.surface.form
    return sum(
        form[r][c] * d1.coords[r] * d2.coords[c]
        for r in range(len(form))
        for c in range(len(form))
    )


def canonical(s: Surface) -> DivisorClass:
    if s.kind is SurfaceKind.PLANE:
        return s.cls(-3)
    if s.kind is SurfaceKind.QUADRIC:
        return s.cls(-2, -2)
    # -C - E - 2F
    return -s.C - s.E - 2 * s.F


def pa(d: DivisorClass) -> int:
    """Arithmetic genus (D.D + D.K)/2 + 1; negative for classes with no connected member."""
    k = canonical(d.surface)
    return (intersect(d, d) + intersect(d, k)) // 2 + 1


def r0(d: DivisorClass) -> int:
    """Dimension -(K.D) - 1 of the Severi variety of rational curves."""
    return -intersect(canonical(d.surface), d) - 1


TangencyLike = Union["TangencyTuple", int, Iterable[int]]


@dataclass(frozen=True)
class TangencyTuple:
    """Ordered contact orders (i_1, ..., i_t) with E, each >= 1."""

    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(i) for i in self.entries))
        if not self.entries or any(i < 1 for i in self.entries):
            raise ValueError(f"tangency orders must be positive, got {self.entries}")

    @property
    def excess(self) -> int:
        return sum(i - 1 for i in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __str__(self):
        return "(" + ",".join(str(i) for i in self.entries) + ")"


def _as_tangency(m: TangencyLike) -> TangencyTuple:
    if isinstance(m, TangencyTuple):
        return m
    if isinstance(m, int):
        return TangencyTuple((m,))
    return TangencyTuple(tuple(m))


def r0_tangential(d: DivisorClass, m: TangencyLike) -> int:
    """r0(D) - sum(m_i - 1); an int ``i`` gives the single-contact r0^i(D)."""
    return r0(d) - _as_tangency(m).excess


def r_dim(d: DivisorClass) -> int:
    return r0(d) + pa(d)


def eligibility(d: DivisorClass) -> Eligibility:
    s = d.surface
    if s.kind is SurfaceKind.PLANE:
        (deg,) = d.coords
        if deg == 1:
            return Eligibility.SEED1
        return Eligibility.RECURSE if deg >= 2 else Eligibility.ZERO

    if s.kind is SurfaceKind.QUADRIC:
        a, b = d.coords
        if (a, b) in ((1, 0), (0, 1)):
            return Eligibility.SEED1
        if a >= 1 and b >= 1:
            return Eligibility.SEED1 if pa(d) == 0 else Eligibility.RECURSE
        return Eligibility.ZERO

    if d == s.E:
        return Eligibility.EXCLUDED
    if d == s.F:
        return Eligibility.SEED1
    alpha, beta = d.coords
    if alpha >= 1 and beta >= 0:
        return Eligibility.SEED1 if pa(d) == 0 else Eligibility.RECURSE
    return Eligibility.ZERO


def is_eligible_part(d: DivisorClass) -> bool:
    return eligibility(d) in (Eligibility.SEED1, Eligibility.RECURSE)


def _parts_within(d: DivisorClass):
    # every eligible class has nonnegative coordinates
    if any(c < 0 for c in d.coords):
        return
    for coords in itertools.product(*(range(c + 1) for c in d.coords)):
        part = DivisorClass(d.surface, coords)
        if is_eligible_part(part):
            yield part


@lru_cache(maxsize=None)
def _decompose(d: DivisorClass, t: int) -> Tuple[Tuple[DivisorClass, ...], ...]:
    if t == 1:
        return ((d,),) if is_eligible_part(d) else ()
    out = []
    for part in _parts_within(d):
        for tail in _decompose(d - part, t - 1):
            out.append((part,) + tail)
    return tuple(out)


def decompositions(d: DivisorClass, t: int) -> List[Tuple[DivisorClass, ...]]:
    """All ordered t-tuples of Seed1/Recurse classes summing to ``d``."""
    if t < 2:
        raise ValueError(f"decompositions need at least two parts, got t={t}")
    result = list(_decompose(d, t))
    logger.debug("decompositions(%s, %d): %d tuple(s)", d, t, len(result))
    return result


def reference_curves(s: Surface) -> Tuple[DivisorClass, DivisorClass]:
    """Default (C3, C4): two lines, the two rulings, or two curves of class C."""
    if s.kind is SurfaceKind.PLANE:
        return s.cls(1), s.cls(1)
    if s.kind is SurfaceKind.QUADRIC:
        return s.cls(1, 0), s.cls(0, 1)
    return s.C, s.C
