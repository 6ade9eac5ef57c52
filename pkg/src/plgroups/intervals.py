"""Exact open-set algebra on the line and on rational-circumference circles.

Coordinates are arbitrary-precision rationals (:class:`fractions.Fraction`).
The two infinities are the usual floats, used only as interval endpoints
and never in arithmetic.  Open sets are kept canonical: a sorted tuple of
maximal open pieces.  Maximal pieces may share an endpoint, as in
``(0,1) | (1,2)``, because the shared point belongs to neither piece.

Circle arcs ``(a,b)`` are traversed in the positive direction from ``a``
to ``b`` and may wrap past zero.  An arc with ``start == end`` denotes the
complement of that single point (a punctured circle); the genuinely full
circle is a separate marker on :class:`ArcSet`, so the empty set is never
written as an arc.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Union

from .errors import ModulusMismatch

Rat = Fraction
ExtRat = Union[Fraction, float]

NEG_INF = float("-inf")
POS_INF = float("inf")


def is_finite(x: ExtRat) -> bool:
    return isinstance(x, Fraction)


def parse_rat(text: str) -> Rat:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {text!r}") from exc


def parse_ext_rat(text: str) -> ExtRat:
    t = text.strip()
    if t in ("+inf", "inf"):
        return POS_INF
    if t == "-inf":
        return NEG_INF
    return parse_rat(t)


def format_rat(x: ExtRat) -> str:
    """Render ``p/q`` (the ``/q`` omitted for integers) or ``±inf``."""
    if isinstance(x, Fraction):
        return str(x)
    if x == POS_INF:
        return "+inf"
    if x == NEG_INF:
        return "-inf"
    raise ValueError(f"not an extended rational: {x!r}")


# --------------------------------------------------------------------------
# line

@dataclass(frozen=True)
class IntervalLine:
    """A nonempty open interval ``(lo, hi)`` with extended-rational ends."""

    lo: ExtRat
    hi: ExtRat

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo},{self.hi})")

    def contains(self, x: Rat) -> bool:
        return self.lo < x < self.hi

    def __str__(self):
        return f"({format_rat(self.lo)},{format_rat(self.hi)})"


def _glue_line(points: Iterable[Rat], member: Callable[[Rat], bool]) -> tuple[IntervalLine, ...]:
    """Assemble ``{x : member(x)}`` into maximal open intervals.

    ``member`` must be constant on the open gaps between consecutive
    points and describe an open set.
    """
    pts = sorted(set(points))
    if not pts:
        return (IntervalLine(NEG_INF, POS_INF),) if member(Rat(0)) else ()
    bounds: list[ExtRat] = [NEG_INF, *pts, POS_INF]
    pieces: list[IntervalLine] = []
    cur: list[ExtRat] | None = None
    for i in range(len(bounds) - 1):
        lo, hi = bounds[i], bounds[i + 1]
        if i > 0 and not member(lo) and cur is not None:
            pieces.append(IntervalLine(cur[0], cur[1]))
            cur = None
        if lo == NEG_INF:
            sample = pts[0] - 1
        elif hi == POS_INF:
            sample = pts[-1] + 1
        else:
            sample = (lo + hi) / 2
        if member(sample):
            if cur is None:
                cur = [lo, hi]
            else:
                cur[1] = hi
        elif cur is not None:
            pieces.append(IntervalLine(cur[0], cur[1]))
            cur = None
    if cur is not None:
        pieces.append(IntervalLine(cur[0], cur[1]))
    return tuple(pieces)


@dataclass(frozen=True)
class SupportSet:
    """A finite union of disjoint maximal open intervals of the line."""

    pieces: tuple[IntervalLine, ...] = ()

    @staticmethod
    def empty() -> "SupportSet":
        return SupportSet(())

    @staticmethod
    def interval(lo: ExtRat, hi: ExtRat) -> "SupportSet":
        return SupportSet((IntervalLine(lo, hi),))

    @classmethod
    def from_pieces(cls, pieces: Iterable[IntervalLine]) -> "SupportSet":
        """Canonicalize an arbitrary collection of open intervals."""
        pieces = tuple(pieces)
        pts = [p for iv in pieces for p in (iv.lo, iv.hi) if is_finite(p)]

        def member(x: Rat) -> bool:
            return any(iv.contains(x) for iv in pieces)

        return cls(_glue_line(pts, member))

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    def contains(self, x: Rat) -> bool:
        return any(iv.contains(x) for iv in self.pieces)

    def contains_closed_interval(self, lo: Rat, hi: Rat) -> bool:
        """Whether the closed interval ``[lo, hi]`` lies inside this open set."""
        return any(iv.lo < lo and hi < iv.hi for iv in self.pieces)

    def _combine(self, other: "SupportSet", keep: Callable[[bool, bool], bool]) -> "SupportSet":
        pts = [p for s in (self, other) for iv in s.pieces
               for p in (iv.lo, iv.hi) if is_finite(p)]

        def member(x: Rat) -> bool:
            return keep(self.contains(x), other.contains(x))

        return SupportSet(_glue_line(pts, member))

    def union(self, other: "SupportSet") -> "SupportSet":
        return self._combine(other, lambda a, b: a or b)

    def intersect(self, other: "SupportSet") -> "SupportSet":
        return self._combine(other, lambda a, b: a and b)

    def is_disjoint(self, other: "SupportSet") -> bool:
        return self.intersect(other).is_empty

    def is_subset(self, other: "SupportSet") -> bool:
        return self.intersect(other) == self

    def __str__(self):
        if not self.pieces:
            return "(empty)"
        return " | ".join(str(p) for p in self.pieces)


# --------------------------------------------------------------------------
# circle

@dataclass(frozen=True)
class Arc:
    """An open arc of the circle of circumference ``modulus``.

    The arc runs from ``start`` to ``end`` in the positive direction and
    wraps past zero when ``end <= start``.  ``start == end`` denotes the
    punctured circle (everything except ``start``).
    """

    modulus: Rat
    start: Rat
    end: Rat

    def __post_init__(self):
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "start", self.start % self.modulus)
        object.__setattr__(self, "end", self.end % self.modulus)

    @property
    def length(self) -> Rat:
        d = (self.end - self.start) % self.modulus
        return d if d != 0 else self.modulus

    def contains(self, x: Rat) -> bool:
        x = x % self.modulus
        if self.start == self.end:
            return x != self.start
        if self.start < self.end:
            return self.start < x < self.end
        return x > self.start or x < self.end

    def __str__(self):
        return f"({self.start},{self.end}) mod {self.modulus}"


def _glue_circle(modulus: Rat, points: Iterable[Rat],
                 member: Callable[[Rat], bool]) -> tuple[Arc, ...] | None:
    """Assemble ``{x : member(x)}`` into maximal open arcs.

    Returns ``None`` when the set is the whole circle.  ``member`` must be
    constant on the open gaps between consecutive points (cyclically) and
    describe an open set.
    """
    L = modulus
    pts = sorted({p % L for p in points})
    if not pts:
        return None if member(Rat(0)) else ()
    k = len(pts)

    def sample(i: int) -> Rat:
        a, b = pts[i], pts[(i + 1) % k]
        d = (b - a) % L
        if d == 0:
            d = L
        return (a + d / 2) % L

    region_mark = [member(sample(i)) for i in range(k)]
    point_mark = [member(p) for p in pts]
    if all(region_mark) and all(point_mark):
        return None
    if not any(region_mark):
        return ()
    starts = [i for i in range(k)
              if region_mark[i] and not (region_mark[(i - 1) % k] and point_mark[i])]
    arcs = []
    for s in starts:
        end = s
        while region_mark[(end + 1) % k] and point_mark[(end + 1) % k]:
            end = (end + 1) % k
            if end == s:
                break
        arcs.append(Arc(L, pts[s], pts[(end + 1) % k]))
    arcs.sort(key=lambda a: a.start)
    return tuple(arcs)


@dataclass(frozen=True)
class ArcSet:
    """A finite union of disjoint maximal open arcs sharing one modulus."""

    modulus: Rat
    arcs: tuple[Arc, ...] = ()
    full: bool = False

    @staticmethod
    def empty(modulus: Rat) -> "ArcSet":
        return ArcSet(modulus, ())

    @staticmethod
    def full_circle(modulus: Rat) -> "ArcSet":
        return ArcSet(modulus, (), full=True)

    @classmethod
    def from_arcs(cls, modulus: Rat, arcs: Iterable[Arc]) -> "ArcSet":
        arcs = tuple(arcs)
        for a in arcs:
            if a.modulus != modulus:
                raise ModulusMismatch(f"arc mod {a.modulus} in set mod {modulus}")
        pts = [p for a in arcs for p in (a.start, a.end)]

        def member(x: Rat) -> bool:
            return any(a.contains(x) for a in arcs)

        glued = _glue_circle(modulus, pts, member)
        if glued is None:
            return cls.full_circle(modulus)
        return cls(modulus, glued)

    @property
    def is_empty(self) -> bool:
        return not self.full and not self.arcs

    def contains(self, x: Rat) -> bool:
        if self.full:
            return True
        return any(a.contains(x) for a in self.arcs)

    def contains_closed_arc(self, start: Rat, end: Rat) -> bool:
        """Whether the closed arc ``[start, end]`` (positive direction) fits inside."""
        if self.full:
            return True
        L = self.modulus
        start, end = start % L, end % L
        for a in self.arcs:
            span = (a.end - a.start) % L
            if span == 0:
                span = L
            da = (start - a.start) % L
            db = (end - a.start) % L
            if 0 < da <= db < span:
                return True
        return False

    def total_length(self) -> Rat:
        if self.full:
            return self.modulus
        return sum((a.length for a in self.arcs), Rat(0))

    def _combine(self, other: "ArcSet", keep: Callable[[bool, bool], bool]) -> "ArcSet":
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")
        pts = [p for s in (self, other) for a in s.arcs for p in (a.start, a.end)]

        def member(x: Rat) -> bool:
            return keep(self.contains(x), other.contains(x))

        glued = _glue_circle(self.modulus, pts, member)
        if glued is None:
            return ArcSet.full_circle(self.modulus)
        return ArcSet(self.modulus, glued)

    def union(self, other: "ArcSet") -> "ArcSet":
        return self._combine(other, lambda a, b: a or b)

    def intersect(self, other: "ArcSet") -> "ArcSet":
        return self._combine(other, lambda a, b: a and b)

    def is_disjoint(self, other: "ArcSet") -> bool:
        return self.intersect(other).is_empty

    def is_subset(self, other: "ArcSet") -> bool:
        return self.intersect(other) == self

    def gaps(self) -> list[tuple[Rat, Rat]]:
        """Complement gaps as ``(start, length)`` pairs, cyclic order.

        The complement of an arc union is a union of closed arcs; a gap of
        length zero is a single point (two pieces sharing an endpoint, or
        a punctured circle).
        """
        if self.full or not self.arcs:
            return []
        out = []
        n = len(self.arcs)
        for i in range(n):
            a, b = self.arcs[i], self.arcs[(i + 1) % n]
            out.append((a.end, (b.start - a.end) % self.modulus))
        return out

    def __str__(self):
        if self.full:
            return f"(full circle mod {self.modulus})"
        if not self.arcs:
            return "(empty)"
        return " | ".join(str(a) for a in self.arcs)
