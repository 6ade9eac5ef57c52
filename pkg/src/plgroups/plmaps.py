"""Exact piecewise-linear orientation-preserving homeomorphisms.

Line maps are affine with slope one and a rational offset outside a
bounded window; the empty breakpoint list encodes a pure translation.
This class is closed under composition and inversion, so every map built
from the constructors here stays finitely described.

Circle maps of circumference ``L`` are stored through their degree-one
lift ``F`` (``F(x+L) = F(x)+L``), anchored so that the breakpoint list
starts at ``x = 0`` with ``F(0)`` in ``[0, L)``.  The anchor breakpoint is
always kept, which makes the representation unique; equality of maps is
equality of representations.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Union

from .errors import CannotUnroll, KindMismatch, ModulusMismatch
from .intervals import (NEG_INF, POS_INF, Arc, ArcSet, IntervalLine, Rat,
                        SupportSet, _glue_circle, _glue_line, is_finite)

Breakpoints = tuple[tuple[Rat, Rat], ...]


def _check_monotone(bps: Breakpoints) -> None:
    for (x0, y0), (x1, y1) in zip(bps, bps[1:]):
        if not x0 < x1:
            raise ValueError(f"breakpoint abscissae not increasing: {x0} >= {x1}")
        if not y0 < y1:
            raise ValueError(f"not orientation preserving: {y0} >= {y1} at x={x1}")


def _drop_collinear(bps: Breakpoints, slopes_around: Callable[[int], tuple[Rat, Rat]],
                    keep_first: bool) -> Breakpoints:
    kept = []
    for i in range(len(bps)):
        if i == 0 and keep_first:
            kept.append(bps[i])
            continue
        s_in, s_out = slopes_around(i)
        if s_in != s_out:
            kept.append(bps[i])
    return tuple(kept)


@dataclass(frozen=True)
class PLMapLine:
    """A PL homeomorphism of the line, slope one outside the breakpoints.

    ``left_offset`` and ``right_offset`` are the translation amounts on the
    two tails; continuity forces ``y0 = x0 + left_offset`` and
    ``yk = xk + right_offset`` at the extreme breakpoints.
    """

    breakpoints: Breakpoints
    left_offset: Rat
    right_offset: Rat

    def __post_init__(self):
        bps = self.breakpoints
        _check_monotone(bps)
        if bps:
            x0, y0 = bps[0]
            xk, yk = bps[-1]
            if y0 != x0 + self.left_offset:
                raise ValueError("left tail does not meet the first breakpoint")
            if yk != xk + self.right_offset:
                raise ValueError("right tail does not meet the last breakpoint")
        elif self.left_offset != self.right_offset:
            raise ValueError("a translation needs equal tail offsets")

    # -- construction -------------------------------------------------

    @classmethod
    def make(cls, breakpoints: Iterable[tuple[Rat, Rat]],
             left_offset: Rat | None = None,
             right_offset: Rat | None = None) -> "PLMapLine":
        """Validate, derive missing tail offsets, and canonicalize."""
        bps = tuple((Rat(x), Rat(y)) for x, y in breakpoints)
        _check_monotone(bps)
        if bps:
            tl = bps[0][1] - bps[0][0] if left_offset is None else Rat(left_offset)
            tr = bps[-1][1] - bps[-1][0] if right_offset is None else Rat(right_offset)
        else:
            tl = Rat(left_offset if left_offset is not None else 0)
            tr = Rat(right_offset if right_offset is not None else tl)

        def slopes_around(i: int) -> tuple[Rat, Rat]:
            x, y = bps[i]
            if i == 0:
                s_in = Rat(1)
            else:
                xp, yp = bps[i - 1]
                s_in = (y - yp) / (x - xp)
            if i == len(bps) - 1:
                s_out = Rat(1)
            else:
                xn, yn = bps[i + 1]
                s_out = (yn - y) / (xn - x)
            # tails are slope one but need the matching intercept too
            if i == 0 and s_out == 1 and y != x + tl:
                s_in = s_out + 1  # force keeping the breakpoint
            if i == len(bps) - 1 and s_in == 1 and y != x + tr:
                s_out = s_in + 1
            return s_in, s_out

        kept = _drop_collinear(bps, slopes_around, keep_first=False)
        if not kept and bps:
            # everything collinear with the tails: a pure translation
            return cls((), tl, tl)
        return cls(kept, tl, tr)

    @classmethod
    def identity(cls) -> "PLMapLine":
        return cls((), Rat(0), Rat(0))

    @classmethod
    def translation(cls, offset: Rat) -> "PLMapLine":
        return cls((), Rat(offset), Rat(offset))

    @classmethod
    def from_samples(cls, xs: Iterable[Rat], fn: Callable[[Rat], Rat],
                     left_offset: Rat, right_offset: Rat) -> "PLMapLine":
        pts = sorted(set(xs))
        return cls.make(tuple((x, fn(x)) for x in pts), left_offset, right_offset)

    # -- evaluation ----------------------------------------------------

    @cached_property
    def _xs(self) -> tuple[Rat, ...]:
        return tuple(x for x, _ in self.breakpoints)

    @cached_property
    def _ys(self) -> tuple[Rat, ...]:
        return tuple(y for _, y in self.breakpoints)

    def evaluate(self, x: Rat) -> Rat:
        bps = self.breakpoints
        if not bps or x <= bps[0][0]:
            return x + self.left_offset
        if x >= bps[-1][0]:
            return x + self.right_offset
        i = bisect_right(self._xs, x) - 1
        x0, y0 = bps[i]
        x1, y1 = bps[i + 1]
        return y0 + (x - x0) * (y1 - y0) / (x1 - x0)

    __call__ = evaluate

    def evaluate_inverse(self, y: Rat) -> Rat:
        bps = self.breakpoints
        if not bps or y <= bps[0][1]:
            return y - self.left_offset
        if y >= bps[-1][1]:
            return y - self.right_offset
        i = bisect_right(self._ys, y) - 1
        x0, y0 = bps[i]
        x1, y1 = bps[i + 1]
        return x0 + (y - y0) * (x1 - x0) / (y1 - y0)

    # -- algebra -------------------------------------------------------

    def compose(self, other: "PLMapLine") -> "PLMapLine":
        """The map ``self after other`` (apply ``other`` first)."""
        if not isinstance(other, PLMapLine):
            raise KindMismatch("compose needs two line maps")
        xs = set(other._xs)
        xs.update(other.evaluate_inverse(x) for x in self._xs)
        return PLMapLine.from_samples(
            xs, lambda t: self.evaluate(other.evaluate(t)),
            self.left_offset + other.left_offset,
            self.right_offset + other.right_offset)

    __mul__ = compose

    def inverse(self) -> "PLMapLine":
        bps = tuple((y, x) for x, y in self.breakpoints)
        return PLMapLine.make(bps, -self.left_offset, -self.right_offset)

    def power(self, n: int) -> "PLMapLine":
        return _power(self, n, PLMapLine.identity())

    def is_identity(self) -> bool:
        return not self.breakpoints and self.left_offset == 0

    # -- geometry ------------------------------------------------------

    def _segments(self):
        """Affine pieces as ``(lo, hi, slope, intercept)`` with open ends."""
        bps = self.breakpoints
        if not bps:
            yield (NEG_INF, POS_INF, Rat(1), self.left_offset)
            return
        yield (NEG_INF, bps[0][0], Rat(1), self.left_offset)
        for (x0, y0), (x1, y1) in zip(bps, bps[1:]):
            s = (y1 - y0) / (x1 - x0)
            yield (x0, x1, s, y0 - s * x0)
        yield (bps[-1][0], POS_INF, Rat(1), self.right_offset)

    def support(self) -> SupportSet:
        """The open set of moved points, with interior fixed points split out."""
        crit = set(self._xs)
        for lo, hi, s, c in self._segments():
            if s != 1:
                xstar = c / (1 - s)
                if lo < xstar < hi:
                    crit.add(xstar)
        return SupportSet(_glue_line(crit, lambda t: self.evaluate(t) != t))


@dataclass(frozen=True)
class PLMapCircle:
    """A PL homeomorphism of the circle ``R/(modulus Z)`` via its lift.

    Breakpoints list the lift on one period, anchored at ``x = 0``; the
    anchor is kept even when no slope changes there.
    """

    modulus: Rat
    breakpoints: Breakpoints

    def __post_init__(self):
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")
        bps = self.breakpoints
        if not bps or bps[0][0] != 0:
            raise ValueError("circle maps must be anchored at x = 0")
        if not 0 <= bps[0][1] < self.modulus:
            raise ValueError("anchor image must lie in [0, modulus)")
        if bps[-1][0] >= self.modulus:
            raise ValueError("breakpoints must lie in one period")
        _check_monotone(bps)
        if bps[-1][1] >= bps[0][1] + self.modulus:
            raise ValueError("lift must gain exactly one period per turn")

    # -- construction -------------------------------------------------

    @classmethod
    def make(cls, modulus: Rat, breakpoints: Iterable[tuple[Rat, Rat]]) -> "PLMapCircle":
        L = Rat(modulus)
        bps = tuple((Rat(x), Rat(y)) for x, y in breakpoints)
        if not bps:
            raise ValueError("circle maps need at least the anchor breakpoint")
        _check_monotone(bps)

        def slopes_around(i: int) -> tuple[Rat, Rat]:
            xp, yp = bps[i - 1] if i > 0 else (bps[-1][0] - L, bps[-1][1] - L)
            x, y = bps[i]
            xn, yn = bps[i + 1] if i + 1 < len(bps) else (bps[0][0] + L, bps[0][1] + L)
            return (y - yp) / (x - xp), (yn - y) / (xn - x)

        kept = _drop_collinear(bps, slopes_around, keep_first=True)
        return cls(L, kept)

    @classmethod
    def identity(cls, modulus: Rat) -> "PLMapCircle":
        return cls.make(modulus, ((Rat(0), Rat(0)),))

    @classmethod
    def rotation(cls, modulus: Rat, offset: Rat) -> "PLMapCircle":
        return cls.make(modulus, ((Rat(0), Rat(offset) % Rat(modulus)),))

    @classmethod
    def from_samples(cls, modulus: Rat, xs: Iterable[Rat],
                     lift: Callable[[Rat], Rat]) -> "PLMapCircle":
        """Build the canonical map from lift values at the given abscissae."""
        L = Rat(modulus)
        pts = sorted({Rat(x) % L for x in xs} | {Rat(0)})
        ys = [lift(x) for x in pts]
        shift = L * (ys[0] // L)
        return cls.make(L, tuple((x, y - shift) for x, y in zip(pts, ys)))

    # -- evaluation ----------------------------------------------------

    @cached_property
    def _xs(self) -> tuple[Rat, ...]:
        return tuple(x for x, _ in self.breakpoints)

    @cached_property
    def _ys(self) -> tuple[Rat, ...]:
        return tuple(y for _, y in self.breakpoints)

    def eval_lift(self, x: Rat) -> Rat:
        """The lift value at any real abscissa."""
        L = self.modulus
        k = x // L
        x0 = x - k * L
        i = bisect_right(self._xs, x0) - 1
        xa, ya = self.breakpoints[i]
        if i + 1 < len(self.breakpoints):
            xb, yb = self.breakpoints[i + 1]
        else:
            xb, yb = L, self._ys[0] + L
        return ya + (x0 - xa) * (yb - ya) / (xb - xa) + k * L

    def inverse_lift(self, y: Rat) -> Rat:
        L = self.modulus
        m = (y - self._ys[0]) // L
        yr = y - m * L
        i = bisect_right(self._ys, yr) - 1
        xa, ya = self.breakpoints[i]
        if i + 1 < len(self.breakpoints):
            xb, yb = self.breakpoints[i + 1]
        else:
            xb, yb = L, self._ys[0] + L
        return xa + (yr - ya) * (xb - xa) / (yb - ya) + m * L

    def evaluate(self, x: Rat) -> Rat:
        """The image of the circle point ``x``, reduced into ``[0, L)``."""
        return self.eval_lift(x % self.modulus) % self.modulus

    __call__ = evaluate

    def evaluate_inverse(self, y: Rat) -> Rat:
        return self.inverse_lift(y % self.modulus) % self.modulus

    # -- algebra -------------------------------------------------------

    def compose(self, other: "PLMapCircle") -> "PLMapCircle":
        if not isinstance(other, PLMapCircle):
            raise KindMismatch("compose needs two circle maps")
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")
        xs = set(other._xs)
        xs.update(other.inverse_lift(b) % self.modulus for b in self._xs)
        return PLMapCircle.from_samples(
            self.modulus, xs, lambda t: self.eval_lift(other.eval_lift(t)))

    __mul__ = compose

    def inverse(self) -> "PLMapCircle":
        xs = {y % self.modulus for y in self._ys}
        return PLMapCircle.from_samples(self.modulus, xs, self.inverse_lift)

    def power(self, n: int) -> "PLMapCircle":
        return _power(self, n, PLMapCircle.identity(self.modulus))

    def is_identity(self) -> bool:
        return self.breakpoints == ((0, 0),)

    # -- geometry ------------------------------------------------------

    def support(self) -> ArcSet:
        L = self.modulus
        crit = set(self._xs)
        bps = self.breakpoints
        for i in range(len(bps)):
            xa, ya = bps[i]
            xb, yb = bps[i + 1] if i + 1 < len(bps) else (L, self._ys[0] + L)
            s = (yb - ya) / (xb - xa)
            if s == 1:
                continue
            c = ya - s * xa
            # fixed circle points solve lift(x) = x + kL; only k in {0, 1}
            # can occur inside one anchored period
            for k in (0, 1):
                xstar = (k * L - c) / (s - 1)
                if xa < xstar < xb:
                    crit.add(xstar % L)
        glued = _glue_circle(L, crit, lambda t: self.evaluate(t) != t % L)
        if glued is None:
            return ArcSet.full_circle(L)
        return ArcSet(L, glued)


PLMap = Union[PLMapLine, PLMapCircle]


def _power(f, n: int, ident):
    if n < 0:
        f = f.inverse()
        n = -n
    result = ident
    base = f
    while n:
        if n & 1:
            result = result.compose(base)
        n >>= 1
        if n:
            base = base.compose(base)
    return result


def _check_same_kind(f: PLMap, g: PLMap) -> None:
    if type(f) is not type(g):
        raise KindMismatch(f"{type(f).__name__} combined with {type(g).__name__}")
    if isinstance(f, PLMapCircle) and f.modulus != g.modulus:
        raise ModulusMismatch(f"{f.modulus} vs {g.modulus}")


def compose(f: PLMap, g: PLMap) -> PLMap:
    """``f`` after ``g``."""
    _check_same_kind(f, g)
    return f.compose(g)


def conjugate(g: PLMap, u: PLMap) -> PLMap:
    """``u g u^-1``; its support is the ``u``-image of the support of ``g``."""
    _check_same_kind(g, u)
    return u.compose(g).compose(u.inverse())


def commutator(f: PLMap, g: PLMap) -> PLMap:
    """``f g f^-1 g^-1``."""
    _check_same_kind(f, g)
    return f.compose(g).compose(f.inverse()).compose(g.inverse())


def image(f: PLMap, s: SupportSet | ArcSet) -> SupportSet | ArcSet:
    """The exact image of an open set; infinite endpoints stay fixed."""
    if isinstance(s, SupportSet):
        if not isinstance(f, PLMapLine):
            raise KindMismatch("line set needs a line map")

        def ev(x):
            return f.evaluate(x) if is_finite(x) else x

        return SupportSet.from_pieces(
            IntervalLine(ev(iv.lo), ev(iv.hi)) for iv in s.pieces)
    if isinstance(s, ArcSet):
        if not isinstance(f, PLMapCircle):
            raise KindMismatch("circle set needs a circle map")
        if f.modulus != s.modulus:
            raise ModulusMismatch(f"{f.modulus} vs {s.modulus}")
        if s.full:
            return s
        return ArcSet.from_arcs(
            s.modulus,
            (Arc(s.modulus, f.evaluate(a.start), f.evaluate(a.end)) for a in s.arcs))
    raise KindMismatch(f"not an open set: {s!r}")


def agree_on_interval(f: PLMapLine, g: PLMapLine, lo: Rat, hi: Rat) -> bool:
    """Exact equality of two line maps on the closed interval ``[lo, hi]``.

    Both maps are affine between consecutive candidate points, so checking
    the candidates is equivalent to checking every point.
    """
    if lo > hi:
        raise ValueError("empty interval")
    candidates = {lo, hi}
    candidates.update(x for x in f._xs if lo < x < hi)
    candidates.update(x for x in g._xs if lo < x < hi)
    return all(f.evaluate(x) == g.evaluate(x) for x in candidates)


def roll_line_map(g: PLMapLine, modulus: Rat, cut: Rat) -> PLMapCircle:
    """Wrap a line map supported inside ``(cut, cut + L)`` onto the circle."""
    L = Rat(modulus)
    window = SupportSet.interval(cut, cut + L)
    if not g.support().is_subset(window):
        raise ValueError(f"support {g.support()} not inside ({cut},{cut + L})")
    cm = cut % L
    shift = cut - cm

    def lift(x: Rat) -> Rat:
        wrap = L if x < cm else Rat(0)
        return g.evaluate(x + shift + wrap) - shift - wrap

    xs = {x % L for x in g._xs}
    return PLMapCircle.from_samples(L, xs, lift)


def unroll_circle_map(r: PLMapCircle, cut: Rat) -> PLMapLine:
    """Cut the circle at a fixed point of ``r`` and read it as a line map.

    The result is the identity outside ``(cut, cut + L)`` and copies the
    circle action inside.
    """
    L = r.modulus
    c = cut % L
    if r.evaluate(c) != c:
        raise CannotUnroll(f"cut point {c} is moved by the map")

    def ev(t: Rat) -> Rat:
        if t == c or t == c + L:
            return t
        q = r.evaluate(t % L)
        return c + ((q - c) % L)

    xs = {c, c + L}
    xs.update(c + ((x - c) % L) for x in r._xs)
    return PLMapLine.from_samples(xs, ev, Rat(0), Rat(0))
