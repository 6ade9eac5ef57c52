"""Chains of intervals on the line and the groups they generate.

A chain is a sequence of line maps whose single-interval supports overlap
only consecutively, read left to right.  The two-link condition checked
here is the displacement inequality at the overlap boundary together with
an exact relation identity; the standard constructors are calibrated so
that both hold with equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .errors import ChainViolation, KindMismatch, NonIntervalSupport, NotATwoChain
from .intervals import IntervalLine, Rat, SupportSet, is_finite
from .plmaps import PLMapLine, commutator, conjugate
from .report import CheckResult, failed, passed, result_for
from .words import GenAssignment, Word, word_eval

REFERENCE_BUMP_DATA = (
    (Rat(0), Rat(0)),
    (Rat(1, 2), Rat(1)),
    (Rat(1), Rat(3, 2)),
    (Rat(2), Rat(2)),
)


def make_bump(lo: Rat, hi: Rat) -> PLMapLine:
    """The reference bump rescaled onto ``(lo, hi)``.

    The result moves every interior point to the right, fixes everything
    else, and satisfies the two calibration identities
    ``f(lo + (hi-lo)/4) = mid`` and ``f(mid) = lo + 3(hi-lo)/4`` that make
    shifted copies into chains, not merely prechains.
    """
    lo, hi = Rat(lo), Rat(hi)
    if lo >= hi:
        raise ValueError(f"need lo < hi, got ({lo},{hi})")
    w = (hi - lo) / 2

    def phi(t: Rat) -> Rat:
        return lo + w * t

    return PLMapLine.make(tuple((phi(x), phi(y)) for x, y in REFERENCE_BUMP_DATA))


def standard_bump() -> PLMapLine:
    return make_bump(Rat(0), Rat(2))


def make_kkl_generators() -> tuple[PLMapLine, PLMapLine]:
    """The unit translation and the slope-two one-bend map.

    ``a`` translates by one; ``b`` is the identity left of zero, doubles
    on ``(0, 1)``, and translates by one right of one.
    """
    a = PLMapLine.translation(Rat(1))
    b = PLMapLine.make(((Rat(0), Rat(0)), (Rat(1), Rat(2))), Rat(0), Rat(1))
    return a, b


# --------------------------------------------------------------------------
# chain validation

@dataclass(frozen=True)
class ChainSystem:
    """A validated chain with its itemized certificate rows."""

    names: tuple[str, ...]
    maps: tuple[PLMapLine, ...]
    supports: tuple[IntervalLine, ...]
    checks: tuple[CheckResult, ...]

    @property
    def n(self) -> int:
        return len(self.maps)

    def assignment(self) -> GenAssignment:
        return GenAssignment(dict(zip(self.names, self.maps)))

    def support_union(self) -> SupportSet:
        out = SupportSet.empty()
        for m in self.maps:
            out = out.union(m.support())
        return out

    def check(self, check_id: str) -> CheckResult:
        for row in self.checks:
            if row.check_id == check_id:
                return row
        raise KeyError(check_id)


def _support_shape(s: SupportSet) -> IntervalLine | None:
    if len(s.pieces) == 1:
        return s.pieces[0]
    return None


def chain_axiom_checks(maps, names) -> list[CheckResult]:
    """The interval-chain axioms as itemized rows, nothing raised."""
    supports = [m.support() for m in maps]
    shapes = [_support_shape(s) for s in supports]
    n = len(maps)
    rows = []
    for i in range(n):
        for j in range(i + 2, n):
            cid = f"C1({i + 1},{j + 1})"
            inter = supports[i].intersect(supports[j])
            rows.append(result_for(cid, inter.is_empty,
                                   "disjoint" if inter.is_empty else f"overlap {inter}"))
    for i in range(n - 1):
        cid = f"C2({i + 1},{i + 2})"
        rows.append(_proper_overlap_row(cid, names[i], names[i + 1],
                                        supports[i], supports[i + 1],
                                        shapes[i], shapes[i + 1]))
    return rows


def _proper_overlap_row(cid, name_a, name_b, supp_a, supp_b, shape_a, shape_b) -> CheckResult:
    for nm, supp, shape in ((name_a, supp_a, shape_a), (name_b, supp_b, shape_b)):
        if supp.is_empty:
            return failed(cid, f"supp({nm}) is empty")
        if shape is None:
            return failed(cid, f"supp({nm}) = {supp} is not a single interval")
    inter = supp_a.intersect(supp_b)
    if inter.is_empty:
        return failed(cid, f"{shape_a} and {shape_b} do not overlap")
    if len(inter.pieces) != 1:
        return failed(cid, f"overlap {inter} is not a single interval")
    if inter == supp_a or inter == supp_b:
        return failed(cid, f"overlap {inter} is not proper in both supports")
    return passed(cid, f"overlap {inter.pieces[0]}")


def boundary_condition_rows(maps, names, supports) -> list[CheckResult]:
    """Rows for the two endpoint conditions linking index ``i`` to ``i+2``."""
    n = len(maps)
    rows = []
    for i in range(n - 2):
        cid = f"L35_I({i + 1})"
        lhs, rhs = supports[i].hi, supports[i + 2].lo
        rows.append(result_for(cid, lhs == rhs, f"{lhs} vs {rhs}"))
    for i in range(n - 2):
        cid = f"L35_II({i + 1})"
        if not (is_finite(supports[i + 1].lo) and is_finite(supports[i + 2].lo)):
            rows.append(failed(cid, "unbounded support"))
            continue
        lhs = maps[i + 1].evaluate(maps[i].evaluate(supports[i + 1].lo))
        rhs = supports[i + 2].lo
        rows.append(result_for(cid, lhs == rhs, f"{lhs} vs {rhs}"))
    return rows


def validate_chain(maps, names=None) -> ChainSystem:
    """Validate a chain; raises a violation naming axiom and witness.

    A disconnected support raises :class:`NonIntervalSupport`; an empty
    support or a bad overlap raises :class:`ChainViolation` with the
    failing axiom row.  The returned system carries all axiom rows plus
    the per-pair two-link rows and the endpoint-condition rows, which may
    legitimately fail for a bare prechain.
    """
    maps = tuple(maps)
    if len(maps) < 2:
        raise ValueError("a chain needs at least two maps")
    for m in maps:
        if not isinstance(m, PLMapLine):
            raise KindMismatch("chains are made of line maps")
    names = tuple(names) if names else tuple(f"f{i + 1}" for i in range(len(maps)))
    if len(names) != len(maps):
        raise ValueError("one name per map")

    supports = [m.support() for m in maps]
    for nm, s in zip(names, supports):
        if len(s.pieces) > 1:
            raise NonIntervalSupport(f"supp({nm}) = {s} is not a single interval")

    rows = chain_axiom_checks(maps, names)
    for row in rows:
        if row.status == "FAIL":
            raise ChainViolation(row.check_id, row.witness)

    shapes = [s.pieces[0] for s in supports]
    for i in range(len(maps) - 1):
        rows.append(_two_chain_row(f"TWO_CHAIN({i + 1},{i + 2})", maps[i], maps[i + 1]))
    rows.extend(boundary_condition_rows(maps, names, shapes))
    return ChainSystem(names, maps, tuple(shapes), tuple(rows))


# --------------------------------------------------------------------------
# the two-link condition

@dataclass(frozen=True)
class TwoChainReport:
    """Exact data for one ordered overlapping pair.

    ``boundary_image`` is the image of the left end of the second support
    under the second map after the first; the pair condition compares it
    with the right end of the first support.  The group-level conclusion
    drawn from a passing inequality is recorded, not re-proved.
    """

    boundary_image: Rat
    support_end: Rat
    inequality_holds: bool
    relation_is_identity: bool

    @property
    def is_chain_group_pair(self) -> bool:
        return self.inequality_holds


def check_two_chain(f1: PLMapLine, f2: PLMapLine) -> TwoChainReport:
    """Check the displacement inequality and the relation identity.

    Requires ``(f1, f2)`` to be an ordered two-link chain: bounded
    single-interval supports with a proper overlap, first support to the
    left.
    """
    s1, s2 = f1.support(), f2.support()
    for nm, s in (("first", s1), ("second", s2)):
        if len(s.pieces) != 1:
            raise NotATwoChain(f"{nm} support {s} is not a single interval")
    iv1, iv2 = s1.pieces[0], s2.pieces[0]
    ends = (iv1.lo, iv1.hi, iv2.lo, iv2.hi)
    if not all(is_finite(e) for e in ends):
        raise NotATwoChain(f"unbounded supports {iv1}, {iv2}")
    if not (iv1.lo < iv2.lo < iv1.hi < iv2.hi):
        raise NotATwoChain(f"supports {iv1}, {iv2} are not an ordered proper overlap")

    lhs = f2.evaluate(f1.evaluate(iv2.lo))
    rhs = iv1.hi
    h = f2.compose(f1)
    twisted = h.compose(f2).compose(h.inverse())
    rel = commutator(f1, twisted)
    return TwoChainReport(lhs, rhs, lhs >= rhs, rel.is_identity())


def _two_chain_row(cid: str, f1: PLMapLine, f2: PLMapLine) -> CheckResult:
    try:
        rep = check_two_chain(f1, f2)
    except NotATwoChain as exc:
        return failed(cid, exc.witness)
    ok = rep.inequality_holds and rep.relation_is_identity
    note = "=" if rep.boundary_image == rep.support_end else (
        ">" if rep.inequality_holds else "<")
    witness = (f"boundary image {rep.boundary_image} {note} {rep.support_end}, "
               f"relation {'identity' if rep.relation_is_identity else 'nontrivial'}")
    return result_for(cid, ok, witness)


def chain_suite_rows(maps, names) -> list[CheckResult]:
    """Axiom rows plus the per-pair two-link rows, never raising."""
    rows = chain_axiom_checks(maps, names)
    for i in range(len(maps) - 1):
        rows.append(_two_chain_row(f"TWO_CHAIN({i + 1},{i + 2})", maps[i], maps[i + 1]))
    return rows


def make_standard_chain(n: int) -> ChainSystem:
    """``n`` unit-shifted copies of the reference bump; every endpoint
    condition and two-link condition holds with equality."""
    if n < 2:
        raise ValueError("a chain needs at least two maps")
    maps = tuple(make_bump(Rat(i), Rat(i + 2)) for i in range(n))
    return validate_chain(maps, tuple(f"f{i + 1}" for i in range(n)))


# --------------------------------------------------------------------------
# commutator embedding on (0, 1/2)

@dataclass(frozen=True)
class EmbedVerification:
    direct_copy_1: bool
    displaced_copy_1: bool
    direct_copy_2: bool
    displaced_copy_2: bool
    supports_confined: bool

    @property
    def all_ok(self) -> bool:
        return (self.direct_copy_1 and self.displaced_copy_1
                and self.direct_copy_2 and self.displaced_copy_2
                and self.supports_confined)


def embed_commutator_copy(n1: PLMapLine, n2: PLMapLine):
    """Commutators with the unit translation that copy maps off their window.

    For maps supported in ``(0, 1/2)``, the commutator with the unit
    translation acts as the original on ``[0, 1/2]`` and as a displaced
    inverse copy one unit to the right (one unit to the left for the
    inverse translation); it is the identity elsewhere.  Returns both
    commutators and the exact verification of those statements.
    """
    from .plmaps import agree_on_interval

    window = SupportSet.interval(Rat(0), Rat(1, 2))
    for m in (n1, n2):
        if not m.support().is_subset(window):
            raise ValueError(f"support {m.support()} is not inside (0,1/2)")
    a = PLMapLine.translation(Rat(1))
    g1 = commutator(n1, a)
    g2 = commutator(n2, a.inverse())
    copy1 = conjugate(n1.inverse(), a)
    copy2 = conjugate(n2.inverse(), a.inverse())
    allowed1 = SupportSet.interval(Rat(0), Rat(1, 2)).union(
        SupportSet.interval(Rat(1), Rat(3, 2)))
    allowed2 = SupportSet.interval(Rat(-1), Rat(-1, 2)).union(
        SupportSet.interval(Rat(0), Rat(1, 2)))
    verification = EmbedVerification(
        direct_copy_1=agree_on_interval(g1, n1, Rat(0), Rat(1, 2)),
        displaced_copy_1=agree_on_interval(g1, copy1, Rat(1), Rat(3, 2)),
        direct_copy_2=agree_on_interval(g2, n2, Rat(0), Rat(1, 2)),
        displaced_copy_2=agree_on_interval(g2, copy2, Rat(-1), Rat(-1, 2)),
        supports_confined=(g1.support().is_subset(allowed1)
                           and g2.support().is_subset(allowed2)),
    )
    return g1, g2, verification


# --------------------------------------------------------------------------
# orbit coverage probe

@dataclass(frozen=True)
class ProbeRow:
    depth: int
    points: int
    hits: int
    cells: int

    @property
    def coverage(self) -> Rat:
        return Rat(self.hits, self.cells)


@dataclass(frozen=True)
class ProbeReport:
    rows: tuple[ProbeRow, ...]

    def final_coverage(self) -> Rat:
        return self.rows[-1].coverage


def minimality_probe(env: GenAssignment, seed: Rat, window: tuple[Rat, Rat],
                     eps: Rat, depth: int) -> ProbeReport:
    """Orbit coverage of a closed window under short words, as evidence.

    Enumerates the ball of reduced words of each length up to ``depth``,
    collects the exact orbit points of ``seed`` landing in the window, and
    counts hit cells of the ``eps`` grid (a cell counts when a point lies
    in its closed extent).  Every reported point is independently
    re-verified by evaluating its witness word from scratch.  Coverage is
    evidence only; nothing here certifies minimality.
    """
    eps = Rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    circle = env.kind == "circle"
    lo, hi = Rat(window[0]), Rat(window[1])
    if circle:
        L = env.modulus
        lo, hi = lo % L, hi % L
        if lo == hi:
            raise ValueError("empty window")
        span = (hi - lo) % L
        seed = Rat(seed) % L
    else:
        if not lo < hi:
            raise ValueError("empty window")
        span = hi - lo
        seed = Rat(seed)

    union = None
    for name in env.names:
        s = env[name].support()
        union = s if union is None else union.union(s)
    inside = (union.contains_closed_arc(lo, hi) if circle
              else union.contains_closed_interval(lo, hi))
    if not inside:
        raise ValueError(f"window [{lo},{hi}] is not inside the support {union}")

    def offset(p: Rat) -> Rat | None:
        o = (p - lo) % L if circle else p - lo
        return o if 0 <= o <= span else None

    cells = ceil(span / eps)
    steps = [(name, sgn, env[name].power(sgn)) for name in env.names for sgn in (1, -1)]
    points: dict[Rat, Word] = {seed: Word.identity()}
    frontier = [seed]
    verified: set[Rat] = set()
    rows = []
    for d in range(depth + 1):
        if d > 0:
            new = []
            for p in frontier:
                w = points[p]
                for name, sgn, m in steps:
                    q = m.evaluate(p)
                    if q not in points:
                        points[q] = Word.gen(name, sgn) * w
                        new.append(q)
            frontier = new
        collected = sorted(p for p in points if offset(p) is not None)
        for p in collected:
            if p in verified:
                continue
            if word_eval(points[p], env).evaluate(seed) != p:
                raise RuntimeError(f"orbit point {p} failed word re-verification")
            verified.add(p)
        hits: set[int] = set()
        for p in collected:
            o = offset(p)
            i = int(o // eps)
            if i >= cells:
                i = cells - 1
            hits.add(i)
            if o % eps == 0 and i >= 1:
                hits.add(i - 1)
        rows.append(ProbeRow(d, len(collected), len(hits), cells))
    return ProbeReport(tuple(rows))
