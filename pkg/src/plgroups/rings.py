"""Rings of arcs on the circle and their certificate machinery.

A ring is the circle analogue of a chain: single-arc supports that
overlap only consecutively, indices modulo the ring size.  For five-rings
satisfying the two endpoint conditions, this module also constructs the
conjugate generators ``rp_i`` and verifies the full list of support and
commutation identities they satisfy, itemized under frozen check ids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import ChainSystem, _two_chain_row, make_bump, validate_chain
from .errors import CannotUnroll, KindMismatch, ModulusMismatch, NonArcSupport, RingViolation
from .intervals import Arc, ArcSet, Rat
from .plmaps import PLMapCircle, PLMapLine, commutator, conjugate, image, roll_line_map, unroll_circle_map
from .report import CheckResult, failed, passed, result_for
from .words import GenAssignment, Word, commutator_word, conjugate_word, word_eval


@dataclass(frozen=True)
class RingSystem:
    """A validated ring with its itemized axiom and condition rows."""

    names: tuple[str, ...]
    maps: tuple[PLMapCircle, ...]
    modulus: Rat
    supports: tuple[Arc, ...]
    checks: tuple[CheckResult, ...]

    @property
    def m(self) -> int:
        return len(self.maps)

    def gen_name(self, i: int) -> str:
        """One-based, modular generator name lookup."""
        return self.names[(i - 1) % self.m]

    def gen(self, i: int) -> PLMapCircle:
        return self.maps[(i - 1) % self.m]

    def supp(self, i: int) -> Arc:
        return self.supports[(i - 1) % self.m]

    def assignment(self) -> GenAssignment:
        return GenAssignment(dict(zip(self.names, self.maps)))

    def support_union(self) -> ArcSet:
        out = ArcSet.empty(self.modulus)
        for m in self.maps:
            out = out.union(m.support())
        return out

    def check(self, check_id: str) -> CheckResult:
        for row in self.checks:
            if row.check_id == check_id:
                return row
        raise KeyError(check_id)


def _arc_shape(s: ArcSet) -> Arc | None:
    if not s.full and len(s.arcs) == 1:
        return s.arcs[0]
    return None


def _sample_point(s: ArcSet) -> Rat:
    a = s.arcs[0]
    return (a.start + a.length / 2) % a.modulus


def ring_axiom_checks(maps, names) -> list[CheckResult]:
    """The arc-ring axioms as itemized rows, nothing raised."""
    supports = [m.support() for m in maps]
    shapes = [_arc_shape(s) for s in supports]
    n = len(maps)
    rows = []
    for i in range(n):
        for j in range(i + 2, n):
            if min(j - i, n - (j - i)) < 2:
                continue
            cid = f"R1({i + 1},{j + 1})"
            inter = supports[i].intersect(supports[j])
            rows.append(result_for(cid, inter.is_empty,
                                   "disjoint" if inter.is_empty else f"overlap {inter}"))
    for i in range(n):
        j = (i + 1) % n
        cid = f"R2({i + 1},{j + 1})"
        rows.append(_proper_arc_overlap_row(cid, names[i], names[j],
                                            supports[i], supports[j],
                                            shapes[i], shapes[j]))
    return rows


def _proper_arc_overlap_row(cid, name_a, name_b, supp_a, supp_b, shape_a, shape_b):
    for nm, supp, shape in ((name_a, supp_a, shape_a), (name_b, supp_b, shape_b)):
        if supp.is_empty:
            return failed(cid, f"supp({nm}) is empty")
        if shape is None:
            return failed(cid, f"supp({nm}) = {supp} is not a single arc")
    inter = supp_a.intersect(supp_b)
    if inter.is_empty:
        return failed(cid, f"{shape_a} and {shape_b} do not overlap")
    if len(inter.arcs) != 1 or inter.full:
        return failed(cid, f"overlap {inter} is not a single arc")
    if inter == supp_a or inter == supp_b:
        return failed(cid, f"overlap {inter} is not proper in both supports")
    return passed(cid, f"overlap {inter.arcs[0]}")


def boundary_condition_rows(ring_names, maps, shapes) -> list[CheckResult]:
    """Endpoint conditions linking index ``i`` to ``i+2``, all indices mod m."""
    m = len(maps)
    rows = []
    for i in range(m):
        cid = f"L35_I({i + 1})"
        lhs = shapes[i].end
        rhs = shapes[(i + 2) % m].start
        rows.append(result_for(cid, lhs == rhs, f"{lhs} vs {rhs}"))
    for i in range(m):
        cid = f"L35_II({i + 1})"
        lhs = maps[(i + 1) % m].evaluate(maps[i].evaluate(shapes[(i + 1) % m].start))
        rhs = shapes[(i + 2) % m].start
        rows.append(result_for(cid, lhs == rhs, f"{lhs} vs {rhs}"))
    return rows


def validate_ring(maps, names=None) -> RingSystem:
    """Validate a ring; raises a violation naming axiom and witness.

    A disconnected or full-circle support raises :class:`NonArcSupport`;
    an empty support or a bad overlap raises :class:`RingViolation` on the
    relevant axiom row.  The returned system also carries the endpoint
    condition rows and the unrolled two-link rows, which may fail for a
    bare prering.
    """
    maps = tuple(maps)
    if len(maps) < 3:
        raise ValueError("a ring needs at least three maps")
    for m in maps:
        if not isinstance(m, PLMapCircle):
            raise KindMismatch("rings are made of circle maps")
    moduli = {m.modulus for m in maps}
    if len(moduli) != 1:
        raise ModulusMismatch(f"moduli {sorted(moduli)}")
    modulus = moduli.pop()
    names = tuple(names) if names else tuple(f"r{i + 1}" for i in range(len(maps)))
    if len(names) != len(maps):
        raise ValueError("one name per map")

    supports = [m.support() for m in maps]
    for nm, s in zip(names, supports):
        if s.full or len(s.arcs) > 1:
            raise NonArcSupport(f"supp({nm}) = {s} is not a single arc")

    rows = ring_axiom_checks(maps, names)
    for row in rows:
        if row.status == "FAIL":
            raise RingViolation(row.check_id, row.witness)

    shapes = [s.arcs[0] for s in supports]
    system = RingSystem(names, maps, modulus, tuple(shapes), ())
    rows.extend(boundary_condition_rows(names, maps, shapes))
    for i in range(1, len(maps) + 1):
        cid = f"TWO_CHAIN({i},{(i % len(maps)) + 1})"
        rows.append(_ring_two_chain_row(cid, system, i))
    return RingSystem(names, maps, modulus, tuple(shapes), tuple(rows))


def _ring_two_chain_row(cid: str, ring: RingSystem, i: int) -> CheckResult:
    try:
        chain = ring_to_chain_subsystem(ring, i, 2)
    except (CannotUnroll, ValueError) as exc:
        return failed(cid, str(exc))
    row = _two_chain_row(cid, chain.maps[0], chain.maps[1])
    return row


# --------------------------------------------------------------------------
# constructors

def make_ring5_from_bumps(bumps) -> RingSystem:
    """Wrap five line bumps supported in ``(0,2)`` onto the circle of
    circumference five, the ``i``-th shifted to the arc ``(i, i+2)``."""
    bumps = tuple(bumps)
    if len(bumps) != 5:
        raise ValueError("need exactly five bumps")
    L = Rat(5)
    maps = []
    for i, b in enumerate(bumps, start=1):
        shift = PLMapLine.translation(Rat(i))
        placed = conjugate(b, shift)
        maps.append(roll_line_map(placed, L, Rat(i)))
    return validate_ring(maps, tuple(f"r{i}" for i in range(1, 6)))


def make_standard_ring5() -> RingSystem:
    """Five unit-shifted reference bumps on the circle of circumference
    five; both endpoint conditions hold exactly for every index."""
    return make_ring5_from_bumps([make_bump(Rat(0), Rat(2))] * 5)


def rprime_name(i: int) -> str:
    return f"rp{((i - 1) % 5) + 1}"


def conjugator_word(ring: RingSystem, i: int) -> Word:
    """The conjugating word: squares of the next three generators down,
    then one copy of the previous generator."""
    if ring.m != 5:
        raise ValueError("conjugate generators are defined for five-rings")
    return Word.make((
        (ring.gen_name(i + 2), 2),
        (ring.gen_name(i + 1), 2),
        (ring.gen_name(i), 2),
        (ring.gen_name(i - 1), 1),
    ))


def build_rprime(ring: RingSystem, i: int) -> tuple[Word, PLMapCircle]:
    """The conjugate generator ``rp_i`` and its conjugating word."""
    c = conjugator_word(ring, i)
    env = ring.assignment()
    rp = conjugate(ring.gen(i), word_eval(c, env))
    return c, rp


def rprime_def_word(ring: RingSystem, i: int) -> Word:
    """``rp_i`` as a word in the base generators."""
    c = conjugator_word(ring, i)
    return conjugate_word(Word.gen(ring.gen_name(i)), c)


def derived_assignment(ring: RingSystem) -> tuple[GenAssignment, tuple[str, ...]]:
    """The assignment extended with ``rp1..rp5`` and the combined name list."""
    extra = {}
    for i in range(1, 6):
        nm = rprime_name(i)
        if nm in ring.names:
            raise ValueError(f"derived name {nm} clashes with a generator")
        extra[nm] = build_rprime(ring, i)[1]
    env = ring.assignment().extended(extra)
    return env, ring.names + tuple(rprime_name(i) for i in range(1, 6))


# --------------------------------------------------------------------------
# the derived-identity certificate

@dataclass(frozen=True)
class RingCertificate:
    ring: RingSystem
    rows: tuple[CheckResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.status == "PASS" for r in self.rows)

    def row(self, check_id: str) -> CheckResult:
        for r in self.rows:
            if r.check_id == check_id:
                return r
        raise KeyError(check_id)


def ring_certificate_checks(ring: RingSystem) -> list[CheckResult]:
    """Support and commutation identities of the conjugate generators.

    All identities are checked exactly for every index: containment of
    ``supp(rp_i)`` in the double overlap, the two displacement
    disjointnesses, commutation with every member of the extended
    generating set other than the two overlapping base generators, and
    the two conjugated-commutator identities.
    """
    if ring.m != 5:
        raise ValueError("the derived-identity certificate needs a five-ring")
    env, S = derived_assignment(ring)
    rows: list[CheckResult] = []
    rp_supports = {i: env[rprime_name(i)].support() for i in range(1, 6)}

    for i in range(1, 6):
        rp = rp_supports[i]
        window = ring.gen(i + 2).support().intersect(ring.gen(i + 3).support())
        ok = rp.is_subset(window)
        if ok:
            rows.append(passed(f"RP_SUPP({i})", f"supp({rprime_name(i)}) = {rp} within {window}"))
        else:
            stray = rp._combine(window, lambda a, b: a and not b)
            rows.append(failed(f"RP_SUPP({i})",
                               f"point {_sample_point(stray)} of supp outside {window}"))
    for i in range(1, 6):
        rp = rp_supports[i]
        moved = image(ring.gen(i + 2).inverse(), rp)
        inter = rp.intersect(moved)
        rows.append(_disjoint_row(f"RP_DISJ_A({i})", rp, moved, inter))
    for i in range(1, 6):
        rp = rp_supports[i]
        moved = image(ring.gen(i + 3), rp)
        inter = rp.intersect(moved)
        rows.append(_disjoint_row(f"RP_DISJ_B({i})", rp, moved, inter))
    for i in range(1, 6):
        excluded = {ring.gen_name(i + 2), ring.gen_name(i + 3), rprime_name(i)}
        rp_map = env[rprime_name(i)]
        for other in S:
            if other in excluded:
                continue
            ok = commutator(rp_map, env[other]).is_identity()
            rows.append(result_for(f"COMM_FAR({i},{other})", ok,
                                   "commute" if ok else "commutator is nontrivial"))
    for i in range(1, 6):
        rp_map = env[rprime_name(i)]
        moved_in = conjugate(rp_map, ring.gen(i + 2).inverse())
        ok = commutator(moved_in, rp_map).is_identity()
        rows.append(result_for(f"COMM_CONJ_A({i})", ok,
                               "commute" if ok else "commutator is nontrivial"))
    for i in range(1, 6):
        rp_map = env[rprime_name(i)]
        moved_in = conjugate(rp_map, ring.gen(i + 3).inverse())
        ok = commutator(moved_in, rp_map).is_identity()
        rows.append(result_for(f"COMM_CONJ_B({i})", ok,
                               "commute" if ok else "commutator is nontrivial"))
    return rows


def _disjoint_row(cid: str, a: ArcSet, b: ArcSet, inter: ArcSet) -> CheckResult:
    if inter.is_empty:
        return passed(cid, f"{a} disjoint from {b}")
    return failed(cid, f"common point {_sample_point(inter)}")


def ring_suite_rows(maps, names) -> tuple[list[CheckResult], RingSystem | None]:
    """All ring rows for reporting, never raising.

    When the axioms pass, the endpoint-condition and two-link rows are
    added, and for five-rings whose endpoint conditions hold, the full
    derived-identity certificate as well.
    """
    rows = ring_axiom_checks(maps, names)
    if any(r.status == "FAIL" for r in rows):
        return rows, None
    try:
        system = validate_ring(maps, names)
    except (RingViolation, ValueError) as exc:
        rows.append(failed("R2(shape)", str(exc)))
        return rows, None
    rows = list(system.checks)
    hypotheses_ok = all(r.status == "PASS" for r in rows if r.check_id.startswith("L35_"))
    if system.m == 5 and hypotheses_ok:
        rows.extend(ring_certificate_checks(system))
    return rows, system


def verify_ar_lemma(ring: RingSystem) -> RingCertificate:
    """Run the full derived-identity certificate.

    Precondition: the ring axioms and both endpoint conditions hold; a
    failing hypothesis is raised by name instead of being reported.
    """
    for row in ring.checks:
        if row.check_id.startswith("L35_") and row.status != "PASS":
            raise RingViolation(row.check_id, f"hypothesis fails: {row.witness}")
    rows = [r for r in ring.checks if not r.check_id.startswith(("R1(", "R2("))]
    rows.extend(ring_certificate_checks(ring))
    return RingCertificate(ring, tuple(rows))


# --------------------------------------------------------------------------
# unrolling to the line

def ring_to_chain_subsystem(ring: RingSystem, start: int, n: int) -> ChainSystem:
    """Cut the circle outside ``n`` consecutive supports and unroll them.

    The cut point is the midpoint of the longest complement gap (the gap
    point itself when the complement is a single point), so the unrolled
    supports keep their circle coordinates up to one added period.
    """
    m = ring.m
    if not 2 <= n <= m - 1:
        raise ValueError(f"need 2 <= n <= {m - 1}, got {n}")
    names = tuple(ring.gen_name(start + k) for k in range(n))
    maps = tuple(ring.gen(start + k) for k in range(n))
    union = ArcSet.empty(ring.modulus)
    for mp in maps:
        union = union.union(mp.support())
    if union.full:
        raise CannotUnroll("the selected supports cover the whole circle")
    if union.is_empty:
        cut = Rat(0)
    else:
        gap_start, gap_len = min(union.gaps(), key=lambda g: (-g[1], g[0]))
        cut = (gap_start + gap_len / 2) % ring.modulus
    lines = tuple(unroll_circle_map(mp, cut) for mp in maps)
    return validate_chain(lines, names)


# --------------------------------------------------------------------------
# generating-set data for the graph criterion

@dataclass(frozen=True)
class CVData:
    """Everything the graph-criterion checker needs for a five-ring."""

    S: tuple[str, ...]
    defs: dict[str, Word]
    witnesses: dict[frozenset, Word]
    classes: tuple[tuple[str, tuple[str, ...], tuple[Word, ...]], ...]
    dense: dict[str, tuple[str, ...]]


def cv_witness_data(ring: RingSystem) -> CVData:
    """The canonical witness package for a five-ring.

    Consecutive base pairs get the two-link relation word; each ``rp_i``
    gets the two conjugated-commutator words against its overlapping base
    generators; every other pair commutes outright and needs no explicit
    witness.  Classes pair each generator with its conjugate copy.
    """
    if ring.m != 5:
        raise ValueError("witness data is defined for five-rings")
    defs = {rprime_name(i): rprime_def_word(ring, i) for i in range(1, 6)}
    S = ring.names + tuple(rprime_name(i) for i in range(1, 6))
    witnesses: dict[frozenset, Word] = {}
    for i in range(1, 6):
        a = Word.gen(ring.gen_name(i))
        b = Word.gen(ring.gen_name(i + 1))
        h = b * a
        witnesses[frozenset((ring.gen_name(i), ring.gen_name(i + 1)))] = \
            commutator_word(a, conjugate_word(b, h))
        rp = Word.gen(rprime_name(i))
        for j in (i + 2, i + 3):
            x = Word.gen(ring.gen_name(j))
            witnesses[frozenset((rprime_name(i), ring.gen_name(j)))] = \
                commutator_word(conjugate_word(rp, x.inverse()), rp)
    classes = tuple(
        (f"V{i}", (ring.gen_name(i), rprime_name(i)), (conjugator_word(ring, i),))
        for i in range(1, 6))
    dense = {f"V{i}": (ring.gen_name(i), rprime_name(i)) for i in range(1, 6)}
    return CVData(S, defs, witnesses, classes, dense)
