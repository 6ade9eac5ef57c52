"""Displacement certificates and the bounded compact-to-open mover.

A certificate exhibits conjugating words that push the joint support of
two generators completely off itself, in one of two shapes: a single
conjugator ``u``, or a pair ``(u1, u2)`` where the first conjugate
relocates the second support before the displacement test.  Verification
is an exact open-set computation; searches enumerate candidate words in
shortlex order and never return an unverified answer.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Iterator

from .intervals import Arc, ArcSet, IntervalLine, Rat, SupportSet, is_finite
from .plmaps import image
from .words import GenAssignment, Word, parse_word, word_eval

ONE = "ONE"
TWO = "TWO"


@dataclass(frozen=True)
class HigmanCertificate:
    s1: str
    s2: str
    g: Word
    shape: str
    u: Word | None = None
    u1: Word | None = None
    u2: Word | None = None
    verified: bool = False

    def __post_init__(self):
        if self.shape == ONE:
            if self.u is None or self.u1 is not None or self.u2 is not None:
                raise ValueError("shape ONE takes exactly the word u")
        elif self.shape == TWO:
            if self.u is not None or self.u1 is None or self.u2 is None:
                raise ValueError("shape TWO takes exactly the words u1, u2")
        else:
            raise ValueError(f"unknown shape {self.shape!r}")

    def render(self) -> str:
        if self.shape == ONE:
            return f"higman ONE {self.s1} {self.s2} {self.g.compact()} {self.u.compact()}"
        return (f"higman TWO {self.s1} {self.s2} {self.g.compact()} "
                f"{self.u1.compact()} {self.u2.compact()}")

    @staticmethod
    def parse(line: str) -> "HigmanCertificate":
        parts = line.split()
        if len(parts) < 6 or parts[0] != "higman":
            raise ValueError(f"bad certificate line {line!r}")
        shape, s1, s2 = parts[1], parts[2], parts[3]
        g = parse_word(parts[4])
        if shape == ONE and len(parts) == 6:
            return HigmanCertificate(s1, s2, g, ONE, u=parse_word(parts[5]))
        if shape == TWO and len(parts) == 7:
            return HigmanCertificate(s1, s2, g, TWO,
                                     u1=parse_word(parts[5]), u2=parse_word(parts[6]))
        raise ValueError(f"bad certificate line {line!r}")


@dataclass(frozen=True)
class HigmanCheck:
    ok: bool
    witness_point: Rat | None
    displaced_set: SupportSet | ArcSet
    moved_set: SupportSet | ArcSet


def _sample(s: SupportSet | ArcSet) -> Rat:
    """A concrete point of a nonempty open set."""
    if isinstance(s, ArcSet):
        a = s.arcs[0] if s.arcs else None
        if a is None:
            return Rat(0)  # full circle
        return (a.start + a.length / 2) % a.modulus
    iv = s.pieces[0]
    if is_finite(iv.lo) and is_finite(iv.hi):
        return (iv.lo + iv.hi) / 2
    if is_finite(iv.lo):
        return iv.lo + 1
    if is_finite(iv.hi):
        return iv.hi - 1
    return Rat(0)


def verify_higman(env: GenAssignment, cert: HigmanCertificate) -> HigmanCheck:
    """Exact verification; a failing certificate yields a common point."""
    supp1 = env[cert.s1].support()
    supp2 = env[cert.s2].support()
    g_map = word_eval(cert.g, env)
    if cert.shape == ONE:
        u_map = word_eval(cert.u, env)
        conj = u_map.compose(g_map).compose(u_map.inverse())
        base = supp1.union(supp2)
    else:
        u1_map = word_eval(cert.u1, env)
        first = u1_map.compose(g_map).compose(u1_map.inverse())
        u2_map = word_eval(cert.u2, env)
        conj = u2_map.compose(g_map).compose(u2_map.inverse())
        base = supp1.union(image(first, supp2))
    moved = image(conj, base)
    inter = base.intersect(moved)
    ok = inter.is_empty
    return HigmanCheck(ok, None if ok else _sample(inter), base, moved)


def _letters(alphabet: Iterable[str]) -> list[tuple[str, int]]:
    return [(name, sgn) for name in alphabet for sgn in (1, -1)]


def reduced_words(alphabet: Iterable[str], length: int) -> Iterator[Word]:
    """All freely reduced words of the exact length, in shortlex order.

    The letter order is each generator followed by its inverse, in the
    declared generator order.
    """
    letters = _letters(alphabet)

    def rec(prefix: list[tuple[str, int]], remaining: int) -> Iterator[Word]:
        if remaining == 0:
            yield Word.make(prefix)
            return
        for name, sgn in letters:
            if prefix and prefix[-1][0] == name and prefix[-1][1] == -sgn:
                continue
            prefix.append((name, sgn))
            yield from rec(prefix, remaining - 1)
            prefix.pop()

    yield from rec([], length)


def search_higman(env: GenAssignment, s1: str, s2: str, g: Word,
                  max_len: int, alphabet: Iterable[str] | None = None
                  ) -> HigmanCertificate | None:
    """Shortlex-bounded certificate search, single shape first per length.

    At each length the one-conjugator shape is tried for every word of
    that length, then the pair shape for every pair whose longer word has
    that length, both in shortlex order.  A hit is re-verified through
    :func:`verify_higman` before being returned, and the enumeration
    order is fixed, so repeated runs agree.
    """
    alphabet = tuple(alphabet) if alphabet is not None else env.names
    supp1 = env[s1].support()
    supp2 = env[s2].support()
    base_one = supp1.union(supp2)
    g_map = word_eval(g, env)

    conj_cache: dict[Word, object] = {}

    def conj(u: Word):
        m = conj_cache.get(u)
        if m is None:
            u_map = word_eval(u, env)
            m = u_map.compose(g_map).compose(u_map.inverse())
            conj_cache[u] = m
        return m

    def accept(cert: HigmanCertificate) -> HigmanCertificate:
        if not verify_higman(env, cert).ok:
            raise AssertionError("search produced an unverifiable certificate")
        return replace(cert, verified=True)

    by_len: list[list[Word]] = []
    for n in range(max_len + 1):
        by_len.append(list(reduced_words(alphabet, n)))
        for u in by_len[n]:
            if base_one.intersect(image(conj(u), base_one)).is_empty:
                return accept(HigmanCertificate(s1, s2, g, ONE, u=u))
        shorter = [w for ws in by_len[:n] for w in ws]
        for u1 in shorter + by_len[n]:
            moved = supp1.union(image(conj(u1), supp2))
            u2_pool = by_len[n] if u1 in shorter else shorter + by_len[n]
            for u2 in u2_pool:
                if moved.intersect(image(conj(u2), moved)).is_empty:
                    return accept(HigmanCertificate(s1, s2, g, TWO, u1=u1, u2=u2))
    return None


# --------------------------------------------------------------------------
# the compact-to-open mover

ClosedPieces = tuple[tuple[Rat, Rat], ...]


def _closed_image(env: GenAssignment, m, pieces: ClosedPieces) -> ClosedPieces:
    return tuple((m.evaluate(a), m.evaluate(b)) for a, b in pieces)


def _closed_inside(env: GenAssignment, pieces: ClosedPieces,
                   target: IntervalLine | Arc) -> bool:
    if env.kind == "circle":
        arcset = ArcSet.from_arcs(env.modulus, (target,))
        return all(arcset.contains_closed_arc(a, b) for a, b in pieces)
    return all(target.lo < a and b < target.hi and a <= b for a, b in pieces)


def _closed_meets_support(env: GenAssignment, pieces: ClosedPieces, supp) -> bool:
    for a, b in pieces:
        if supp.contains(a) or supp.contains(b):
            return True
        if a != b:
            if env.kind == "circle":
                inner = ArcSet.from_arcs(env.modulus, (Arc(env.modulus, a, b),))
                if not supp.intersect(inner).is_empty:
                    return True
            elif a < b and not supp.intersect(SupportSet.interval(a, b)).is_empty:
                return True
    return False


def co_move(env: GenAssignment, compact: ClosedPieces, target: IntervalLine | Arc,
            budget: int, require_commutator: bool = False,
            alphabet: Iterable[str] | None = None) -> Word | None:
    """A verified word moving a closed set into an open interval or arc.

    Staged search: the empty word, then generator powers (push the set
    with one generator), then push-and-contract pairs, then a full
    shortlex sweep, all within the word-length ``budget``.  With
    ``require_commutator`` the candidates are instead products of
    commutator blocks of generator letters, the shape the commutator
    subgroup guarantees.  Budgets make the search incomplete but total.
    """
    if env.kind == "circle" and compact:
        # complement of each closed arc [a,b] is the open arc (b,a)
        comp = ArcSet.full_circle(env.modulus)
        for a, b in compact:
            comp = comp.intersect(
                ArcSet.from_arcs(env.modulus, (Arc(env.modulus, b, a),)))
        if comp.is_empty:
            raise ValueError("the closed set may not cover the circle")
    alphabet = tuple(alphabet) if alphabet is not None else env.names

    def verified(word: Word) -> bool:
        m = word_eval(word, env)
        return _closed_inside(env, _closed_image(env, m, compact), target)

    if not compact or _closed_inside(env, compact, target):
        return Word.identity()

    if require_commutator:
        letters = _letters(alphabet)
        blocks = [(a, b) for a in letters for b in letters if a[0] != b[0]]
        block_words = [Word.make((a, b, (a[0], -a[1]), (b[0], -b[1])))
                       for a, b in blocks]
        frontier: list[Word] = [Word.identity()]
        for _ in range(budget // 4):
            nxt = []
            for base in frontier:
                for bw in block_words:
                    w = base * bw
                    if w.length() > budget:
                        continue
                    if verified(w):
                        return w
                    nxt.append(w)
            frontier = nxt
        return None

    # stage one: single-generator powers, by total length
    for n in range(1, budget + 1):
        for name in alphabet:
            for sgn in (1, -1):
                w = Word.gen(name, sgn * n)
                if verified(w):
                    return w
    # stage two: push with one generator meeting the set, contract with another
    for total in range(2, budget + 1):
        for p in range(1, total):
            q = total - p
            for push in alphabet:
                if not _closed_meets_support(env, compact, env[push].support()):
                    continue
                for s1 in (1, -1):
                    pushed = _closed_image(env, word_eval(Word.gen(push, s1 * p), env), compact)
                    for contract in alphabet:
                        if contract == push:
                            continue
                        for s2 in (1, -1):
                            w = Word.gen(contract, s2 * q) * Word.gen(push, s1 * p)
                            m = word_eval(Word.gen(contract, s2 * q), env)
                            if _closed_inside(env, _closed_image(env, m, pushed), target):
                                return w
    # stage three: full shortlex sweep
    for n in range(budget + 1):
        for w in reduced_words(alphabet, n):
            if verified(w):
                return w
    return None
