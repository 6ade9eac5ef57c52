"""Freely reduced words over named generators, and their evaluation.

A word is written leftmost-letter-applied-last, so the word ``f g``
evaluates to the map ``f after g``.  Words print as space-separated
letters like ``r3^2 r2^-1``; the identity prints as ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import KindMismatch, ModulusMismatch, UnboundGenerator
from .plmaps import PLMap, PLMapCircle, PLMapLine

_LETTER_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class Word:
    """A freely reduced word: adjacent letters have distinct names."""

    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for name, exp in self.letters:
            if exp == 0:
                raise ValueError(f"zero exponent on {name!r}")
        for (a, _), (b, _) in zip(self.letters, self.letters[1:]):
            if a == b:
                raise ValueError(f"word not freely reduced at {a!r}")

    @staticmethod
    def identity() -> "Word":
        return Word(())

    @classmethod
    def make(cls, pairs: Iterable[tuple[str, int]]) -> "Word":
        """Reduce an arbitrary letter sequence."""
        out: list[list] = []
        for name, exp in pairs:
            if exp == 0:
                continue
            if out and out[-1][0] == name:
                out[-1][1] += exp
                if out[-1][1] == 0:
                    out.pop()
            else:
                out.append([name, exp])
        return cls(tuple((n, e) for n, e in out))

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> "Word":
        return cls.make(((name, exp),))

    def __mul__(self, other: "Word") -> "Word":
        return Word.make(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((n, -e) for n, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word.identity()
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def expand(self) -> tuple[tuple[str, int], ...]:
        """Letters split into single steps with exponents ``+-1``."""
        out = []
        for name, exp in self.letters:
            step = 1 if exp > 0 else -1
            out.extend((name, step) for _ in range(abs(exp)))
        return tuple(out)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(n if e == 1 else f"{n}^{e}" for n, e in self.letters)

    def compact(self) -> str:
        """Single-token rendering with ``*`` joins, for one-line records."""
        if not self.letters:
            return "1"
        return "*".join(n if e == 1 else f"{n}^{e}" for n, e in self.letters)


def word_reduce(pairs: Iterable[tuple[str, int]] | Word) -> Word:
    if isinstance(pairs, Word):
        return pairs
    return Word.make(pairs)


def parse_word(text: str) -> Word:
    tokens = [t for t in re.split(r"[\s*]+", text.strip()) if t]
    if not tokens or tokens == ["1"]:
        return Word.identity()
    pairs = []
    for tok in tokens:
        m = _LETTER_RE.match(tok)
        if not m:
            raise ValueError(f"bad word letter {tok!r}")
        pairs.append((m.group(1), int(m.group(2) or 1)))
    return Word.make(pairs)


def commutator_word(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


def conjugate_word(w: Word, u: Word) -> Word:
    """The word ``u w u^-1``."""
    return u * w * u.inverse()


class GenAssignment:
    """An ordered binding of generator names to maps of one kind.

    All circle maps must share one modulus; the identity of the right
    kind is available through :meth:`identity`.
    """

    def __init__(self, maps: Mapping[str, PLMap]):
        if not maps:
            raise ValueError("assignment needs at least one generator")
        self._maps = dict(maps)
        kinds = {type(m) for m in self._maps.values()}
        if len(kinds) != 1:
            raise KindMismatch("mixed line and circle maps in one assignment")
        self.kind = "circle" if kinds == {PLMapCircle} else "line"
        self.modulus = None
        if self.kind == "circle":
            moduli = {m.modulus for m in self._maps.values()}
            if len(moduli) != 1:
                raise ModulusMismatch(f"moduli {sorted(moduli)}")
            self.modulus = moduli.pop()

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._maps)

    def __getitem__(self, name: str) -> PLMap:
        try:
            return self._maps[name]
        except KeyError:
            raise UnboundGenerator(name) from None

    def __contains__(self, name: str) -> bool:
        return name in self._maps

    def items(self):
        return self._maps.items()

    def identity(self) -> PLMap:
        if self.kind == "circle":
            return PLMapCircle.identity(self.modulus)
        return PLMapLine.identity()

    def extended(self, more: Mapping[str, PLMap]) -> "GenAssignment":
        merged = dict(self._maps)
        merged.update(more)
        return GenAssignment(merged)

    def subset(self, names: Iterable[str]) -> "GenAssignment":
        return GenAssignment({n: self[n] for n in names})


def word_eval(word: Word, env: GenAssignment) -> PLMap:
    """Evaluate a word; the leftmost letter acts last."""
    acc = env.identity()
    for name, exp in word.letters:
        acc = acc.compose(env[name].power(exp))
    return acc
