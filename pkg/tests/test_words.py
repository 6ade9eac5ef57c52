from fractions import Fraction as F

import pytest

from helpers import random_word
from plgroups import GenAssignment, PLMapCircle, Word, parse_word, word_eval, word_reduce
from plgroups.errors import KindMismatch, UnboundGenerator


class TestReduction:
    def test_cancellation(self):
        w = word_reduce([("f", 1), ("g", 1), ("g", -1), ("f", 1)])
        assert w == Word((("f", 2),))

    def test_empty(self):
        assert word_reduce([]) == Word.identity()
        assert word_reduce([("f", 1), ("f", -1)]) == Word.identity()

    def test_idempotent(self):
        w = word_reduce([("a", 2), ("b", -1), ("b", 1), ("a", 1)])
        assert word_reduce(w) == w == Word((("a", 3),))

    def test_inverse_and_power(self):
        w = parse_word("a b^-2")
        assert w.inverse() == parse_word("b^2 a^-1")
        assert (w * w.inverse()).is_identity
        assert w ** 2 == parse_word("a b^-2 a b^-2")
        assert w ** -1 == w.inverse()

    def test_not_reduced_rejected(self):
        with pytest.raises(ValueError):
            Word((("a", 1), ("a", 2)))


class TestParseFormat:
    def test_round_trip(self):
        for text in ["1", "a", "a^2 b^-1", "r3^2 r2^2 r1^2 r5"]:
            assert str(parse_word(text)) == text

    def test_compact(self):
        w = parse_word("r3^2 r5")
        assert w.compact() == "r3^2*r5"
        assert parse_word(w.compact()) == w
        assert Word.identity().compact() == "1"

    def test_bad_letters(self):
        with pytest.raises(ValueError):
            parse_word("3x")
        with pytest.raises(ValueError):
            parse_word("a^")


class TestEvaluation:
    def test_empty_word_is_identity(self, ring):
        env = ring.assignment()
        assert word_eval(Word.identity(), env).is_identity()

    def test_leftmost_applied_last(self, ring):
        env = ring.assignment()
        # two steps of the second generator move 5/2 to 7/2
        assert word_eval(parse_word("r2^2"), env).evaluate(F(5, 2)) == F(7, 2)
        w = parse_word("r3^2 r2^2 r1^2 r5")
        assert word_eval(w, env).evaluate(F(3)) == F(37, 8)

    def test_unbound_name(self, ring):
        with pytest.raises(UnboundGenerator):
            word_eval(parse_word("nope"), ring.assignment())

    def test_homomorphism_random(self, rng, chain4):
        env = chain4.assignment()
        for _ in range(60):
            w1 = random_word(rng, env.names, 5)
            w2 = random_word(rng, env.names, 5)
            left = word_eval(w1 * w2, env)
            right = word_eval(w1, env).compose(word_eval(w2, env))
            assert left == right


class TestAssignment:
    def test_mixed_kinds_rejected(self, chain4):
        maps = dict(zip(chain4.names, chain4.maps))
        maps["c"] = PLMapCircle.identity(F(5))
        with pytest.raises(KindMismatch):
            GenAssignment(maps)

    def test_subset_and_extend(self, chain4):
        env = chain4.assignment()
        sub = env.subset(["f1", "f2"])
        assert sub.names == ("f1", "f2")
        ext = sub.extended({"h": env["f3"]})
        assert "h" in ext
