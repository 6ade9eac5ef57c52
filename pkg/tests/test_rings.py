from fractions import Fraction as F

import pytest

from helpers import perturbed_bumps, ring_gen_eval, ring_word_eval
from plgroups import (Arc, ArcSet, PLMapCircle, build_rprime,
                      ring_to_chain_subsystem, validate_ring, verify_ar_lemma)
from plgroups.chains import make_bump
from plgroups.errors import NonArcSupport, RingViolation
from plgroups.plmaps import conjugate, image, roll_line_map
from plgroups.rings import make_ring5_from_bumps, ring_suite_rows, rprime_name
from plgroups.words import word_eval


def _arcset(L, a, b):
    return ArcSet.from_arcs(F(L), (Arc(F(L), F(a), F(b)),))


class TestStandardRing:
    def test_supports(self, ring):
        assert [str(a) for a in ring.supports] == [
            "(1,3) mod 5", "(2,4) mod 5", "(3,0) mod 5", "(4,1) mod 5", "(0,2) mod 5"]

    def test_generators_match_window_oracle(self, ring, rng):
        for i in range(1, 6):
            m = ring.gen(i)
            for _ in range(20):
                x = F(rng.randint(0, 319), 64)
                assert m.evaluate(x) == ring_gen_eval(i, x)

    def test_all_rows_pass(self, ring):
        assert all(r.status == "PASS" for r in ring.checks)

    def test_endpoint_condition_traces(self, ring):
        # the second-after-first images of the overlap starts
        assert ring.gen(1).evaluate(F(2)) == F(5, 2)
        assert ring.gen(2).evaluate(F(5, 2)) == 3
        # wrapping instance: the image of the start of the last overlap
        assert ring.gen(5).evaluate(ring.gen(4).evaluate(F(0))) == 1

    def test_touching_supports_violate_overlap(self):
        # three bumps on (0,1),(1,2),(2,3) mod 3: consecutive supports touch
        from plgroups import PLMapLine
        touch = [roll_line_map(conjugate(make_bump(F(0), F(1)),
                                         PLMapLine.translation(F(i))),
                               F(3), F(i)) for i in range(3)]
        with pytest.raises(RingViolation) as exc:
            validate_ring(touch)
        assert exc.value.axiom.startswith("R2")

    def test_gap_overlap_violation(self):
        # four arcs mod 5 where the supports two apart still overlap in (2,3)
        spans = [(F(0), F(3)), (F(1), F(4)), (F(2), F(5)), (F(3), F(6))]
        maps = [roll_line_map(make_bump(lo, hi), F(5), lo) for lo, hi in spans]
        with pytest.raises(RingViolation) as exc:
            validate_ring(maps)
        assert exc.value.axiom == "R1(1,3)"

    def test_identity_generator_is_overlap_violation(self, ring):
        maps = list(ring.maps)
        maps[2] = PLMapCircle.identity(F(5))
        rows = ring_suite_rows(maps, ring.names)[0]
        bad = {r.check_id for r in rows if r.status == "FAIL"}
        assert bad == {"R2(2,3)", "R2(3,4)"}

    def test_split_support_raises(self, ring):
        maps = list(ring.maps)
        maps[2] = maps[2].compose(conjugate(maps[2], PLMapCircle.rotation(F(5), F(5, 2))))
        with pytest.raises(NonArcSupport):
            validate_ring(maps)


class TestRPrime:
    def test_golden_support(self, ring):
        word, rp1 = build_rprime(ring, 1)
        assert str(word) == "r3^2 r2^2 r1^2 r5"
        assert rp1.support() == _arcset(5, F(9, 2), F(37, 8))

    def test_rotational_shift(self, ring):
        _, rp3 = build_rprime(ring, 3)
        assert rp3.support() == _arcset(5, F(3, 2), F(13, 8))

    def test_definition_matches_conjugation(self, ring):
        env = ring.assignment()
        for i in range(1, 6):
            word, rp = build_rprime(ring, i)
            assert rp == conjugate(ring.gen(i), word_eval(word, env))

    def test_boundary_equalities(self, ring):
        # the left end of each conjugate support is the image of the
        # third-next support start under the second-next generator
        for i in range(1, 6):
            _, rp = build_rprime(ring, i)
            lo = rp.support().arcs[0].start
            hi = rp.support().arcs[0].end
            assert lo == ring.gen(i + 2).evaluate(ring.supp(i + 3).start)
            two = ring.gen(i + 2).power(2)
            sq = ring.gen(i + 1).power(2)
            assert hi == two.evaluate(sq.evaluate(ring.supp(i + 2).start))

    def test_oracle_chain_for_first_support(self, ring):
        # recompute both ends with the windowed evaluator only
        lo = ring_word_eval([3], F(4))
        hi = ring_word_eval([3, 3, 2, 2], F(3))
        assert (lo, hi) == (F(9, 2), F(37, 8))
        _, rp1 = build_rprime(ring, 1)
        arc = rp1.support().arcs[0]
        assert (arc.start, arc.end) == (lo, hi)


class TestCertificate:
    def test_full_certificate_passes(self, ring):
        cert = verify_ar_lemma(ring)
        assert cert.all_pass
        ids = {r.check_id for r in cert.rows}
        for i in range(1, 6):
            for fam in ("L35_I", "L35_II", "RP_SUPP", "RP_DISJ_A", "RP_DISJ_B",
                        "COMM_CONJ_A", "COMM_CONJ_B"):
                assert f"{fam}({i})" in ids

    def test_golden_witness_sets(self, ring):
        _, rp1 = build_rprime(ring, 1)
        supp = rp1.support()
        window = ring.gen(3).support().intersect(ring.gen(4).support())
        assert window == _arcset(5, 4, 0)
        assert supp.is_subset(window)
        pulled = image(ring.gen(3).inverse(), supp)
        assert pulled == _arcset(5, F(4), F(17, 4))
        pushed = image(ring.gen(4), supp)
        assert pushed == _arcset(5, F(0), F(1, 8))
        assert supp.is_disjoint(pulled) and supp.is_disjoint(pushed)

    def test_commutation_far_count(self, ring):
        cert = verify_ar_lemma(ring)
        far = [r for r in cert.rows if r.check_id.startswith("COMM_FAR")]
        assert len(far) == 35  # 7 others per index, self excluded
        assert all(r.status == "PASS" for r in far)

    def test_equivariance_of_supports(self, ring):
        base = build_rprime(ring, 1)[1].support().arcs[0]
        for i in range(2, 6):
            arc = build_rprime(ring, i)[1].support().arcs[0]
            shift = F(i - 1)
            assert arc.start == (base.start + shift) % 5
            assert arc.end == (base.end + shift) % 5

    def test_precondition_enforced(self):
        # a valid prering whose endpoint conditions fail: uncalibrated bumps
        bump = make_bump(F(0), F(2))
        squashed = bump.compose(bump)  # same support, different boundary images
        system = make_ring5_from_bumps([squashed] * 5)
        assert any(r.status == "FAIL" and r.check_id.startswith("L35_II")
                   for r in system.checks)
        with pytest.raises(RingViolation):
            verify_ar_lemma(system)


class TestPerturbedRings:
    def test_conditions_survive_calibrated_perturbation(self):
        p1, p2, p3 = perturbed_bumps()
        base = make_bump(F(0), F(2))
        rings = [
            make_ring5_from_bumps([p1] * 5),
            make_ring5_from_bumps([p2] * 5),
            make_ring5_from_bumps([p3] * 5),
            make_ring5_from_bumps([p1, p2, p3, base, p1]),
        ]
        for system in rings:
            cert = verify_ar_lemma(system)
            for fam in ("RP_SUPP", "RP_DISJ_A", "RP_DISJ_B"):
                for i in range(1, 6):
                    assert cert.row(f"{fam}({i})").status == "PASS"
            assert cert.all_pass


class TestUnroll:
    def test_pair_unroll(self, ring):
        chain = ring_to_chain_subsystem(ring, 1, 2)
        assert [str(s) for s in chain.supports] == ["(1,3)", "(2,4)"]

    def test_four_unroll_cuts_at_single_point(self, ring):
        chain = ring_to_chain_subsystem(ring, 1, 4)
        assert [str(s) for s in chain.supports] == ["(1,3)", "(2,4)", "(3,5)", "(4,6)"]

    def test_wrapping_start(self, ring):
        chain = ring_to_chain_subsystem(ring, 4, 2)
        assert chain.names == ("r4", "r5")
        assert all(r.status == "PASS" for r in chain.checks
                   if r.check_id.startswith(("C1", "C2", "TWO_CHAIN")))

    def test_full_selection_rejected(self, ring):
        with pytest.raises(ValueError):
            ring_to_chain_subsystem(ring, 1, 5)

    def test_derived_names(self):
        assert rprime_name(1) == "rp1"
        assert rprime_name(6) == "rp1"
