"""Exact chain and ring groups of piecewise-linear homeomorphisms.

The package builds chains of interval-supported line maps and rings of
arc-supported circle maps in exact rational arithmetic, and machine-checks
the finite certificates attached to them: interval and arc axioms,
endpoint conditions, two-link relations, support containment and
displacement identities of the conjugate generators, the commutation
graph criterion, and displacement certificates.
"""

from .chains import (ChainSystem, TwoChainReport, check_two_chain,
                     embed_commutator_copy, make_bump, make_kkl_generators,
                     make_standard_chain, minimality_probe, standard_bump,
                     validate_chain)
from .cvgraph import (CVReport, DeltaWitness, DistinguishedWitness, build_delta,
                      check_cv_criterion, check_delta_edge, check_distinguished,
                      is_minipotent)
from .errors import (CannotUnroll, ChainViolation, KindMismatch,
                     ModulusMismatch, NonArcSupport, NonIntervalSupport,
                     NotATwoChain, RingViolation, UnboundGenerator)
from .higman import HigmanCertificate, HigmanCheck, co_move, search_higman, verify_higman
from .intervals import (Arc, ArcSet, IntervalLine, Rat, SupportSet, format_rat,
                        parse_rat)
from .plmaps import (PLMapCircle, PLMapLine, agree_on_interval, commutator,
                     compose, conjugate, image, roll_line_map,
                     unroll_circle_map)
from .report import CheckReport, CheckResult
from .rings import (RingCertificate, RingSystem, build_rprime, cv_witness_data,
                    derived_assignment, make_ring5_from_bumps,
                    make_standard_ring5, ring_to_chain_subsystem,
                    validate_ring, verify_ar_lemma)
from .words import GenAssignment, Word, parse_word, word_eval, word_reduce

__version__ = "0.1.0"
