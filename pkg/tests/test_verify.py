import random

import pytest

from nlfsr import samples
from nlfsr.anf import Anf
from nlfsr.generate import random_lowering
from nlfsr.register import (
    ExhaustiveLimitError,
    Nlfsr,
    format_state,
    int_to_state,
    parse_state,
    state_to_int,
)
from nlfsr.statemap import build_correction
from nlfsr.verify import (
    brute_force_match,
    default_prefix_len,
    output_prefixes,
    output_set_equivalent,
    period_census,
    step_is_bijection,
)

A, B, F = samples.GALOIS_A, samples.GALOIS_B, samples.FIBONACCI


class TestOutputPrefixes:
    def test_matches_stepwise_simulation(self):
        for m in (A, B, F):
            for length in (1, 2, 7, 20, 33):
                table = output_prefixes(m, length)
                for x in range(16):
                    bits = m.output_sequence(int_to_state(x, 4), length)
                    assert table[x] == sum(b << t for t, b in enumerate(bits))

    def test_rejects_nonpositive_length(self):
        with pytest.raises(ValueError):
            output_prefixes(A, 0)


class TestBruteForceMatch:
    def test_finds_the_published_matching_state(self):
        got = brute_force_match(F, B, parse_state("0001"), prefix_len=20)
        assert format_state(got) == "0101"

    def test_register_matches_itself(self):
        for x in range(16):
            s = int_to_state(x, 4)
            r = brute_force_match(F, F, s)
            assert F.output_sequence(r, 20) == F.output_sequence(s, 20)

    def test_oracle_agrees_with_the_correction_formula(self):
        # scanned independently over all 16 states, then compared with the
        # algebraic mapping in the output-equality sense
        s = parse_state("0111")
        oracle = brute_force_match(F, A, s, prefix_len=20)
        assert F.output_sequence(s, 20) == A.output_sequence(oracle, 20)
        formula = build_correction(A).apply(s)
        assert A.output_sequence(oracle, 20) == A.output_sequence(formula, 20)
        # on this 15-cycle the phase pins the state itself
        assert format_state(oracle) == "0111"

    def test_no_match_returns_none(self):
        assert brute_force_match(F, samples.ROTATION, parse_state("0001")) is None

    def test_rotation_states_match_only_themselves(self):
        # a pure rotation emits its own state cyclically, so every output
        # prefix pins the state exactly
        got = brute_force_match(samples.ROTATION, samples.ROTATION, parse_state("1010"))
        assert state_to_int(got) == 0b1010

    def test_smallest_match_wins(self):
        # bit 0 of this degenerate register is stuck at zero, so states
        # 00 and 10 emit identical streams; the scan returns the smaller
        m = Nlfsr.parse("n = 2\nf1 = x0\nf0 = 0")
        got = brute_force_match(m, m, parse_state("10"))
        assert state_to_int(got) == 0

    def test_size_mismatch(self):
        two = Nlfsr.parse("n = 2\nf1 = x0\nf0 = x1")
        with pytest.raises(ValueError):
            brute_force_match(A, two, parse_state("0001"))


class TestOutputSetEquivalence:
    def test_published_trio_pairwise(self):
        assert output_set_equivalent(A, B).verdict == "equivalent"
        assert output_set_equivalent(F, A).verdict == "equivalent"
        assert output_set_equivalent(F, B).verdict == "equivalent"

    def test_reflexive(self):
        for m in (A, B, F, samples.ROTATION):
            assert output_set_equivalent(m, m).verdict == "equivalent"

    def test_rotation_not_equivalent_with_witness(self):
        report = output_set_equivalent(F, samples.ROTATION)
        assert report.verdict == "not-equivalent"
        assert report.witness is not None
        assert report.matching is None
        # the witness really has no counterpart
        side = F if report.witness_side == "first" else samples.ROTATION
        other = samples.ROTATION if report.witness_side == "first" else F
        assert brute_force_match(side, other, report.witness) is None

    def test_symmetry(self):
        pairs = [(A, B), (F, samples.ROTATION), (F, A)]
        for x, y in pairs:
            assert (
                output_set_equivalent(x, y).verdict
                == output_set_equivalent(y, x).verdict
            )

    def test_matching_covers_all_states(self):
        report = output_set_equivalent(F, B)
        assert set(report.matching) == set(range(16))
        length = report.prefix_len
        pf = output_prefixes(F, length)
        pg = output_prefixes(B, length)
        for x, y in report.matching.items():
            assert pf[x] == pg[y]

    def test_short_prefix_is_inconclusive(self):
        report = output_set_equivalent(F, B, prefix_len=3)
        assert report.verdict == "inconclusive"
        assert report.witness is None and report.matching is None

    def test_short_prefix_mismatch_is_still_conclusive(self):
        report = output_set_equivalent(F, samples.ROTATION, prefix_len=8)
        assert report.verdict == "not-equivalent"

    def test_default_prefix_len(self):
        assert output_set_equivalent(A, B).prefix_len == default_prefix_len(4) == 20

    def test_limit_guard(self):
        with pytest.raises(ExhaustiveLimitError):
            output_set_equivalent(A, B, limit=2)


class TestPeriodCensus:
    def test_trio_census(self):
        for m in (A, B, F):
            census = period_census(m)
            assert census.cycles == {15: 15, 1: 1}
            assert census.tail_states == 0
            assert census.period == m.period() == 15

    def test_two_bit_swap(self):
        census = period_census(Nlfsr.parse("n = 2\nf1 = x0\nf0 = x1"))
        assert census.cycles == {1: 2, 2: 2}

    def test_rotation_census(self):
        census = period_census(samples.ROTATION)
        assert census.cycles == {1: 2, 2: 2, 4: 12}

    def test_totals_cover_the_state_space(self):
        rng = random.Random(19)
        registers = [A, B, F, samples.ROTATION]
        for _ in range(10):
            _, _, g, _ = random_lowering(rng, rng.randint(4, 7))
            registers.append(g)
        for m in registers:
            census = period_census(m)
            assert census.total == 1 << m.n

    def test_tails_reported_separately(self):
        m = Nlfsr.parse("n = 2\nf1 = x0*x1\nf0 = x1")
        census = period_census(m)
        assert census.tail_states == 2
        assert census.cycles == {1: 2}
        assert not step_is_bijection(m)

    def test_uniform_registers_are_bijective_with_no_tails(self):
        rng = random.Random(29)
        for _ in range(15):
            _, _, g, _ = random_lowering(rng, rng.randint(4, 8))
            assert step_is_bijection(g)
            assert period_census(g).tail_states == 0

    def test_text_form(self):
        assert str(period_census(A)) == "15: 15, 1: 1"
        assert "tails: 2" in str(period_census(Nlfsr.parse("n = 2\nf1 = x0*x1\nf0 = x1")))

    def test_limit_guard(self):
        with pytest.raises(ExhaustiveLimitError):
            period_census(A, limit=3)
