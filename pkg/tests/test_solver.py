from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperdeg import (
    DegreeSequence,
    Hypergraph,
    InstanceTooLargeError,
    SplitMix64,
    ThreePartitionInstance,
    WeightVector,
    ZeroWeightInstance,
    bruteforce_degseq,
    bruteforce_partition,
    bruteforce_zero,
    decide_degseq,
    decide_partition,
    decide_zero,
    degree_sum,
    enumerate_triples,
    gen_planted_degseq,
    prefilter_degseq,
    sign_partition,
    verify_certificate,
    verify_partition_certificate,
    verify_zero_certificate,
)
from hyperdeg.solver import _ordered_candidates, _search, _search_compiled


class TestPrefilter:
    def test_sum_not_divisible(self):
        reason = prefilter_degseq(DegreeSequence((3, 1, 1, 1, 1, 1)))
        assert reason is not None and "divisible" in reason

    def test_per_vertex_cap(self):
        reason = prefilter_degseq(DegreeSequence((2, 2, 2)))
        assert reason is not None and "C(n-1,2)" in reason

    def test_pass(self):
        assert prefilter_degseq(DegreeSequence((2, 2, 2, 1, 1, 1))) is None

    def test_entry_exceeds_edge_count(self):
        # sum 6 -> 2 edges, but one vertex wants 3 incidences
        reason = prefilter_degseq(DegreeSequence((3, 1, 1, 1, 0, 0)))
        assert reason is not None and "edge count" in reason

    def test_empty(self):
        assert prefilter_degseq(DegreeSequence(())) is None


class TestDecideDegseq:
    def test_single_triple(self):
        out = decide_degseq(DegreeSequence((1, 1, 1)))
        assert out.answer == "YES"
        assert out.certificate.edges == ((0, 1, 2),)

    def test_no_on_tiny_ground_set(self):
        out = decide_degseq(DegreeSequence((2, 2, 2)))
        assert out.answer == "NO"
        assert out.certificate is None

    def test_witnessed_yes(self):
        d = DegreeSequence((2, 2, 2, 1, 1, 1))
        out = decide_degseq(d)
        assert out.answer == "YES"
        assert len(out.certificate.edges) == 3
        assert verify_certificate(out.certificate, d)

    def test_unknown_on_tiny_budget(self):
        d = degree_sum(gen_planted_degseq(7, 17, seed=3)[1])
        out = decide_degseq(d, budget=2)
        assert out.answer == "UNKNOWN"
        assert out.certificate is None
        assert out.stats.budget_used == 1.0

    def test_budget_monotone(self):
        d = degree_sum(gen_planted_degseq(6, 9, seed=11)[1])
        reference = decide_degseq(d, budget=10**7)
        assert reference.answer == "YES"
        settled = reference.stats.nodes
        for budget in (settled, settled + 1, 10 * settled):
            again = decide_degseq(d, budget=budget)
            assert again.answer == "YES"
            assert again.certificate == reference.certificate
            assert again.stats.nodes == settled

    def test_budget_monotone_no_answer(self):
        # passes every prefilter condition but is unrealizable: vertex 3 is
        # isolated, so only one triple is available for degrees (3, 3, 3)
        d = DegreeSequence((3, 3, 3, 0))
        reference = decide_degseq(d, budget=10**7)
        assert reference.answer == "NO"
        assert prefilter_degseq(d) is None
        settled = reference.stats.nodes
        for budget in (settled, settled + 5, 10 * settled):
            assert decide_degseq(d, budget=budget).answer == "NO"
        assert decide_degseq(d, budget=settled - 1).answer == "UNKNOWN"

    def test_deterministic(self):
        d = DegreeSequence((4, 3, 3, 2, 2, 1, 3))
        first = decide_degseq(d)
        second = decide_degseq(d)
        assert first.answer == second.answer
        assert first.certificate == second.certificate
        assert first.stats.nodes == second.stats.nodes


class TestDecideZero:
    def test_everything_in_zero_part(self):
        inst = ZeroWeightInstance(WeightVector((0, 0, 0)), DegreeSequence((1, 1, 1)))
        out = decide_zero(inst)
        assert out.answer == "YES"
        assert out.certificate.edges == ((0, 1, 2),)

    def test_empty_zero_part(self):
        inst = ZeroWeightInstance(
            WeightVector((-1, -1, -1, 3)), DegreeSequence((3, 0, 0, 1))
        )
        assert decide_zero(inst).answer == "NO"

    @given(st.integers(0, 10**6), st.integers(4, 7))
    def test_planted_zero_instances(self, seed, n):
        rng = SplitMix64(seed)
        w = WeightVector(tuple(rng.below(7) - 3 for _ in range(n)))
        zero_edges = sign_partition(w).s_zero.edges
        picked = tuple(e for e in zero_edges if rng.below(2))
        c = degree_sum(Hypergraph(n, picked))
        inst = ZeroWeightInstance(w, c)
        out = decide_zero(inst)
        assert out.answer == "YES"
        assert verify_zero_certificate(out.certificate.edges, inst)


class TestDecidePartition:
    def test_single_group(self):
        out = decide_partition(ThreePartitionInstance((1, 1, 1), 3))
        assert out.answer == "YES"
        assert out.certificate.edges == ((0, 1, 2),)

    def test_two_groups(self):
        inst = ThreePartitionInstance((1, 2, 3, 4, 5, 7), 11)
        out = decide_partition(inst)
        assert out.answer == "YES"
        assert out.certificate.edges == ((0, 2, 5), (1, 3, 4))
        assert verify_partition_certificate(out.certificate.edges, inst)

    def test_no_triple_reaches_target(self):
        # triple values here are only 3 or 9, never 6
        inst = ThreePartitionInstance((1, 1, 1, 1, 1, 7), 6)
        assert decide_partition(inst).answer == "NO"

    def test_n_not_divisible_by_three(self):
        inst = ThreePartitionInstance((1, 1, 1, 1), 3)
        out = decide_partition(inst)
        assert out.answer == "NO"
        assert out.stats.nodes == 0


class TestBruteforceOracles:
    def test_degseq_examples(self):
        assert bruteforce_degseq(DegreeSequence((1, 1, 1)))
        assert not bruteforce_degseq(DegreeSequence((2, 2, 2)))
        assert bruteforce_degseq(DegreeSequence((3, 3, 3, 3)))

    def test_degseq_guard(self):
        with pytest.raises(InstanceTooLargeError):
            bruteforce_degseq(DegreeSequence((0,) * 7))

    def test_zero_examples(self):
        assert bruteforce_zero(
            ZeroWeightInstance(WeightVector((0, 0, 0)), DegreeSequence((1, 1, 1)))
        )
        assert not bruteforce_zero(
            ZeroWeightInstance(WeightVector((-1, -1, -1, 3)), DegreeSequence((3, 0, 0, 1)))
        )

    def test_zero_planted(self):
        w = WeightVector((1, -1, 0, 0, 0))
        zero_edges = sign_partition(w).s_zero.edges
        g = Hypergraph(5, (zero_edges[0], zero_edges[2]))
        inst = ZeroWeightInstance(w, degree_sum(g))
        assert bruteforce_zero(inst)

    def test_zero_guard(self):
        inst = ZeroWeightInstance(WeightVector((0,) * 7), DegreeSequence((1,) * 7))
        with pytest.raises(InstanceTooLargeError):
            bruteforce_zero(inst)

    def test_partition_examples(self):
        assert bruteforce_partition(ThreePartitionInstance((1, 1, 1), 3))
        assert bruteforce_partition(ThreePartitionInstance((1, 2, 3, 4, 5, 7), 11))
        assert not bruteforce_partition(ThreePartitionInstance((1, 1, 1, 1, 1, 7), 6))
        assert bruteforce_partition(ThreePartitionInstance((0,) * 6, 0))

    def test_partition_odd_n(self):
        assert not bruteforce_partition(ThreePartitionInstance((1, 1, 1, 1), 3))

    def test_partition_guard(self):
        with pytest.raises(InstanceTooLargeError):
            bruteforce_partition(ThreePartitionInstance((0,) * 15, 0))


class TestOracleAgreement:
    @pytest.mark.parametrize("n", (4, 5))
    def test_exhaustive_grid(self, n):
        for vals in product(range(3), repeat=n):
            d = DegreeSequence(vals)
            out = decide_degseq(d)
            assert out.answer != "UNKNOWN"
            assert (out.answer == "YES") == bruteforce_degseq(d), vals

    def test_prefilter_never_rejects_yes(self):
        for vals in product(range(4), repeat=5):
            d = DegreeSequence(vals)
            if bruteforce_degseq(d):
                assert prefilter_degseq(d) is None, vals


class TestEngineEquivalence:
    """The numba engine must match the pure-Python reference exactly."""

    @given(st.integers(0, 10**6))
    @settings(max_examples=60)
    def test_lockstep(self, seed):
        rng = SplitMix64(seed)
        n = 3 + rng.below(4)
        target = tuple(rng.below(comb(n - 1, 2) + 2) for _ in range(n))
        budget = (3, 25, 10**7)[rng.below(3)]
        ordered = _ordered_candidates(enumerate_triples(n), target)
        assert _search(n, ordered, target, budget) == _search_compiled(
            n, ordered, target, budget
        )

    def test_zero_budget(self):
        cands = enumerate_triples(4)
        assert _search(4, cands, (1, 1, 1, 0), 0) == _search_compiled(
            4, cands, (1, 1, 1, 0), 0
        )


class TestPlantedRoundTrip:
    @given(st.integers(0, 10**6))
    @settings(max_examples=40)
    def test_planted_yes(self, seed):
        rng = SplitMix64(seed)
        n = 4 + rng.below(5)
        m = rng.below(comb(n, 3) + 1)
        inst, witness = gen_planted_degseq(n, m, seed=seed)
        out = decide_degseq(inst.d, budget=10**8)
        assert out.answer == "YES"
        assert verify_certificate(out.certificate, inst.d)
