import math
import random

import pytest

from parcour.model1 import (
    PROB_FLOOR,
    EmptyTraining,
    SentencePair,
    TranslationTable,
    log_likelihood,
    train_model1,
    viterbi_align,
)

NULL = None


def em_oracle(bitext, iterations):
    """Independent flat-dict EM over (source, target) keys, NULL included.

    Same model as train_model1, different structure: probabilities and
    counts keyed by word pairs, normalization totals tracked explicitly.
    """
    t = {}
    seen_targets = {}
    for src, tgt in bitext:
        for e in [NULL] + list(src):
            row = seen_targets.setdefault(e, [])
            for f in tgt:
                if f not in row:
                    row.append(f)
    for e, fs in seen_targets.items():
        for f in fs:
            t[(e, f)] = 1.0 / len(fs)

    for _ in range(iterations):
        count = {pair: 0.0 for pair in t}
        total = {e: 0.0 for e in seen_targets}
        for src, tgt in bitext:
            sources = [NULL] + list(src)
            for f in tgt:
                z = sum(t[(e, f)] for e in sources)
                for e in sources:
                    share = t[(e, f)] / z
                    count[(e, f)] += share
                    total[e] += share
        for (e, f) in t:
            t[(e, f)] = count[(e, f)] / total[e]
    return t


def pairs_of(bitext):
    return [SentencePair(list(s), list(t)) for s, t in bitext]


SPEC_BITEXT = [(("a", "b"), ("x", "y")), (("a",), ("x",))]


class TestTraining:
    def test_matches_independent_oracle_on_spec_corpus(self):
        table = train_model1(pairs_of(SPEC_BITEXT), iterations=5)
        oracle = em_oracle(SPEC_BITEXT, 5)
        for (e, f), p in oracle.items():
            assert table.probs[e][f] == pytest.approx(p, abs=1e-12)

    def test_matches_oracle_on_random_corpora(self):
        rng = random.Random(99)
        words_s = ["s%d" % i for i in range(8)]
        words_t = ["t%d" % i for i in range(8)]
        for _ in range(20):
            bitext = []
            for _ in range(rng.randrange(2, 8)):
                ls = rng.randrange(1, 5)
                lt = rng.randrange(1, 5)
                src = tuple(rng.choice(words_s) for _ in range(ls))
                tgt = tuple(rng.choice(words_t) for _ in range(lt))
                bitext.append((src, tgt))
            iters = rng.randrange(1, 6)
            table = train_model1(pairs_of(bitext), iterations=iters)
            oracle = em_oracle(bitext, iters)
            for (e, f), p in oracle.items():
                assert table.probs[e][f] == pytest.approx(p, abs=1e-10)

    def test_second_pair_disambiguates(self):
        table = train_model1(pairs_of(SPEC_BITEXT), iterations=5)
        assert table.probs["a"]["x"] > table.probs["a"]["y"]

    def test_single_repeated_pair_row_sums_to_one(self):
        bitext = [(("a",), ("x",))] * 4
        table = train_model1(pairs_of(bitext), iterations=3)
        assert table.probs["a"] == {"x": 1.0}

    def test_rows_are_normalized(self):
        table = train_model1(pairs_of(SPEC_BITEXT), iterations=5)
        for row in table.probs.values():
            assert math.fsum(row.values()) == pytest.approx(1.0, abs=1e-9)

    def test_zero_iterations_rejected(self):
        with pytest.raises(EmptyTraining):
            train_model1(pairs_of(SPEC_BITEXT), iterations=0)

    def test_empty_training_rejected(self):
        with pytest.raises(EmptyTraining):
            train_model1([], iterations=5)
        with pytest.raises(EmptyTraining):
            train_model1([SentencePair([], ["x"])], iterations=5)

    def test_log_likelihood_non_decreasing(self):
        table = train_model1(pairs_of(SPEC_BITEXT), iterations=8)
        lls = table.log_likelihoods
        assert len(lls) == 9
        for prev, cur in zip(lls, lls[1:]):
            assert cur >= prev - 1e-9

    def test_training_is_deterministic(self):
        a = train_model1(pairs_of(SPEC_BITEXT), iterations=5)
        b = train_model1(pairs_of(SPEC_BITEXT), iterations=5)
        assert a.probs == b.probs
        assert a.log_likelihoods == b.log_likelihoods

    def test_final_history_entry_matches_log_likelihood(self):
        pairs = pairs_of(SPEC_BITEXT)
        table = train_model1(pairs, iterations=3)
        assert table.log_likelihoods[-1] == pytest.approx(log_likelihood(table, pairs), abs=1e-12)


class TestViterbi:
    def _table(self, probs):
        return TranslationTable(probs={k: dict(v) for k, v in probs.items()})

    def test_argmax_beats_null(self):
        table = self._table({"a": {"x": 0.9}, NULL: {"x": 0.1}})
        assert viterbi_align(table, SentencePair(["a"], ["x"])) == {(0, 0)}

    def test_all_unseen_ties_resolve_to_source_zero(self):
        table = self._table({})
        links = viterbi_align(table, SentencePair(["a", "b"], ["x", "y", "z"]))
        assert links == {(0, 0), (0, 1), (0, 2)}

    def test_null_best_leaves_token_unaligned(self):
        table = self._table({"a": {"x": 0.2}, NULL: {"x": 0.8}})
        assert viterbi_align(table, SentencePair(["a"], ["x"])) == set()

    def test_real_token_wins_tie_against_null(self):
        table = self._table({"a": {"x": 0.5}, NULL: {"x": 0.5}})
        assert viterbi_align(table, SentencePair(["a"], ["x"])) == {(0, 0)}

    def test_tie_between_real_tokens_goes_to_lowest_index(self):
        table = self._table({"a": {"x": 0.4}, "b": {"x": 0.4}, NULL: {"x": 0.1}})
        assert viterbi_align(table, SentencePair(["b", "a"], ["x"])) == {(0, 0)}

    def test_floor_used_for_unseen_combo(self):
        table = self._table({"a": {"y": 1.0}, NULL: {"y": PROB_FLOOR / 2}})
        # "x" unseen everywhere: every source scores the floor, NULL loses
        assert viterbi_align(table, SentencePair(["a"], ["x"])) == {(0, 0)}
