import math

import numpy as np
import pytest

from textdecepter import (AttackConfig, CountingOracle, EmbeddingStore, LexiconClassifier, MeanVectorScorer, Perturbation,
                          Status, Tier, attack, filter_candidates, parse, partition_sentences, rank_sentences, render,
                          reset_insignificant, semantic_similarity, top_k_synonyms, try_candidate)
from textdecepter.embeddings import SynonymCandidate, build_similarity_matrix
from textdecepter.errors import OracleUnavailable

from oracles import RecordingOracle


def toy_store(extra=None):
    """Orthogonal filler words plus hand-placed synonym pairs."""
    filler = ["good", "great", "film", "plot", "the", "a", "bad", "cast", "and", "music"]
    dim = len(filler) + 8
    vocab, vecs = [], []
    for i, w in enumerate(filler):
        v = np.zeros(dim)
        v[i] = 1.0
        vocab.append(w)
        vecs.append(v)
    base = len(filler)
    for word, cos in (extra or {}).items():
        v = np.zeros(dim)
        v[base] = cos
        v[base + 1] = math.sqrt(1 - cos ** 2)
        vocab.append(word)
        vecs.append(v)
    return EmbeddingStore(vocab, np.array(vecs))


class TestSimilarity:
    def test_identity(self, scorer):
        assert semantic_similarity("a good film", "a good film", scorer) == 1.0

    def test_symmetric(self, scorer):
        a, b = "a good film", "a terrible plot"
        assert semantic_similarity(a, b, scorer) == semantic_similarity(b, a, scorer)

    def test_hand_formula(self, store, scorer):
        u = store.unit
        va = (u[store.index["good"]] + u[store.index["film"]]) / 2
        vb = (u[store.index["terrible"]] + u[store.index["film"]]) / 2
        want = max(0.0, float(va @ vb / (np.linalg.norm(va) * np.linalg.norm(vb))))
        assert semantic_similarity("good film", "terrible film", scorer) == pytest.approx(want, abs=1e-12)

    def test_closer_synonym_scores_higher(self):
        store = toy_store({"word": 1.0, "near": 0.7, "far": 0.5})
        # the word direction is (1, 0) in the last block, so "near" has cosine 0.7 with it
        rest = ["good", "great", "film", "plot", "the", "a", "bad", "cast", "and", "music"]
        words = (rest * 2)[:19] + ["word"]
        text = " ".join(words)
        near = " ".join(words[:-1] + ["near"])
        far = " ".join(words[:-1] + ["far"])
        scorer = MeanVectorScorer(store)
        s_near, s_far = scorer(text, near), scorer(text, far)
        assert s_near >= s_far
        # hand value: the other 19 unit vectors are orthogonal to the last block
        s = np.zeros(store.dim)
        for w in words[:-1]:
            s += store.unit[store.index[w]]
        a = s + store.unit[store.index["word"]]
        b = s + store.unit[store.index["near"]]
        assert s_near == pytest.approx(a @ b / np.linalg.norm(a) / np.linalg.norm(b))

    def test_unknown_words_only(self, scorer):
        assert semantic_similarity("zorblax", "quuxly", scorer) == 0.0


class TestFilter:
    def test_beautiful_keeps_resplendent(self, store, scorer):
        doc = parse("strange and beautiful film")
        cands = top_k_synonyms("beautiful", 50, 0.5, build_similarity_matrix(doc, store))
        kept = filter_candidates(doc, 2, cands, AttackConfig(), scorer, store)
        assert "resplendent" in [c.word for c in kept]
        sims = [c.similarity for c in kept]
        assert sims == sorted(sims, reverse=True)
        assert all(s >= 0.7 for s in sims)

    def test_fine_mode_drops_wrong_tense(self, store, scorer):
        doc = parse("the film keeps undermining its own story .")
        cands = top_k_synonyms("undermining", 50, 0.5, build_similarity_matrix(doc, store))
        fine = [c.word for c in filter_candidates(doc, 3, cands, AttackConfig(pos_mode="fine"), scorer, store)]
        coarse = [c.word for c in filter_candidates(doc, 3, cands, AttackConfig(pos_mode="coarse"), scorer, store)]
        assert "jeopardizing" in fine and "jeopardizes" not in fine
        assert "jeopardizes" in coarse

    def test_empty(self, store, scorer):
        assert filter_candidates(parse("good film"), 0, [], AttackConfig(), scorer, store) == []

    def test_epsilon_gate(self, store, scorer):
        doc = parse("good film")
        cands = [SynonymCandidate("decent", 0.9)]
        assert filter_candidates(doc, 0, cands, AttackConfig(epsilon=1.0), scorer, store) == []


CLF = LexiconClassifier({"good": 1, "great": 3, "bad": -2, "awful": -5, "poor": -1, "meh": 0})


def setup(raw, y0="POS"):
    doc = parse(raw)
    part = partition_sentences(doc, y0, CLF)
    _, aggs = rank_sentences(doc, part, y0, CLF)
    return doc, part, aggs


class TestTryCandidate:
    def test_full_text(self):
        doc, part, aggs = setup("a good film")
        assert try_candidate(doc, {}, 1, "bad", "POS", CLF, part, aggs) is Tier.FULL_TEXT

    def test_sentence(self):
        # sentence 0 goes to -1 but the document stays at +2
        doc, part, aggs = setup("a good film . great cast .")
        assert try_candidate(doc, {}, 1, "poor", "POS", CLF, part, aggs) is Tier.SENTENCE

    def test_lexicon_sum_predicts_sentence_flip(self, corpus, victim, weights):
        from oracles import lexicon_sum
        checked = 0
        for ex in corpus:
            doc = parse(ex.text)
            if victim.classify(doc.raw) != ex.label or len(doc.sentences) < 2:
                continue
            part = partition_sentences(doc, ex.label, victim)
            _, aggs = rank_sentences(doc, part, ex.label, victim)
            for s in part.set_a:
                tok = doc.sentence_tokens(s)[0]
                if not tok.is_word:
                    continue
                sentence_sum = lexicon_sum(" ".join(t.normalized for t in doc.sentence_tokens(s)), weights) \
                    - weights.get(tok.normalized, 0) + weights["awful"]
                full_sum = lexicon_sum(doc.raw, weights) - weights.get(tok.normalized, 0) + weights["awful"]
                tier = try_candidate(doc, {}, tok.position, "awful", ex.label, victim, part, aggs)
                flips = (lambda v: (v > 0) != (ex.label == "POS"))
                if flips(full_sum):
                    assert tier is Tier.FULL_TEXT
                elif flips(sentence_sum):
                    assert tier is Tier.SENTENCE
                checked += 1
        assert checked > 10

    def test_aggregate(self):
        # sentence sums +2 | -2 | +3, so A = {0, 2}, B = {1}; only {1, 2} keeps POS
        doc, part, aggs = setup("a good good film . bad cast . great music .")
        assert part.set_a == (0, 2) and part.set_b == (1,)
        assert [a.members for a in aggs] == [(1, 2)]
        # great -> good: text +1 and sentence 2 +1 stay POS, aggregate {1, 2} drops to -1
        assert try_candidate(doc, {}, 6, "good", "POS", CLF, part, aggs) is Tier.AGGREGATE
        assert try_candidate(doc, {}, 6, "good", "POS", CLF, part, aggs, use_aggregates=False) is None

    def test_rejection(self):
        doc, part, aggs = setup("a good film . great cast .")
        assert try_candidate(doc, {}, 1, "great", "POS", CLF, part, aggs) is None
        # a zero-sum sentence is a tie, which the victim calls NEG
        assert try_candidate(doc, {}, 1, "meh", "POS", CLF, part, aggs) is Tier.SENTENCE

    def test_already_flipped_sentence_is_not_reused(self):
        doc, part, aggs = setup("a good good film . great great cast .")
        subs = {1: "bad", 2: "meh"}
        # sentence 0 is already negative, swapping the noun must not count as a flip
        assert try_candidate(doc, subs, 3, "meh", "POS", CLF, part, aggs) is None

    def test_better_than_skips_lower_tiers(self):
        doc, part, aggs = setup("a good film . great cast .")
        rec = RecordingOracle(CLF)
        assert try_candidate(doc, {}, 1, "poor", "POS", rec, part, aggs, better_than=Tier.SENTENCE) is None
        assert len(rec.trace) == 1

    def test_queries_use_current_state(self):
        doc, part, aggs = setup("a good film . great cast .")
        rec = RecordingOracle(CLF)
        try_candidate(doc, {3: "good"}, 1, "meh", "POS", rec, part, aggs)
        assert rec.trace[0] == "a meh film . good cast ."


class TestReset:
    def test_single_necessary(self):
        doc = parse("a good film")
        perts = [Perturbation(1, "good", "bad", Tier.FULL_TEXT)]
        assert reset_insignificant(doc, perts, "POS", CLF) == perts

    def test_either_alone_suffices(self):
        # "good good film": +2; each "awful" alone gives -4
        doc = parse("good good film")
        perts = [Perturbation(0, "good", "awful", Tier.SENTENCE), Perturbation(1, "good", "awful", Tier.FULL_TEXT)]
        kept = reset_insignificant(doc, perts, "POS", CLF)
        assert kept == [perts[1]]
        assert CLF.classify(render(doc, {p.position: p.replacement for p in kept})) == "NEG"

    def test_empty(self):
        assert reset_insignificant(parse("a good film"), [], "POS", CLF) == []

    def test_kept_ones_were_needed_when_tested(self):
        doc = parse("good good good film great")
        perts = [Perturbation(i, "x", r, Tier.SENTENCE) for i, r in [(0, "bad"), (1, "awful"), (2, "poor"), (4, "meh")]]
        assert CLF.classify(render(doc, {p.position: p.replacement for p in perts})) == "NEG"
        rec = RecordingOracle(CLF)
        kept = reset_insignificant(doc, perts, "POS", rec)
        active = {p.position: p.replacement for p in perts}
        for p in perts:
            trial = {k: v for k, v in active.items() if k != p.position}
            if p in kept:
                assert CLF.classify(render(doc, trial)) == "POS"
            else:
                active = trial
        assert CLF.classify(render(doc, active)) == "NEG"


class TestAttack:
    def test_table_example(self, store, victim):
        result = attack("strange and beautiful film", "POS", victim, store)
        assert result.status is Status.SUCCESS
        assert [(p.original, p.replacement) for p in result.perturbations] == [("beautiful", "resplendent")]
        assert result.adversarial_text == "strange and resplendent film"
        assert victim.classify(result.adversarial_text) == "NEG"
        assert result.perturbed_word_pct == pytest.approx(25.0)

    def test_already_misclassified(self, store, victim):
        result = attack("strange and beautiful film", "NEG", victim, store)
        assert result.status is Status.SKIPPED_MISCLASSIFIED
        assert result.queries == 1

    def test_prefers_higher_tier_over_similarity(self):
        # "zac" is the closer synonym of "zab" but only flips its sentence;
        # "zad" is further away and flips the whole document
        store = toy_store({"zab": 1.0, "zac": 0.95, "zad": 0.8})
        clf = LexiconClassifier({"zab": 2, "good": 1, "great": 3, "zac": -1.5, "zad": -10})
        raw = "zab good . great ."
        doc = parse(raw)
        cfg = AttackConfig(epsilon=0.0, min_cosine=0.5)
        cands = filter_candidates(doc, 0, top_k_synonyms("zab", 50, 0.5, build_similarity_matrix(doc, store)),
                                  cfg, MeanVectorScorer(store), store)
        assert [c.word for c in cands][:2] == ["zac", "zad"]
        result = attack(raw, "POS", clf, store, cfg)
        assert result.status is Status.SUCCESS
        assert [(p.replacement, p.accepted_via) for p in result.perturbations] == [("zad", Tier.FULL_TEXT)]

    def test_greedy_can_miss_joint_flips(self):
        # Known limitation.  In a one-sentence text the sentence and the only
        # aggregate are the text itself, so a swap is committed only if it
        # flips the whole text.  Here each swap alone leaves the sum positive
        # (+0.5) and only the pair flips it (-0.5); an exhaustive search finds
        # the pair, the greedy search does not.
        store = toy_store({"zab": 1.0, "zac": 0.9})
        clf = LexiconClassifier({"zab": 1}, bias=-0.5)
        assert clf.classify("zab zab") == "POS"
        assert clf.classify("zac zab") == clf.classify("zab zac") == "POS"
        assert clf.classify("zac zac") == "NEG"
        result = attack("zab zab", "POS", clf, store, AttackConfig(epsilon=0.0))
        assert result.status is Status.FAILED
        assert result.perturbations == []

    def test_budget(self, store, victim, corpus):
        cfg = AttackConfig(query_budget=3)
        for ex in corpus:
            result = attack(ex.text, ex.label, victim, store, cfg)
            assert result.queries <= cfg.query_budget + 1
        long_doc = next(ex for ex in corpus if ex.id == "pos-11")
        assert attack(long_doc.text, "POS", victim, store, cfg).status is Status.BUDGET_EXHAUSTED

    def test_oracle_failure_is_reported(self, store):
        class Flaky:
            def __init__(self):
                self.calls = 0

            def classify(self, text):
                self.calls += 1
                if self.calls > 2:
                    raise OracleUnavailable("gone")
                return "POS"

        result = attack("a good film . great cast .", "POS", Flaky(), store)
        assert result.status is Status.FAILED
        assert "OracleUnavailable" in result.error

    def test_deterministic(self, store, victim, corpus):
        for ex in corpus[:8]:
            a = attack(ex.text, ex.label, victim, store, doc_id=ex.id)
            b = attack(ex.text, ex.label, victim, store, doc_id=ex.id)
            assert a.to_dict() == b.to_dict()

    def test_counting_replay(self, store, victim, corpus):
        for ex in corpus:
            result = attack(ex.text, ex.label, victim, store)
            counting = CountingOracle(victim)
            attack(ex.text, ex.label, counting, store)
            assert counting.count == result.queries

    def test_degenerate_documents(self, store, victim):
        for raw in ["?", "zorblax", "12 34", "good"]:
            attack(raw, victim.classify(raw), victim, store)

    def test_record_shape(self, store, victim):
        record = attack("strange and beautiful film", "POS", victim, store, doc_id="t7").to_dict()
        assert record["id"] == "t7" and record["status"] == "SUCCESS"
        assert record["perturbations"] == [
            {"position": 2, "original": "beautiful", "replacement": "resplendent", "tier": "FULL_TEXT"}]


@pytest.mark.parametrize("kwargs", [
    {"epsilon": 1.5}, {"k": -1}, {"min_cosine": 2}, {"pos_mode": "medium"}, {"p_max": 0}, {"query_budget": 0},
])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        AttackConfig(**kwargs)
