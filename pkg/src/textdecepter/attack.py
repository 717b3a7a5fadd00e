"""Synonym-substitution search against a hard-label victim.

Words are visited in the order produced by :mod:`textdecepter.ranking`.  For
each word the POS- and similarity-filtered synonyms are tried, and a synonym
is committed when it flips (in order of preference) the whole text, the
word's own sentence, or the smallest original-label aggregate containing that
sentence.  Once the text is misclassified, substitutions that are not needed
to keep it misclassified are reverted.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

import numpy as np

from . import textproc
from .embeddings import build_similarity_matrix, top_k_synonyms
from .errors import BudgetExhausted, OracleProtocolError, OracleUnavailable
from .ranking import partition_sentences, rank_sentences, rank_words
from .textproc import render, render_sentences
from .victim import CountingOracle, MemoOracle

logger = logging.getLogger(__name__)


class Tier(str, enum.Enum):
    FULL_TEXT = "FULL_TEXT"
    SENTENCE = "SENTENCE"
    AGGREGATE = "AGGREGATE"

    @property
    def rank(self):
        return _TIER_RANK[self]


_TIER_RANK = {Tier.FULL_TEXT: 1, Tier.SENTENCE: 2, Tier.AGGREGATE: 3}


class Status(str, enum.Enum):
    SUCCESS = "SUCCESS"
    FAILED = "FAILED"
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"
    SKIPPED_MISCLASSIFIED = "SKIPPED_MISCLASSIFIED"


@dataclass(frozen=True)
class AttackConfig:
    """Attack hyper-parameters.

    Attributes:
        epsilon: minimum semantic similarity between original and adversarial text.
        k: number of nearest neighbours fetched per word.
        min_cosine: minimum cosine similarity of a synonym.
        pos_mode: ``"coarse"`` or ``"fine"`` POS agreement for synonyms.
        p_max: largest sentence-combination size enumerated during ranking.
        query_budget: queries allowed after the initial label check.
        aggregate_budget: combination queries allowed during sentence ranking.
        use_aggregates: disable to drop the aggregate acceptance rule.
    """

    epsilon: float = 0.7
    k: int = 50
    min_cosine: float = 0.5
    pos_mode: str = "coarse"
    p_max: int = 3
    query_budget: int = 20000
    aggregate_budget: int = 500
    use_aggregates: bool = True

    def __post_init__(self):
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError("epsilon must be in [0, 1]")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if not -1.0 <= self.min_cosine <= 1.0:
            raise ValueError("min_cosine must be in [-1, 1]")
        if self.pos_mode not in textproc.POS_MODES:
            raise ValueError(f"pos_mode must be one of {textproc.POS_MODES}")
        if self.p_max < 1:
            raise ValueError("p_max must be >= 1")
        if self.query_budget < 1:
            raise ValueError("query_budget must be positive")
        if self.aggregate_budget < 0:
            raise ValueError("aggregate_budget must be non-negative")


@dataclass(frozen=True)
class Perturbation:
    position: int
    original: str
    replacement: str
    accepted_via: Tier


@dataclass
class AttackResult:
    status: Status
    original_label: str
    queries: int
    similarity: float
    perturbed_word_pct: float
    word_count: int
    adversarial_text: Optional[str] = None
    perturbations: list[Perturbation] = field(default_factory=list)
    doc_id: str = ""
    predicted_label: Optional[str] = None
    error: Optional[str] = None

    def to_dict(self):
        record = {"id": self.doc_id}
        record.update(asdict(self))
        del record["doc_id"]
        record["status"] = self.status.value
        record["perturbations"] = [
            {"position": p.position, "original": p.original, "replacement": p.replacement,
             "tier": p.accepted_via.value}
            for p in self.perturbations
        ]
        return record


class MeanVectorScorer:
    """Cosine similarity of the averaged unit word vectors of two texts.

    Words missing from the store are ignored; a text without any known word
    scores 0 against anything but itself.  Values are clipped to [0, 1].
    """

    def __init__(self, store, cache_size=4096):
        self.store = store
        self._cache = {}
        self._cache_size = cache_size

    def _mean(self, text):
        hit = self._cache.get(text)
        if hit is not None or text in self._cache:
            return hit
        ids = [self.store.index[t.normalized] for t in textproc.tokenize(text).tokens
               if t.is_word and t.normalized in self.store.index]
        mean = self.store.unit[ids].mean(axis=0) if ids else None
        if len(self._cache) >= self._cache_size:
            self._cache.clear()
        self._cache[text] = mean
        return mean

    def __call__(self, a, b):
        if a == b:
            return 1.0
        va, vb = self._mean(a), self._mean(b)
        if va is None or vb is None:
            return 0.0
        denom = float(np.linalg.norm(va) * np.linalg.norm(vb))
        if denom == 0.0:
            return 0.0
        return min(1.0, max(0.0, float(va @ vb) / denom))


def semantic_similarity(a, b, scorer: Callable[[str, str], float]):
    """Similarity in [0, 1] under ``scorer``; identical texts score exactly 1."""
    if a == b:
        return 1.0
    return scorer(a, b)


@dataclass(frozen=True)
class ScoredCandidate:
    word: str
    cosine: float
    similarity: float
    vocab_index: int


def filter_candidates(doc, position, candidates, config, scorer, store, substitutions=None, tagger=None):
    """Keep candidates that agree in POS and stay within ``config.epsilon``.

    Similarity is measured between the original text and the current
    perturbed text with the candidate put in at ``position``.

    Returns:
        list of :class:`ScoredCandidate`, most similar first (ties: higher
        cosine, then vocabulary order).
    """
    substitutions = substitutions or {}
    original = doc.word(position)
    kept = []
    for cand in candidates:
        if cand.word == original.normalized or not textproc.is_single_word(cand.word):
            continue
        if not textproc.pos_compatible(doc, position, cand.word, config.pos_mode, tagger=tagger):
            continue
        text = render(doc, {**substitutions, position: cand.word})
        sim = semantic_similarity(doc.raw, text, scorer)
        if sim < config.epsilon:
            continue
        kept.append(ScoredCandidate(cand.word, cand.cosine, sim, store.index.get(cand.word, len(store))))
    kept.sort(key=lambda c: (-c.similarity, -c.cosine, c.vocab_index))
    return kept


def aggregates_for(sentence_index, aggregates):
    """Recorded aggregates containing ``sentence_index``, smallest first (then oldest)."""
    found = [(len(agg.members), i, agg) for i, agg in enumerate(aggregates) if sentence_index in agg.members]
    return [agg for _, _, agg in sorted(found, key=lambda t: t[:2])]


def try_candidate(doc, substitutions, position, candidate, y0, oracle, partition, aggregates,
                  use_aggregates=True, better_than=None):
    """Test one substitution against the three acceptance rules.

    With the current substitutions applied, queries in order:

    1. the full text;
    2. the word's sentence, if it still carries label ``y0`` (it must have been
       labelled ``y0`` on its own at the start as well);
    3. the smallest recorded aggregate containing the sentence that still
       carries label ``y0``.

    ``oracle`` should remember labels (see :class:`~textdecepter.victim.MemoOracle`)
    so that the "still carries ``y0``" checks rarely cost a query.

    Args:
        better_than: a tier already secured by another candidate; only
            strictly preferred tiers are tested.

    Returns:
        the :class:`Tier` the candidate is accepted at, or None.
    """
    limit = better_than.rank if better_than is not None else 4
    trial = {**substitutions, position: candidate}
    sentence = doc.word(position).sentence_index

    if oracle.classify(render(doc, trial)) != y0:
        return Tier.FULL_TEXT
    if limit <= Tier.SENTENCE.rank:
        return None

    if sentence in partition.set_a and oracle.classify(render_sentences(doc, [sentence], substitutions)) == y0:
        if oracle.classify(render_sentences(doc, [sentence], trial)) != y0:
            return Tier.SENTENCE
    if limit <= Tier.AGGREGATE.rank or not use_aggregates:
        return None

    for agg in aggregates_for(sentence, aggregates):
        if oracle.classify(render_sentences(doc, agg.members, substitutions)) == y0:
            if oracle.classify(render_sentences(doc, agg.members, trial)) != y0:
                return Tier.AGGREGATE
            break
    return None


def reset_insignificant(doc, perturbations, y0, oracle):
    """Revert, one at a time in commit order, substitutions the attack does not need.

    A perturbation is dropped when the text without it (and without those
    already dropped) is still not labelled ``y0``.  Reverting the last
    remaining substitution gives back the original text, whose label is
    known, so that case is never queried.

    Returns:
        the kept perturbations, in commit order.
    """
    active = {p.position: p.replacement for p in perturbations}
    kept = []
    for p in perturbations:
        trial = {pos: rep for pos, rep in active.items() if pos != p.position}
        if trial and oracle.classify(render(doc, trial)) != y0:
            active = trial
        else:
            kept.append(p)
    return kept


def _as_document(doc, doc_id, tagger):
    if isinstance(doc, str):
        return textproc.parse(doc, doc_id=doc_id, tagger=tagger)
    if any(t.is_word and not t.fine_pos for t in doc.tokens):
        return textproc.tag_pos(doc, tagger=tagger)
    return doc


def attack(doc, y0, oracle, store, config=None, scorer=None, tagger=None, doc_id=""):
    """Craft an adversarial example for ``doc`` (a text or a :class:`Document`).

    Args:
        doc: the text under attack.
        y0: its ground-truth label.
        oracle: the hard-label victim.
        store: the :class:`EmbeddingStore` synonyms are drawn from.
        config: :class:`AttackConfig`; defaults apply when omitted.
        scorer: semantic similarity callable; defaults to :class:`MeanVectorScorer`.
        tagger: POS tagger; defaults to the bundled one.
    """
    config = config or AttackConfig()
    scorer = scorer or MeanVectorScorer(store)
    doc = _as_document(doc, doc_id, tagger)
    counting = CountingOracle(oracle, budget=config.query_budget + 1)
    result = AttackResult(
        status=Status.FAILED, original_label=y0, queries=0, similarity=1.0,
        perturbed_word_pct=0.0, word_count=doc.word_count, doc_id=doc.id,
    )

    try:
        result.predicted_label = counting.classify(doc.raw)
    except (OracleUnavailable, OracleProtocolError) as exc:
        result.error = f"{type(exc).__name__}: {exc}"
        result.queries = counting.count
        return result
    if result.predicted_label != y0:
        result.status = Status.SKIPPED_MISCLASSIFIED
        result.queries = counting.count
        return result

    substitutions = {}
    perturbations = []
    succeeded = False
    memo = MemoOracle(counting)
    memo.remember(doc.raw, y0)
    try:
        partition = partition_sentences(doc, y0, memo)
        importance, aggregates = rank_sentences(doc, partition, y0, memo, config.p_max, config.aggregate_budget)
        order = rank_words(doc, importance)
        matrix = build_similarity_matrix(doc, store)
        logger.debug("%s: set A %s, set B %s, %d aggregates, %d words queued",
                     doc.id, partition.set_a, partition.set_b, len(aggregates), len(order.positions))
        for position in order.positions:
            word = doc.word(position)
            if word.normalized not in matrix:
                continue
            synonyms = top_k_synonyms(word.normalized, config.k, config.min_cosine, matrix)
            candidates = filter_candidates(doc, position, synonyms, config, scorer, store, substitutions, tagger)
            best, best_tier = None, None
            for cand in candidates:
                tier = try_candidate(doc, substitutions, position, cand.word, y0, memo, partition,
                                     aggregates, config.use_aggregates, better_than=best_tier)
                if tier is not None:
                    best, best_tier = cand, tier
                    if tier is Tier.FULL_TEXT:
                        break
            if best is None:
                continue
            substitutions[position] = best.word
            perturbations.append(Perturbation(position, word.surface, best.word, best_tier))
            if best_tier is Tier.FULL_TEXT:
                succeeded = True
                break
    except BudgetExhausted:
        result.status = Status.BUDGET_EXHAUSTED
    except (OracleUnavailable, OracleProtocolError) as exc:
        result.error = f"{type(exc).__name__}: {exc}"

    if succeeded:
        try:
            pruned = reset_insignificant(doc, perturbations, y0, memo)
        except BudgetExhausted:
            pruned = perturbations
        except (OracleUnavailable, OracleProtocolError) as exc:
            logger.warning("%s: reset pass aborted (%s); keeping all substitutions", doc.id, exc)
            pruned = perturbations
        text = render(doc, {p.position: p.replacement for p in pruned})
        if semantic_similarity(doc.raw, text, scorer) < config.epsilon:
            pruned = perturbations
        perturbations = pruned
        result.status = Status.SUCCESS

    final = render(doc, {p.position: p.replacement for p in perturbations})
    result.perturbations = perturbations
    result.similarity = semantic_similarity(doc.raw, final, scorer)
    result.perturbed_word_pct = 100.0 * len(perturbations) / doc.word_count if doc.word_count else 0.0
    if result.status is Status.SUCCESS:
        result.adversarial_text = final
    result.queries = counting.count
    return result
