"""Sentence importance via original-label aggregates, and word attack order.

Sentences whose individual label matches the document label form set A; the
rest form set B.  An *aggregate* is B joined with a subset of A.  A sentence of
A has importance level P when some P-sentence combination containing it,
added to B, pulls B's decision back to the original label.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from .errors import BudgetExhausted
from .textproc import render_sentences

logger = logging.getLogger(__name__)

DEFAULT_POS_PRIORITY = {"ADJ": 4, "VERB": 3, "ADV": 2, "NOUN": 1}


@dataclass(frozen=True)
class Partition:
    set_a: tuple[int, ...]
    set_b: tuple[int, ...]


@dataclass(frozen=True)
class Aggregate:
    members: tuple[int, ...]
    label_at_creation: str


@dataclass
class SentenceImportance:
    levels: dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class WordOrder:
    positions: tuple[int, ...]
    keys: tuple[tuple[int, int, int], ...]


def partition_sentences(doc, y0, oracle, substitutions=None):
    """Query every sentence on its own and split them by label."""
    set_a, set_b = [], []
    for sentence in doc.sentences:
        label = oracle.classify(render_sentences(doc, [sentence.index], substitutions))
        (set_a if label == y0 else set_b).append(sentence.index)
    return Partition(tuple(set_a), tuple(set_b))


def rank_sentences(doc, partition, y0, oracle, max_combo=3, budget=500):
    """Assign importance levels to the sentences of ``partition.set_a``.

    Combinations of size P = 1, 2, ... of the still-unranked set-A sentences
    are joined (in document order, single space) with set B and queried in
    lexicographic order.  Every combination classified ``y0`` becomes an
    aggregate and its members get level P; they are removed from the pool once
    the whole level-P sweep is done.

    Enumeration stops when the pool is empty; when P exceeds the pool size the
    leftovers get level P; when P exceeds ``max_combo`` or ``budget`` aggregate
    queries have been spent the leftovers get ``max_combo + 1``.

    If set A is empty every sentence gets level 1 and the whole document is
    the single aggregate (no query is made).

    Returns:
        ``(SentenceImportance, list[Aggregate])``.
    """
    importance = SentenceImportance()
    aggregates = []
    if not partition.set_a:
        importance.levels = {s.index: 1 for s in doc.sentences}
        aggregates.append(Aggregate(tuple(range(len(doc.sentences))), y0))
        return importance, aggregates

    remaining = list(partition.set_a)
    queries = 0
    p = 1
    while remaining:
        if p > len(remaining):
            for s in remaining:
                importance.levels[s] = p
            break
        if p > max_combo:
            for s in remaining:
                importance.levels[s] = max_combo + 1
            break
        assigned = set()
        exhausted = False
        for combo in itertools.combinations(remaining, p):
            if budget is not None and queries >= budget:
                exhausted = True
                break
            members = tuple(sorted(partition.set_b + combo))
            queries += 1
            try:
                label = oracle.classify(render_sentences(doc, members))
            except BudgetExhausted:
                exhausted = True
                break
            if label == y0:
                aggregates.append(Aggregate(members, label))
                for s in combo:
                    importance.levels[s] = p
                    assigned.add(s)
        remaining = [s for s in remaining if s not in assigned]
        if exhausted:
            logger.debug("aggregate query budget hit at level %d; %d sentences unranked", p, len(remaining))
            for s in remaining:
                importance.levels[s] = max_combo + 1
            break
        p += 1
    return importance, aggregates


def rank_words(doc, importance, pos_priority=None):
    """Attack order over the words of ranked sentences.

    Sorted by (sentence level ascending, POS priority descending, position
    ascending).  Default priority: ADJ > VERB > ADV > NOUN > everything else.
    """
    priority = DEFAULT_POS_PRIORITY if pos_priority is None else pos_priority
    keyed = []
    for tok in doc.tokens:
        if not tok.is_word or tok.sentence_index not in importance.levels:
            continue
        key = (importance.levels[tok.sentence_index], -priority.get(tok.coarse_pos, 0), tok.position)
        keyed.append(key)
    keyed.sort()
    return WordOrder(tuple(k[2] for k in keyed), tuple(keyed))
