"""Hard-label black-box adversarial attacks on text classifiers.

The attack sees only the victim's predicted label.  It ranks sentences by how
much they hold the original decision together, visits words by that rank and
part of speech, and swaps in embedding neighbours that keep the text's meaning
close to the original.
"""

from .attack import (AttackConfig, AttackResult, MeanVectorScorer, Perturbation, Status, Tier, attack,
                     filter_candidates, reset_insignificant, semantic_similarity, try_candidate)
from .embeddings import (EmbeddingStore, SimilarityMatrix, SynonymCandidate, build_similarity_matrix,
                         load_embeddings, top_k_synonyms)
from .errors import (BudgetExhausted, EmptyCampaign, EmptyDocument, FormatError, InvalidPosition,
                     OracleProtocolError, OracleUnavailable, TextDecepterError, UnknownWord)
from .harness import (CampaignAborted, LabeledExample, Metrics, compute_metrics, load_dataset, run_suite,
                      success_rate)
from .ranking import Aggregate, Partition, partition_sentences, rank_sentences, rank_words
from .textproc import Document, Sentence, Token, parse, pos_compatible, render, segment_sentences, tag_pos, tokenize
from .victim import CountingOracle, HttpOracle, LexiconClassifier, MemoOracle, Oracle

__version__ = "0.1.0"


def fixture_path(name):
    """Path of a bundled fixture file (``fixture_corpus.jsonl``, ``fixture_embeddings.txt``, ...)."""
    from importlib import resources
    return resources.files("textdecepter.data") / name
