"""Counter-fitted word vectors and per-document synonym search.

Only the words of the document under attack get a row in the similarity
matrix: rows x vocabulary entries instead of the vocabulary-squared matrix,
which at ~65k words would not fit comfortably in memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import FormatError, UnknownWord


@dataclass(frozen=True)
class SynonymCandidate:
    word: str
    cosine: float


class EmbeddingStore:
    """An immutable word -> vector table.

    Args:
        vocabulary: unique words, in file order.
        vectors: array of shape ``(len(vocabulary), dim)``.
    """

    def __init__(self, vocabulary, vectors):
        vectors = np.array(vectors, dtype=np.float64)
        if vectors.ndim != 2 or vectors.shape[0] != len(vocabulary):
            raise ValueError("vectors must have one row per vocabulary word")
        if len(set(vocabulary)) != len(vocabulary):
            raise ValueError("vocabulary words must be unique")
        if not np.all(np.isfinite(vectors)):
            raise ValueError("vectors must be finite")
        norms = np.linalg.norm(vectors, axis=1)
        if np.any(norms == 0):
            raise ValueError("zero-norm vectors have no cosine similarity")
        self.vocabulary = tuple(vocabulary)
        self.index = {w: i for i, w in enumerate(self.vocabulary)}
        self.vectors = vectors
        self.unit = vectors / norms[:, None]
        self.vectors.setflags(write=False)
        self.unit.setflags(write=False)

    @property
    def dim(self):
        return self.vectors.shape[1]

    def __len__(self):
        return len(self.vocabulary)

    def __contains__(self, word):
        return word in self.index

    def vector(self, word):
        return self.vectors[self.index[word]]


def load_embeddings(path):
    """Read a whitespace separated ``word v1 ... vd`` file (no header).

    Duplicate words keep their first occurrence.  Blank lines are ignored.

    Raises:
        OSError: the file cannot be read.
        FormatError: a row has a different dimension than the first row, a
            non-numeric or non-finite component, or a zero vector.
    """
    vocabulary = []
    rows = []
    seen = set()
    dim = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.rstrip("\n").rstrip("\r").split(" ")
            parts = [p for p in parts if p]
            if not parts:
                continue
            word, values = parts[0], parts[1:]
            if not values:
                raise FormatError(f"no vector components for {word!r}", line=lineno)
            if dim is None:
                dim = len(values)
            elif len(values) != dim:
                raise FormatError(f"expected {dim} components, found {len(values)}", line=lineno)
            try:
                vec = [float(v) for v in values]
            except ValueError:
                raise FormatError(f"non-numeric component in row for {word!r}", line=lineno) from None
            if not all(math.isfinite(v) for v in vec):
                raise FormatError(f"non-finite component in row for {word!r}", line=lineno)
            if not any(vec):
                raise FormatError(f"zero vector for {word!r}", line=lineno)
            if word in seen:
                continue
            seen.add(word)
            vocabulary.append(word)
            rows.append(vec)
    if not vocabulary:
        raise FormatError("embedding file contains no vectors")
    return EmbeddingStore(vocabulary, np.array(rows, dtype=np.float64))


class SimilarityMatrix:
    """Cosine similarities between the in-text words and the full vocabulary."""

    def __init__(self, rows, values, store):
        self.rows = tuple(rows)
        self.row_index = {w: i for i, w in enumerate(self.rows)}
        self.values = values
        self.store = store

    @property
    def shape(self):
        return self.values.shape

    def __contains__(self, word):
        return word in self.row_index

    def row(self, word):
        try:
            return self.values[self.row_index[word]]
        except KeyError:
            raise UnknownWord(word) from None


def build_similarity_matrix(doc, store):
    """One row per distinct in-vocabulary normalized word of ``doc``."""
    rows = []
    seen = set()
    for tok in doc.tokens:
        if tok.is_word and tok.normalized not in seen and tok.normalized in store:
            seen.add(tok.normalized)
            rows.append(tok.normalized)
    if rows:
        ids = np.fromiter((store.index[w] for w in rows), dtype=np.intp, count=len(rows))
        values = store.unit[ids] @ store.unit.T
        np.clip(values, -1.0, 1.0, out=values)
    else:
        values = np.zeros((0, len(store)))
    values.setflags(write=False)
    return SimilarityMatrix(rows, values, store)


def top_k_synonyms(word, k, min_cosine, matrix: SimilarityMatrix) -> list[SynonymCandidate]:
    """Nearest vocabulary neighbours of ``word`` by cosine similarity.

    The word itself is excluded; ties are broken by vocabulary order.

    Raises:
        UnknownWord: ``word`` is not a row of ``matrix``.
    """
    row = matrix.row(word)
    if k <= 0:
        return []
    self_index: Optional[int] = matrix.store.index.get(word)
    keep = np.flatnonzero(row >= min_cosine)
    if self_index is not None:
        keep = keep[keep != self_index]
    # stable sort on descending cosine keeps vocabulary order among ties
    order = keep[np.argsort(-row[keep], kind="stable")][:k]
    vocab = matrix.store.vocabulary
    return [SynonymCandidate(vocab[i], float(row[i])) for i in order]
