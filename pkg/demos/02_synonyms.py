"""
Synonyms from counter-fitted vectors
====================================

Synonym candidates are nearest neighbours in an embedding space.  Only the
rows for words that occur in the text are computed, so memory grows with the
text, not with the vocabulary.
"""

import numpy as np

from textdecepter import build_similarity_matrix, fixture_path, load_embeddings, parse, top_k_synonyms

store = load_embeddings(fixture_path("fixture_embeddings.txt"))
print(f"vocabulary {len(store)} words, dimension {store.dim}")

doc = parse("strange and beautiful film . a good story with beautiful music .")
matrix = build_similarity_matrix(doc, store)

# One row per distinct in-vocabulary word ("beautiful" appears twice, gets one row).
print(f"matrix {matrix.shape[0]} x {matrix.shape[1]} for {doc.word_count} words")
print("rows:", ", ".join(matrix.rows))

for word in ("beautiful", "good", "film"):
    neighbours = top_k_synonyms(word, k=5, min_cosine=0.5, matrix=matrix)
    print(f"{word:10s} ->", ", ".join(f"{c.word} ({c.cosine:.2f})" for c in neighbours))

# The cosines are plain normalised dot products of the stored vectors.
u, v = store.vector("beautiful"), store.vector("resplendent")
print("\ncos(beautiful, resplendent) =", round(float(u @ v / np.linalg.norm(u) / np.linalg.norm(v)), 4))

# Raising the floor thins the list out; k caps its length.
for floor in (0.5, 0.7, 0.85):
    print(f"min_cosine {floor}:", [c.word for c in top_k_synonyms("beautiful", 50, floor, matrix)])
