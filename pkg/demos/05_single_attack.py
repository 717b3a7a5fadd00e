"""
Attacking one review
====================

The attack walks the ranked words and tries the filtered synonyms of each.
A swap is kept when it flips the whole text, the word's sentence, or an
aggregate containing that sentence.  After the text flips, swaps that turn
out not to be needed are undone.
"""

from textdecepter import AttackConfig, LexiconClassifier, attack, fixture_path, load_dataset, load_embeddings

store = load_embeddings(fixture_path("fixture_embeddings.txt"))
victim = LexiconClassifier.from_file(fixture_path("fixture_lexicon.json"))


def show(result):
    print(f"status {result.status.value}, {result.queries} queries, similarity {result.similarity:.3f}, "
          f"{result.perturbed_word_pct:.1f}% words changed")
    for p in result.perturbations:
        print(f"  word {p.position}: {p.original} -> {p.replacement} (accepted via {p.accepted_via.value})")
    if result.adversarial_text:
        print("  adversarial:", result.adversarial_text)


show(attack("strange and beautiful film", "POS", victim, store))

# A longer review needs two swaps: the first only flips an aggregate, the
# second then tips the whole text.
corpus = {ex.id: ex for ex in load_dataset(fixture_path("fixture_corpus.jsonl"))}
review = corpus["pos-05"]
print("\n" + review.text)
show(attack(review.text, review.label, victim, store))

# Without the aggregate rule the first swap is never accepted and the attack fails.
print("\nsame review, aggregates switched off:")
show(attack(review.text, review.label, victim, store, AttackConfig(use_aggregates=False)))

# A misclassified review is not attacked at all; it costs one query.
print()
show(attack(corpus["pos-15"].text, "POS", victim, store))
