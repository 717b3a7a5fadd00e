"""
Which sentences hold the decision together
==========================================

Sentences that carry the document's label on their own (set A) are the ones
worth attacking.  The rest (set B) pull the other way.  Small groups of
set-A sentences that, together with B, still give the original label are
recorded as aggregates, and the size of the smallest such group a sentence
belongs to is its level.
"""

from textdecepter import LexiconClassifier, parse, partition_sentences, rank_sentences, rank_words
from textdecepter.textproc import render_sentences

victim = LexiconClassifier({"good": 1, "great": 2, "fine": 1, "bad": -1, "awful": -3})

doc = parse("The plot is awful. The cast is good. The music is great. The ending is fine.")
y0 = victim.classify(doc.raw)
print("document label:", y0)

part = partition_sentences(doc, y0, victim)
print("set A:", part.set_a, " set B:", part.set_b)

importance, aggregates = rank_sentences(doc, part, y0, victim, max_combo=3)
for s in sorted(importance.levels):
    print(f"level {importance.levels[s]}  {doc.sentence_text(s)}")

print("\naggregates:")
for agg in aggregates:
    print(f"  {agg.members}  {render_sentences(doc, agg.members)!r} -> {victim.classify(render_sentences(doc, agg.members))}")

########################################
## Word order
########################################

# Words of low-level sentences come first, and inside a level adjectives go
# before verbs, adverbs and nouns.
order = rank_words(doc, importance)
print("\nattack order:")
for position, key in zip(order.positions, order.keys):
    tok = doc.word(position)
    print(f"  {tok.surface:8s} {tok.coarse_pos:5s} level={key[0]}")
