"""
Splitting, tagging and rewriting text
=====================================

Everything downstream works on a ``Document``: sentences, tokens, and a POS
tag per token.  This script walks through how a review is cut up and how a
word substitution is written back into it.
"""

from textdecepter import parse, pos_compatible, render, segment_sentences

raw = "She may not be real, but the laughs are. The film keeps undermining its own story!"

# Sentences end after . ! or ? when whitespace (or the end of the text) follows.
for start, end in segment_sentences(raw):
    print(repr(raw[start:end]))

doc = parse(raw, doc_id="demo")
print(f"\n{len(doc.tokens)} tokens, {doc.word_count} words, {len(doc.sentences)} sentences")

# Punctuation and numbers are tokens but not words; only words get a position.
for tok in doc.tokens:
    pos = "-" if tok.position is None else tok.position
    print(f"{tok.surface:12s} pos={pos!s:3s} {tok.fine_pos:5s} {tok.coarse_pos}")

########################################
## Rewriting
########################################

# A substitution maps a word position to a new word.  Everything else,
# whitespace included, is left as it was, and the casing of the original
# word is carried over.
laughs = next(t for t in doc.words if t.normalized == "laughs")
print("\n" + render(doc, {0: "he", laughs.position: "chuckles"}))

########################################
## Part-of-speech agreement
########################################

# A candidate is tagged in the original sentence, in place of the word it
# would replace.  "fine" compares Penn Treebank tags, "coarse" only the
# word class.
undermining = next(t for t in doc.words if t.normalized == "undermining")
for candidate in ("jeopardizing", "jeopardizes", "weakening"):
    print(f"{candidate:13s} fine={pos_compatible(doc, undermining.position, candidate, 'fine')!s:5s} "
          f"coarse={pos_compatible(doc, undermining.position, candidate, 'coarse')}")
