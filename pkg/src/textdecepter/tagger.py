"""A small deterministic part-of-speech tagger.

Tags follow the Penn Treebank convention (``JJ``, ``VBG``, ``NNS`` ...).  Each
token first receives the most frequent tag listed for it in the bundled
lexicon, or a suffix-rule guess when the word is unknown.  A handful of
left-to-right context rules then resolve the common noun/verb ambiguities.

The tagger is intentionally tiny; anything implementing :class:`Tagger` can be
passed to the text-processing functions instead.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources
from typing import Protocol, Sequence

COARSE_TAGS = ("ADJ", "ADV", "VERB", "NOUN", "PRON", "CONJ", "PREP", "DET", "NUM", "PUNCT", "OTHER")

_FINE_TO_COARSE = {
    "JJ": "ADJ", "JJR": "ADJ", "JJS": "ADJ",
    "RB": "ADV", "RBR": "ADV", "RBS": "ADV", "WRB": "ADV",
    "VB": "VERB", "VBD": "VERB", "VBG": "VERB", "VBN": "VERB", "VBP": "VERB", "VBZ": "VERB", "MD": "VERB",
    "NN": "NOUN", "NNS": "NOUN", "NNP": "NOUN", "NNPS": "NOUN",
    "PRP": "PRON", "PRP$": "PRON", "WP": "PRON", "WP$": "PRON",
    "CC": "CONJ",
    "IN": "PREP", "TO": "PREP",
    "DT": "DET", "PDT": "DET", "WDT": "DET",
    "CD": "NUM",
    ".": "PUNCT", ",": "PUNCT", ":": "PUNCT", "-LRB-": "PUNCT", "-RRB-": "PUNCT",
    "``": "PUNCT", "''": "PUNCT", "#": "PUNCT", "$": "PUNCT", "SYM": "PUNCT",
}

_PUNCT_TAGS = {
    ".": ".", "!": ".", "?": ".", ",": ",", ";": ":", ":": ":", "-": ":", "--": ":",
    "(": "-LRB-", "[": "-LRB-", "{": "-LRB-", ")": "-RRB-", "]": "-RRB-", "}": "-RRB-",
    '"': "''", "'": "''", "`": "``", "$": "$", "#": "#",
}

_NUMBER = re.compile(r"^[\d.,:/%-]*\d[\d.,:/%-]*$")
_HAS_LETTER = re.compile(r"[^\W\d_]")

# (suffix, candidate tags) checked in order; the first tag is the default.
_SUFFIX_RULES = (
    ("ing", ("VBG", "NN", "JJ")),
    ("izes", ("VBZ", "NNS")),
    ("ises", ("VBZ", "NNS")),
    ("ize", ("VB", "VBP")),
    ("ed", ("VBD", "VBN", "JJ")),
    ("ly", ("RB", "JJ")),
    ("ness", ("NN",)),
    ("ment", ("NN",)),
    ("tion", ("NN",)),
    ("sion", ("NN",)),
    ("ity", ("NN",)),
    ("ism", ("NN",)),
    ("ance", ("NN",)),
    ("ence", ("NN",)),
    ("ship", ("NN",)),
    ("ous", ("JJ",)),
    ("ful", ("JJ",)),
    ("ive", ("JJ", "NN")),
    ("able", ("JJ",)),
    ("ible", ("JJ",)),
    ("ic", ("JJ", "NN")),
    ("al", ("JJ", "NN")),
    ("less", ("JJ",)),
    ("ish", ("JJ",)),
    ("ent", ("JJ", "NN")),
    ("ant", ("JJ", "NN")),
    ("est", ("JJS",)),
    ("ss", ("NN",)),
    ("us", ("NN",)),
    ("is", ("NN",)),
    ("s", ("NNS", "VBZ")),
)

_NOMINAL_CONTEXT = {"DT", "PRP$", "POS", "JJ", "JJR", "JJS", "CD", "PDT", "WP$"}
_BASE_CONTEXT = {"MD", "TO"}
_SUBJECT_CONTEXT = {"PRP", "NN", "NNS", "NNP", "NNPS", "WP", "WDT", "EX"}
_THIRD_SINGULAR = {"he", "she", "it", "this", "that", "who", "which"}
_CONTRACTING = {"it", "he", "she", "that", "what", "there", "here", "who", "where", "how", "let"}
_BE_HAVE = {
    "be", "is", "am", "are", "was", "were", "been", "being", "'re", "'m",
    "have", "has", "had", "having", "'ve", "get", "gets", "got",
}


def coarse_of(fine):
    """Map a fine (Penn Treebank) tag onto the coarse tag set."""
    return _FINE_TO_COARSE.get(fine, "OTHER")


class Tagger(Protocol):
    def tag(self, words: Sequence[str]) -> list[str]:
        """Return one fine tag per input token."""
        ...


@lru_cache(maxsize=1)
def _bundled_lexicon():
    lexicon = {}
    text = resources.files("textdecepter.data").joinpath("lexicon.txt").read_text(encoding="utf-8")
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, *tags = line.split()
        lexicon.setdefault(word, tuple(tags))
    return lexicon


class LexiconTagger:
    """Lexicon lookup + suffix guessing + context rules.

    Args:
        lexicon: word -> tags, most likely tag first. Defaults to the bundled lexicon.
    """

    def __init__(self, lexicon=None):
        self.lexicon = dict(_bundled_lexicon() if lexicon is None else lexicon)

    def candidates(self, word, sentence_initial=False):
        """Possible tags for a single token, most likely first."""
        if word in _PUNCT_TAGS:
            return (_PUNCT_TAGS[word],)
        if _NUMBER.match(word):
            return ("CD",)
        if not _HAS_LETTER.search(word):
            return ("SYM",) if len(word) == 1 else (":",)
        lower = word.lower()
        if lower in self.lexicon:
            return self.lexicon[lower]
        if word[0].isupper() and not sentence_initial:
            return ("NNP",)
        if any(ch.isdigit() for ch in word):
            return ("NN",)
        for suffix, tags in _SUFFIX_RULES:
            if lower.endswith(suffix) and len(lower) > len(suffix) + 2:
                return tags
        return ("NN",)

    def tag(self, words):
        tags = []
        for i, word in enumerate(words):
            options = self.candidates(word, sentence_initial=(i == 0))
            tags.append(self._disambiguate(word.lower(), options, words[:i], tags))
        return tags

    def _disambiguate(self, lower, options, previous_words, previous_tags):
        choice = options[0]
        if len(options) == 1:
            return choice
        prev = previous_tags[-1] if previous_tags else None
        # look back over adverbs for the verb-context rules
        j = len(previous_tags) - 1
        while j >= 0 and previous_tags[j] in ("RB", "RBR", "RBS"):
            j -= 1
        head_tag = previous_tags[j] if j >= 0 else None
        head_word = previous_words[j].lower() if j >= 0 else None

        if "POS" in options:
            return "VBZ" if head_word in _CONTRACTING else "POS"
        nouns = [t for t in options if t.startswith("NN")]
        if prev in _NOMINAL_CONTEXT and nouns and choice.startswith("VB"):
            return nouns[0]
        if head_tag in _BASE_CONTEXT and "VB" in options:
            return "VB"
        if head_word in _BE_HAVE and "VBN" in options:
            return "VBN"
        if head_tag in _SUBJECT_CONTEXT and not choice.startswith("VB"):
            finite = [t for t in options if t in ("VBP", "VBZ", "VBD")]
            if head_tag in ("NN", "NNP") or head_word in _THIRD_SINGULAR:
                preferred = ("VBZ", "VBD")
            else:
                preferred = ("VBP", "VBD")
            for tag in preferred:
                if tag in finite:
                    return tag
        return choice


_DEFAULT = None


def default_tagger():
    """Shared instance of the bundled :class:`LexiconTagger`."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = LexiconTagger()
    return _DEFAULT
