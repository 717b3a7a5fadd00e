"""Sentence segmentation, tokenization, rendering and POS tagging.

All functions are pure: a :class:`Document` is immutable and every operation
returns new objects.  Word tokens are addressed by *position*, their 0-based
index in the document's sequence of word tokens (punctuation and numbers are
tokens but not words, and have no position).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Mapping, Optional, Sequence

from .errors import EmptyDocument, InvalidPosition
from .tagger import coarse_of, default_tagger

_TERMINATORS = ".!?"
_TOKEN = re.compile(
    r"""
    [^\W_]+(?:['’\-][^\W_]+)*   # words, with inner apostrophes / hyphens (n't, pg-13)
    | ['’][^\W\d_]+             # clitics: 's 've 'd
    | \.{2,}                    # ellipsis
    | [^\w\s]                   # any other single symbol
    | _+
    """,
    re.VERBOSE,
)
_LETTER = re.compile(r"[^\W\d_]")
_STRIP = "'’\".,;:!?()[]{}-_`"

COARSE = "coarse"
FINE = "fine"
POS_MODES = (COARSE, FINE)


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    sentence_index: int
    index: int
    start: int
    end: int
    is_word: bool
    position: Optional[int] = None
    coarse_pos: str = "OTHER"
    fine_pos: str = ""


@dataclass(frozen=True)
class Sentence:
    index: int
    token_span: tuple[int, int]
    char_span: tuple[int, int]


@dataclass(frozen=True)
class Document:
    id: str
    raw: str
    tokens: tuple[Token, ...]
    sentences: tuple[Sentence, ...]

    @property
    def words(self) -> tuple[Token, ...]:
        return tuple(t for t in self.tokens if t.is_word)

    @property
    def word_count(self) -> int:
        return sum(1 for t in self.tokens if t.is_word)

    def word(self, position: int) -> Token:
        """Return the word token at ``position``."""
        words = self.words
        if not isinstance(position, int) or isinstance(position, bool) or not 0 <= position < len(words):
            raise InvalidPosition(f"no word at position {position!r} (document has {len(words)} words)")
        return words[position]

    def sentence_tokens(self, index: int) -> tuple[Token, ...]:
        start, end = self.sentences[index].token_span
        return self.tokens[start:end]

    def sentence_text(self, index: int) -> str:
        start, end = self.sentences[index].char_span
        return self.raw[start:end]


def normalize(surface):
    """Lowercase ``surface`` and strip surrounding punctuation."""
    stripped = surface.strip(_STRIP).lower()
    return stripped or surface.lower()


def segment_sentences(raw):
    """Split ``raw`` into sentences.

    A sentence ends after ``.``, ``!`` or ``?`` when followed by whitespace or
    the end of the text.  Leading/trailing whitespace is excluded from spans.

    Returns:
        list of ``(start, end)`` character spans, in order.
    """
    if not raw or not raw.strip():
        raise EmptyDocument("cannot segment an empty text")
    spans = []
    start = None
    n = len(raw)
    for i, ch in enumerate(raw):
        if start is None:
            if ch.isspace():
                continue
            start = i
        if ch in _TERMINATORS and (i + 1 == n or raw[i + 1].isspace()):
            spans.append((start, i + 1))
            start = None
    if start is not None:
        end = n
        while raw[end - 1].isspace():
            end -= 1
        spans.append((start, end))
    return spans


def tokenize(raw, boundaries=None, doc_id=""):
    """Tokenize ``raw`` into an untagged :class:`Document`.

    Args:
        raw: the text.
        boundaries: sentence spans from :func:`segment_sentences`; computed when omitted.
        doc_id: identifier stored on the document.
    """
    if boundaries is None:
        boundaries = segment_sentences(raw)
    elif not raw or not raw.strip():
        raise EmptyDocument("cannot tokenize an empty text")
    tokens = []
    sentences = []
    position = 0
    for s_index, (s_start, s_end) in enumerate(boundaries):
        first = len(tokens)
        for match in _TOKEN.finditer(raw, s_start, s_end):
            surface = match.group()
            is_word = bool(_LETTER.search(surface))
            tokens.append(
                Token(
                    surface=surface,
                    normalized=normalize(surface),
                    sentence_index=s_index,
                    index=len(tokens),
                    start=match.start(),
                    end=match.end(),
                    is_word=is_word,
                    position=position if is_word else None,
                )
            )
            if is_word:
                position += 1
        sentences.append(Sentence(s_index, (first, len(tokens)), (s_start, s_end)))
    return Document(id=doc_id, raw=raw, tokens=tuple(tokens), sentences=tuple(sentences))


def tag_pos(doc, mode=COARSE, tagger=None):
    """Return ``doc`` with coarse and fine tags filled in on every token.

    Both granularities are always populated; ``mode`` is accepted for symmetry
    with :func:`pos_compatible`.
    """
    if mode not in POS_MODES:
        raise ValueError(f"unknown POS mode {mode!r}")
    tagger = tagger or default_tagger()
    tokens = list(doc.tokens)
    for sentence in doc.sentences:
        start, end = sentence.token_span
        fine = tagger.tag([t.surface for t in tokens[start:end]])
        for offset, tag in enumerate(fine):
            tok = tokens[start + offset]
            if not tok.is_word:
                coarse = "NUM" if tag == "CD" or any(c.isdigit() for c in tok.surface) else "PUNCT"
            else:
                coarse = coarse_of(tag)
                if coarse in ("PUNCT", "NUM"):
                    coarse = "OTHER"
            tokens[start + offset] = replace(tok, fine_pos=tag, coarse_pos=coarse)
    return replace(doc, tokens=tuple(tokens))


def parse(raw, doc_id="", tagger=None):
    """Segment, tokenize and tag ``raw`` in one call."""
    return tag_pos(tokenize(raw, segment_sentences(raw), doc_id=doc_id), tagger=tagger)


def match_case(template, word):
    """Give ``word`` the casing pattern of ``template`` (lower, Capitalized or UPPER)."""
    letters = [c for c in template if c.isalpha()]
    if not letters:
        return word
    if len(letters) > 1 and all(c.isupper() for c in letters):
        return word.upper()
    if letters[0].isupper():
        return word[:1].upper() + word[1:]
    return word


def _checked(doc, substitutions):
    words = doc.words
    edits = []
    for position, replacement in substitutions.items():
        if not isinstance(position, int) or isinstance(position, bool) or not 0 <= position < len(words):
            raise InvalidPosition(f"no word at position {position!r} (document has {len(words)} words)")
        tok = words[position]
        edits.append((tok.start, tok.end, match_case(tok.surface, replacement)))
    edits.sort()
    return edits


def render_span(doc, substitutions: Mapping[int, str], start, end):
    """Text of ``doc.raw[start:end]`` with the substitutions that fall inside it."""
    out = []
    cursor = start
    for s, e, text in _checked(doc, substitutions):
        if s < start or e > end:
            continue
        out.append(doc.raw[cursor:s])
        out.append(text)
        cursor = e
    out.append(doc.raw[cursor:end])
    return "".join(out)


def render(doc, substitutions: Mapping[int, str] = None):
    """Render ``doc`` with words replaced.

    Args:
        doc: the document.
        substitutions: word position -> replacement word.  Replacements take
            the casing pattern of the word they replace.

    Raises:
        InvalidPosition: a key is not a word position of ``doc``.
    """
    return render_span(doc, substitutions or {}, 0, len(doc.raw))


def render_sentences(doc, indices: Sequence[int], substitutions: Mapping[int, str] = None):
    """Join the given sentences (in document order) with single spaces."""
    substitutions = substitutions or {}
    parts = []
    for i in sorted(indices):
        start, end = doc.sentences[i].char_span
        parts.append(render_span(doc, substitutions, start, end))
    return " ".join(parts)


def pos_compatible(doc, position, candidate, mode=COARSE, tagger=None):
    """Whether ``candidate`` keeps the tag of the word at ``position`` in context.

    The candidate is placed in the word's own sentence and the sentence is
    re-tagged.  In fine mode the fine tags must agree; in coarse mode only the
    coarse tags.
    """
    if mode not in POS_MODES:
        raise ValueError(f"unknown POS mode {mode!r}")
    if not candidate:
        raise ValueError("candidate must be non-empty")
    tagger = tagger or default_tagger()
    original = doc.word(position)
    tokens = doc.sentence_tokens(original.sentence_index)
    surfaces = [t.surface for t in tokens]
    offset = original.index - tokens[0].index
    before = tagger.tag(surfaces)[offset]
    surfaces[offset] = match_case(original.surface, candidate)
    after = tagger.tag(surfaces)[offset]
    if mode == FINE:
        return before == after
    return coarse_of(before) == coarse_of(after)


def is_single_word(candidate):
    """True when ``candidate`` tokenizes to exactly one word token."""
    matches = _TOKEN.findall(candidate)
    return len(matches) == 1 and matches[0] == candidate and bool(_LETTER.search(candidate))
