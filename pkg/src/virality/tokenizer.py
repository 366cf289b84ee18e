"""Tokenization, stopword-filtered vocabulary and binary term presence."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from virality.errors import DataError

# Shared with tweet feature extraction so that both agree on what a URL is.
URL_RE = re.compile(r"(?<!\S)https?://\S*", re.IGNORECASE)
# Runs of letters/digits, possibly joined by internal apostrophes.
_WORD_RE = re.compile(r"[^\W_]+(?:'[^\W_]+)*")


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens with URLs removed and '#'/'@' prefixes dropped.

    >>> tokenize("#COP15 deal http://t.co/x @bob")
    ['cop15', 'deal', 'bob']
    """
    text = URL_RE.sub(" ", text)
    return _WORD_RE.findall(text.lower())


@dataclass(frozen=True)
class VocabularyModel:
    terms: tuple[str, ...]
    stopword_count: int = 0
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {term: i for i, term in enumerate(self.terms)}
        if len(index) != len(self.terms):
            raise ValueError("vocabulary terms must be unique")
        object.__setattr__(self, "index", index)

    @property
    def D(self) -> int:
        return len(self.terms)

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class TermPresenceVector:
    present: frozenset[int]
    dim: int

    def __post_init__(self):
        if any(i < 0 or i >= self.dim for i in self.present):
            raise ValueError("presence index outside vocabulary")


def build_vocabulary(
    sentences: Iterable[Sequence[str]],
    stopwords: Iterable[str] = (),
    max_terms: int = 10_000,
) -> VocabularyModel:
    """Top ``max_terms`` non-stopword terms by total occurrence count.

    Ties are broken by ascending term so the result is deterministic.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    stop = frozenset(w.lower() for w in stopwords)
    counts: Counter[str] = Counter()
    for tokens in sentences:
        counts.update(t for t in tokens if t not in stop)
    if not counts:
        raise DataError("no non-stopword terms to build a vocabulary from")
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return VocabularyModel(tuple(t for t, _ in ranked[:max_terms]), stopword_count=len(stop))


def vectorize(tokens: Iterable[str], vocab: VocabularyModel) -> TermPresenceVector:
    index = vocab.index
    return TermPresenceVector(
        frozenset(index[t] for t in tokens if t in index), vocab.D
    )
