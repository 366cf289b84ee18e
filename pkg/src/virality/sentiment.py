"""Lexicon valence and arousal scoring."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from virality.lexicons import Lexicon


class NegativePolicy(str, enum.Enum):
    """How the binary "negative sentiment" covariate is derived."""

    VALENCE = "valence"  # valence < 0
    WORD = "word"  # at least one matched word with a negative score

    @classmethod
    def parse(cls, value) -> "NegativePolicy":
        aliases = {"valence_below_zero": cls.VALENCE, "any_negative_word": cls.WORD}
        if isinstance(value, cls):
            return value
        if value in aliases:
            return aliases[value]
        return cls(value)


@dataclass(frozen=True)
class SentimentScore:
    valence: int = 0
    arousal: int = 0
    negative_words: int = 0

    @property
    def negative(self) -> bool:
        return self.valence < 0

    def __add__(self, other: "SentimentScore") -> "SentimentScore":
        return SentimentScore(
            self.valence + other.valence,
            self.arousal + other.arousal,
            self.negative_words + other.negative_words,
        )


def score(tokens: Iterable[str], sentiment_lexicon: Lexicon) -> SentimentScore:
    """Valence is the sum of word scores, arousal the sum of their magnitudes.

    Each occurrence of a word contributes; unmatched tokens contribute nothing.
    """
    valence = arousal = negative_words = 0
    entries = sentiment_lexicon.entries
    for token in tokens:
        s = entries.get(token)
        if s is None:
            continue
        valence += s
        arousal += abs(s)
        if s < 0:
            negative_words += 1
    return SentimentScore(valence, arousal, negative_words)


def negative_flag(score: SentimentScore, policy=NegativePolicy.VALENCE) -> bool:
    policy = NegativePolicy.parse(policy)
    if policy is NegativePolicy.VALENCE:
        return score.valence < 0
    return score.negative_words > 0
