"""Word-list language detection ("englishness")."""

from __future__ import annotations

from virality.corpus_io import DEFAULT_LANGUAGE, Tweet
from virality.lexicons import Lexicon
from virality.tokenizer import tokenize

_ENGLISH_TAGS = {"en", "english"}


def englishness(text: str, english_lexicon: Lexicon) -> int:
    """Sum of per-word englishness scores; unknown words contribute 0."""
    return sum(english_lexicon.get(token) for token in tokenize(text))


def declares_english(tweet: Tweet) -> bool:
    lang = tweet.effective_language.lower()
    return lang in _ENGLISH_TAGS or lang.startswith(DEFAULT_LANGUAGE + "-")


def is_english(tweet: Tweet, english_lexicon: Lexicon, require_declared: bool = True) -> bool:
    """A tweet is English when its englishness is strictly positive.

    With ``require_declared`` the declared language (absent means the
    platform default, English) must also be English.
    """
    if englishness(tweet.text, english_lexicon) <= 0:
        return False
    return not require_declared or declares_english(tweet)
