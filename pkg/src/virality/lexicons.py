"""Scored word lists (englishness and sentiment valence)."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from types import MappingProxyType
from typing import Mapping

from virality.corpus_io import open_lines
from virality.errors import DataError

ENGLISHNESS_RANGE = (-3, 3)
SENTIMENT_RANGE = (-5, 5)


@dataclass(frozen=True)
class Lexicon:
    entries: Mapping[str, int]
    min_score: int
    max_score: int
    name: str = "lexicon"

    def __post_init__(self):
        if self.min_score > self.max_score:
            raise ValueError("min_score exceeds max_score")
        for word, score in self.entries.items():
            if word != word.lower():
                raise ValueError(f"lexicon word {word!r} is not lowercase")
            if not self.min_score <= score <= self.max_score:
                raise ValueError(
                    f"score {score} for {word!r} outside [{self.min_score}, {self.max_score}]"
                )
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    def __len__(self):
        return len(self.entries)

    def __contains__(self, word):
        return word in self.entries

    def get(self, word: str) -> int:
        """Score of ``word``; unknown words score 0."""
        return self.entries.get(word, 0)

    def negated(self) -> "Lexicon":
        return Lexicon(
            {w: -s for w, s in self.entries.items()},
            -self.max_score,
            -self.min_score,
            name=f"negated {self.name}",
        )


def load_lexicon(source, min_score: int, max_score: int, name: str | None = None) -> Lexicon:
    """Load a ``word<TAB>integer`` file, validating range and uniqueness."""
    entries: dict[str, int] = {}
    with open_lines(source) as (lines, src_name):
        for line_no, raw in enumerate(lines, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            word, sep, value = line.partition("\t")
            word = word.strip().lower()
            if not sep or not word:
                raise DataError("expected word<TAB>score", line_no, src_name)
            try:
                score = int(value.strip())
            except ValueError:
                raise DataError(
                    f"non-integer score {value.strip()!r} for {word!r}", line_no, src_name
                ) from None
            if not min_score <= score <= max_score:
                raise DataError(
                    f"score {score} for {word!r} out of range [{min_score}, {max_score}]",
                    line_no,
                    src_name,
                )
            if word in entries:
                raise DataError(f"duplicate word {word!r}", line_no, src_name)
            entries[word] = score
        label = name or src_name or "lexicon"
    return Lexicon(entries, min_score, max_score, name=label)


def dump_lexicon(lexicon: Lexicon, stream) -> None:
    for word, score in lexicon.entries.items():
        stream.write(f"{word}\t{score}\n")


def load_stopwords(source) -> frozenset[str]:
    """One word per line; blank lines and ``#`` comments ignored."""
    words = set()
    with open_lines(source) as (lines, _):
        for raw in lines:
            word = raw.strip().lower()
            if word and not word.startswith("#"):
                words.add(word)
    return frozenset(words)


def bundled_path(filename: str):
    """Path to a data file shipped with the package."""
    return resources.files("virality") / "data" / filename


def bundled_sentiment_lexicon() -> Lexicon:
    return load_lexicon(bundled_path("sentiment_sample.tsv"), *SENTIMENT_RANGE, name="sentiment_sample")


def bundled_englishness_lexicon() -> Lexicon:
    return load_lexicon(bundled_path("englishness_sample.tsv"), *ENGLISHNESS_RANGE, name="englishness_sample")


def bundled_stopwords() -> frozenset[str]:
    return load_stopwords(bundled_path("stopwords.txt"))
