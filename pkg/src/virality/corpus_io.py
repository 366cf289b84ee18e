"""Readers and writers for tweet corpora and category-labeled sentence files.

Tweet files are JSON lines with the fields ``id``, ``text`` and optionally
``lang``, ``created_at`` and ``user``. Labeled corpora are flat text files
with one ``category<TAB>token token ...`` sentence per line.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from virality.errors import DataError

NEWS = "news"
OTHER = "other"

#: Language assumed by the platform when a tweet carries no language tag.
DEFAULT_LANGUAGE = "en"


@dataclass(frozen=True)
class Tweet:
    id: str
    text: str
    declared_language: str | None = None
    created_at: str | None = None
    author: str | None = None

    @property
    def effective_language(self) -> str:
        """Declared language, falling back to the platform default."""
        if self.declared_language is None:
            return DEFAULT_LANGUAGE
        return self.declared_language

    def to_record(self) -> dict:
        record = {"id": self.id, "text": self.text}
        if self.declared_language is not None:
            record["lang"] = self.declared_language
        if self.created_at is not None:
            record["created_at"] = self.created_at
        if self.author is not None:
            record["user"] = self.author
        return record


@dataclass(frozen=True)
class LabeledSentence:
    tokens: tuple[str, ...]
    label: str
    source_category: str


@dataclass(frozen=True)
class CorpusStats:
    total: int
    per_label: dict
    english: int


@contextmanager
def open_lines(source):
    """Yield ``(lines, name)`` for a path, open text file or line iterable."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            yield fh, os.fspath(source)
    else:
        yield source, getattr(source, "name", None)


def _optional_str(record, key, line_no, name):
    value = record.get(key)
    if value is None:
        return None
    if not isinstance(value, str):
        raise DataError(f"field {key!r} must be a string", line_no, name)
    return value


def _parse_tweet(line: str, line_no: int, name: str | None) -> Tweet:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise DataError(f"invalid JSON ({exc.msg})", line_no, name) from None
    if not isinstance(record, dict):
        raise DataError("record is not an object", line_no, name)
    if "id" not in record:
        raise DataError("missing id", line_no, name)
    tweet_id = record["id"]
    if isinstance(tweet_id, bool) or not isinstance(tweet_id, (str, int)):
        raise DataError("id must be a string", line_no, name)
    text = record.get("text")
    if not isinstance(text, str):
        raise DataError("missing text", line_no, name)
    if not text.strip():
        raise DataError("empty text", line_no, name)
    return Tweet(
        id=str(tweet_id),
        text=text,
        declared_language=_optional_str(record, "lang", line_no, name),
        created_at=_optional_str(record, "created_at", line_no, name),
        author=_optional_str(record, "user", line_no, name),
    )


def iter_tweets(source, on_error: str = "abort") -> Iterator[Tweet]:
    """Yield tweets from a path, open file or iterable of lines.

    ``on_error`` is ``"abort"`` (raise on the first malformed line) or
    ``"skip"``. Duplicate ids always raise.
    """
    if on_error not in ("abort", "skip"):
        raise ValueError(f"on_error must be 'abort' or 'skip', got {on_error!r}")
    seen: set[str] = set()
    with open_lines(source) as (lines, name):
        for line_no, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                tweet = _parse_tweet(line, line_no, name)
            except DataError:
                if on_error == "abort":
                    raise
                continue
            if tweet.id in seen:
                raise DataError(f"duplicate tweet id {tweet.id!r}", line_no, name)
            seen.add(tweet.id)
            yield tweet


def load_tweets(source, on_error: str = "abort") -> tuple[Tweet, ...]:
    return tuple(iter_tweets(source, on_error=on_error))


def dump_tweets(tweets: Iterable[Tweet], stream) -> None:
    for tweet in tweets:
        stream.write(json.dumps(tweet.to_record(), ensure_ascii=False, sort_keys=True))
        stream.write("\n")


def load_labeled_corpus(
    source,
    news_category: str = "news",
    excluded_categories: Iterable[str] = ("editorial",),
) -> tuple[LabeledSentence, ...]:
    """Read a ``category<TAB>tokens`` file.

    Sentences from ``excluded_categories`` are dropped; the label is
    ``NEWS`` when the category equals ``news_category`` and ``OTHER``
    otherwise.
    """
    if not news_category:
        raise DataError("news category name must be non-empty")
    excluded = frozenset(excluded_categories)
    if news_category in excluded:
        raise DataError(f"news category {news_category!r} is excluded")
    sentences = []
    with open_lines(source) as (lines, name):
        for line_no, raw in enumerate(lines, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            category, sep, body = line.partition("\t")
            category = category.strip()
            if not sep:
                raise DataError("expected category<TAB>tokens", line_no, name)
            if not category:
                raise DataError("empty category name", line_no, name)
            tokens = tuple(body.split())
            if not tokens:
                raise DataError("sentence has no tokens", line_no, name)
            if category in excluded:
                continue
            label = NEWS if category == news_category else OTHER
            sentences.append(LabeledSentence(tokens, label, category))
    if not sentences:
        raise DataError("no sentences left after category exclusion", source=name)
    if not any(s.label == NEWS for s in sentences):
        raise DataError(f"unknown news category {news_category!r}: no sentences", source=name)
    return tuple(sentences)


def dump_labeled_corpus(sentences: Iterable[LabeledSentence], stream) -> None:
    for sentence in sentences:
        stream.write(f"{sentence.source_category}\t{' '.join(sentence.tokens)}\n")


def corpus_stats(labels: Sequence[str], english: int | None = None) -> CorpusStats:
    counts = Counter(labels)
    total = len(labels)
    return CorpusStats(
        total=total,
        per_label=dict(sorted(counts.items())),
        english=total if english is None else english,
    )
