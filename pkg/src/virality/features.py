"""Retweet detection and extraction of the retweet-model covariates."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from virality.corpus_io import Tweet
from virality.sentiment import NegativePolicy, SentimentScore, negative_flag
from virality.tokenizer import URL_RE

# "RT" or "via" as a whole token, then optional whitespace / ':' and an @handle.
RETWEET_RE = re.compile(r"(?<![\w@#])(?:rt|via)\s*:?\s*@(\w+)", re.IGNORECASE)
MENTION_RE = re.compile(r"(?<![\w@])@(\w+)")
HASHTAG_RE = re.compile(r"(?<![\w#])#\w")

COVARIATES = ("hashtag", "mention", "url", "negative", "negative_newsness")
TSV_COLUMNS = ("id", "f0", "hashtag", "mention", "url", "negative", "interaction", "retweet")


class InteractionMode(str, enum.Enum):
    PRODUCT = "product"  # negative * p_news
    AND = "and"  # negative * [p_news > 0.5]

    @classmethod
    def parse(cls, value) -> "InteractionMode":
        if value == "logical_and":
            return cls.AND
        return cls(value)


@dataclass(frozen=True)
class RetweetMark:
    is_retweet: bool
    attributed_user: str | None = None
    span: tuple[int, int] | None = None  # position of the attributed "@handle"


NOT_RETWEET = RetweetMark(False)


def detect_retweet(text: str) -> RetweetMark:
    m = RETWEET_RE.search(text)
    if m is None:
        return NOT_RETWEET
    # span covers "@handle" so the mention scan can skip exactly that occurrence
    return RetweetMark(True, m.group(1), (m.start(1) - 1, m.end(1)))


@dataclass(frozen=True)
class FeatureVector:
    id: str
    has_hashtag: int
    has_mention: int
    has_url: int
    negative: int
    negative_newsness: float
    is_retweet: int
    f0: int = 1

    def covariates(self) -> tuple:
        return (
            self.has_hashtag,
            self.has_mention,
            self.has_url,
            self.negative,
            self.negative_newsness,
        )

    def row(self) -> tuple:
        """Intercept followed by the covariates, in ``COVARIATES`` order."""
        return (self.f0, *self.covariates())


def has_mention(text: str, mark: RetweetMark) -> bool:
    for m in MENTION_RE.finditer(text):
        if mark.span is not None and m.span() == mark.span:
            continue
        return True
    return False


def extract(
    tweet: Tweet,
    score: SentimentScore,
    p_news: float,
    interaction_mode=InteractionMode.PRODUCT,
    negative_policy=NegativePolicy.VALENCE,
) -> FeatureVector:
    if not 0.0 <= p_news <= 1.0:
        raise ValueError(f"p_news must lie in [0, 1], got {p_news}")
    mode = InteractionMode.parse(interaction_mode)
    text = tweet.text
    mark = detect_retweet(text)
    negative = int(negative_flag(score, negative_policy))
    if mode is InteractionMode.PRODUCT:
        interaction = negative * p_news
    else:
        interaction = float(negative * (p_news > 0.5))
    return FeatureVector(
        id=tweet.id,
        has_hashtag=int(HASHTAG_RE.search(text) is not None),
        has_mention=int(has_mention(text, mark)),
        has_url=int(URL_RE.search(text) is not None),
        negative=negative,
        negative_newsness=float(interaction),
        is_retweet=int(mark.is_retweet),
    )


def format_tsv_row(fv: FeatureVector) -> str:
    return "\t".join(
        [
            fv.id,
            str(fv.f0),
            str(fv.has_hashtag),
            str(fv.has_mention),
            str(fv.has_url),
            str(fv.negative),
            repr(fv.negative_newsness),
            str(fv.is_retweet),
        ]
    )
