"""Synthetic data with known ground truth.

``synth_generate`` draws binary covariates and responses directly from the
logistic retweet model. ``synth_labeled_corpus`` and ``synth_tweets``
produce text: a two-register (news-like vs chat-like) labeled corpus for
the news classifier, and tweets whose retweet markers are drawn from the
logistic model applied to their hashtag/mention/URL/negative content.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from virality.corpus_io import NEWS, OTHER, LabeledSentence, Tweet
from virality.glm import expit

NEWS_WORDS = (
    "government minister president officials talks summit climate deal court police "
    "report percent economy market election senate bill agreement delegates emissions "
    "treaty leaders nations conference parliament budget tax trade security announced "
    "spokesman committee policy federal state investigation billion million agency "
    "reform vote campaign negotiators carbon energy ministry statement obama "
    "world congress official according industry prices bank"
).split()

CHAT_WORDS = (
    "lol haha omg gonna tonight friends party coffee movie song weekend "
    "dinner lunch shopping hair girl boy bestie birthday pizza "
    "video music guys watching home bed school class dance game follow "
    "xoxo wanna gotta chillin mom dad dog cat"
).split()

SHARED_WORDS = (
    "today people time new day week year city night morning first last next big "
    "little man woman life place live news way"
).split()

FUNCTION_WORDS = "the and is to of a in for on with this that it at".split()

NEGATIVE_WORDS = (
    "bad fail fails failed crisis angry sad terrible hate disaster kill killed "
    "worst problem wrong lost"
).split()

POSITIVE_WORDS = (
    "good great happy win best awesome nice hope wonderful excellent success "
    "like fun glad"
).split()

FOREIGN_WORDS = (
    "og det er ikke jeg med til som den paa nao voce muito para com uma que mais "
    "obrigado hoje"
).split()

HANDLES = tuple(f"user{i}" for i in range(200))
DEFAULT_TWEET_BETA = (-1.5, 0.4, -0.3, 0.6, 0.0)


@dataclass(frozen=True)
class SyntheticFeatures:
    X: np.ndarray  # n x (F+1), first column all ones
    y: np.ndarray
    beta: np.ndarray


def synth_generate(
    beta: Sequence[float],
    n: int,
    seed: int = 0,
    feature_marginals: Sequence[float] | None = None,
) -> SyntheticFeatures:
    """Independent Bernoulli covariates and responses drawn from the logit model.

    ``beta[0]`` is the intercept; ``feature_marginals`` gives the presence
    probability of each of the remaining features (default 0.5).
    """
    beta = np.asarray(beta, dtype=np.float64)
    if n < 1:
        raise ValueError("n must be at least 1")
    n_features = beta.size - 1
    if feature_marginals is None:
        marginals = np.full(n_features, 0.5)
    else:
        marginals = np.asarray(feature_marginals, dtype=np.float64)
    if marginals.shape != (n_features,):
        raise ValueError(f"need {n_features} feature marginals, got {marginals.size}")
    if np.any((marginals < 0) | (marginals > 1)):
        raise ValueError("feature marginals must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    covariates = (rng.random((n, n_features)) < marginals).astype(np.float64)
    X = np.column_stack([np.ones(n), covariates])
    y = (rng.random(n) < expit(X @ beta)).astype(np.float64)
    return SyntheticFeatures(X, y, beta)


def _pick(rng, words, k):
    return [words[i] for i in rng.integers(0, len(words), size=k)]


def _register_words(rng, is_news: bool, k: int, crossover: float) -> list[str]:
    own, other = (NEWS_WORDS, CHAT_WORDS) if is_news else (CHAT_WORDS, NEWS_WORDS)
    words = []
    for _ in range(k):
        u = rng.random()
        if u < crossover:
            words.append(other[rng.integers(len(other))])
        elif u < crossover + 0.3:
            words.append(SHARED_WORDS[rng.integers(len(SHARED_WORDS))])
        else:
            words.append(own[rng.integers(len(own))])
    return words


def synth_labeled_corpus(
    n_news: int = 1000,
    n_other: int = 3000,
    seed: int = 0,
    crossover: float = 0.05,
) -> list[LabeledSentence]:
    """News-like and chat-like sentences with overlapping vocabularies."""
    rng = np.random.default_rng(seed)
    labels = [True] * n_news + [False] * n_other
    rng.shuffle(labels)
    out = []
    for is_news in labels:
        k = int(rng.integers(4, 11))
        words = _register_words(rng, is_news, k, crossover) + _pick(rng, FUNCTION_WORDS, 3)
        rng.shuffle(words)
        category = NEWS if is_news else ("chat" if rng.random() < 0.5 else "social")
        out.append(LabeledSentence(tuple(words), NEWS if is_news else OTHER, category))
    return out


@dataclass(frozen=True)
class SyntheticTweet:
    tweet: Tweet
    is_news: bool
    negative: bool
    english: bool


def synth_tweets(
    n: int,
    seed: int = 0,
    beta: Sequence[float] = DEFAULT_TWEET_BETA,
    news_boost: float = 0.0,
    news_fraction: float = 0.3,
    negative_rate: float = 0.35,
    positive_rate: float = 0.35,
    marginals: Sequence[float] = (0.3, 0.25, 0.2),
    foreign_rate: float = 0.1,
    crossover: float = 0.1,
) -> list[SyntheticTweet]:
    """Tweets whose retweet marker follows the logistic model.

    The linear predictor is ``beta . (1, hashtag, mention, url, negative)``
    plus ``news_boost`` for tweets that are both news and negative.
    """
    if len(beta) != 5:
        raise ValueError("beta must hold intercept, hashtag, mention, url, negative")
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n):
        english = rng.random() >= foreign_rate
        is_news = bool(rng.random() < news_fraction)
        u = rng.random()
        negative = u < negative_rate
        positive = negative_rate <= u < negative_rate + positive_rate
        hashtag, mention, url = (rng.random(3) < np.asarray(marginals))
        if english:
            words = _register_words(rng, is_news, int(rng.integers(3, 7)), crossover)
            words += _pick(rng, FUNCTION_WORDS, 3)
        else:
            words = _pick(rng, FOREIGN_WORDS, int(rng.integers(5, 9)))
        if negative:
            words += _pick(rng, NEGATIVE_WORDS, int(rng.integers(1, 3)))
        elif positive:
            words += _pick(rng, POSITIVE_WORDS, int(rng.integers(1, 3)))
        rng.shuffle(words)
        if hashtag:
            tag_pool = NEWS_WORDS if is_news else CHAT_WORDS
            words.append("#" + tag_pool[rng.integers(len(tag_pool))])
        if mention:
            words.insert(int(rng.integers(len(words) + 1)), "@" + HANDLES[rng.integers(len(HANDLES))])
        if url:
            words.append(f"http://t.co/{rng.integers(16**6):06x}")
        eta = (
            beta[0]
            + beta[1] * hashtag
            + beta[2] * mention
            + beta[3] * url
            + beta[4] * negative
            + news_boost * (negative and is_news)
        )
        text = " ".join(words)
        if rng.random() < expit(np.array([eta]))[0]:
            text = f"RT @{HANDLES[rng.integers(len(HANDLES))]}: {text}"
        lang = "en" if english else ("pt" if rng.random() < 0.5 else None)
        out.append(SyntheticTweet(Tweet(str(i), text, lang), is_news, bool(negative), english))
    return out
