"""End-to-end retweet analysis: filter, classify, score, extract, fit, test."""

from __future__ import annotations

import logging
import os
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from virality import news
from virality.corpus_io import LabeledSentence, Tweet, load_labeled_corpus, load_tweets
from virality.errors import ConfigError, DataError
from virality.features import COVARIATES, InteractionMode, extract
from virality.glm import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    DesignMatrix,
    dependent_columns,
    fit_logistic,
    likelihood_ratio_test,
)
from virality.language import is_english
from virality.lexicons import (
    ENGLISHNESS_RANGE,
    SENTIMENT_RANGE,
    Lexicon,
    bundled_path,
    load_lexicon,
    load_stopwords,
)
from virality.report import Block, CovariateResult, Report
from virality.sentiment import NegativePolicy, score
from virality.tokenizer import build_vocabulary, tokenize, vectorize

log = logging.getLogger(__name__)

ALL_BLOCK = "all"
AROUSAL_BLOCK = "arousal>0"


@dataclass(frozen=True)
class AnalysisConfig:
    corpus: str
    corpus_name: str | None = None
    english_lexicon: str | None = None
    sentiment_lexicon: str | None = None
    stopwords: str | None = None
    news_model: str | None = None
    labeled_corpus: str | None = None
    news_category: str = "news"
    excluded_categories: tuple[str, ...] = ("editorial",)
    vocab_size: int = 10_000
    split: float = 0.75
    seed: int = 0
    alpha: float = 1.0
    negative_policy: str = "valence"
    interaction_mode: str = "product"
    require_declared: bool = True
    language_filter: bool = True
    arousal_filter: bool = False
    covariates: tuple[str, ...] = COVARIATES
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    on_error: str = "abort"

    def __post_init__(self):
        if not 0.0 < self.split < 1.0:
            raise ConfigError(f"split must lie in (0, 1), got {self.split}")
        if self.vocab_size < 1:
            raise ConfigError("vocab_size must be positive")
        if self.news_model is None and self.labeled_corpus is None:
            raise ConfigError("either a news model or a labeled corpus is required")
        unknown = [c for c in self.covariates if c not in COVARIATES]
        if unknown:
            raise ConfigError(f"unknown covariates: {', '.join(unknown)}")
        try:
            NegativePolicy.parse(self.negative_policy)
            InteractionMode.parse(self.interaction_mode)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        object.__setattr__(self, "excluded_categories", tuple(self.excluded_categories))
        object.__setattr__(self, "covariates", tuple(self.covariates))
        for name in ("corpus", "english_lexicon", "sentiment_lexicon", "stopwords", "news_model", "labeled_corpus"):
            path = getattr(self, name)
            if path is not None and not os.path.isfile(path):
                raise ConfigError(f"{name} path {path!r} is not a readable file")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["excluded_categories"] = list(self.excluded_categories)
        d["covariates"] = list(self.covariates)
        return d


@dataclass
class NewsTraining:
    model: news.NaiveBayesModel
    accuracy: float
    n_train: int
    n_test: int


def _normalize(sentence: LabeledSentence) -> list[str]:
    return tokenize(" ".join(sentence.tokens))


def train_news_model(
    sentences: Sequence[LabeledSentence],
    stopwords=(),
    vocab_size: int = 10_000,
    split: float = 0.75,
    seed: int = 0,
    alpha: float = 1.0,
) -> NewsTraining:
    """Split, build the vocabulary on the training part, train and test."""
    train_part, test_part = news.split_train_test(sentences, split, seed)
    train_tokens = [_normalize(s) for s in train_part]
    vocab = build_vocabulary(train_tokens, stopwords, vocab_size)
    model = news.train(
        ((vectorize(toks, vocab), s.label) for toks, s in zip(train_tokens, train_part)),
        vocab,
        alpha,
    )
    test = [(vectorize(_normalize(s), vocab), s.label) for s in test_part]
    return NewsTraining(model, news.evaluate(model, test), len(train_part), len(test_part))


def repeated_accuracy(sentences, seeds, **kwargs) -> tuple[float, float, list[float]]:
    """Mean and (population) standard deviation of holdout accuracy over seeds."""
    accs = [train_news_model(sentences, seed=s, **kwargs).accuracy for s in seeds]
    return float(np.mean(accs)), float(np.std(accs)), accs


def _fit_block(name, rows, p_news, retweets, config) -> Block:
    rows = np.asarray(rows, dtype=np.float64).reshape(len(retweets), len(COVARIATES))
    y = np.asarray(retweets, dtype=np.float64)
    totals = {c: float(rows[:, COVARIATES.index(c)].sum()) for c in config.covariates}
    block = Block(
        name=name,
        n=len(y),
        rate_of_news=news.news_rate(p_news),
        retweets=int(y.sum()),
        feature_totals=totals,
    )
    if y.min() == y.max():
        raise DataError(f"block {name!r}: retweet response is constant ({int(y[0])})")

    reasons: dict[str, str] = {}
    used = []
    for c in config.covariates:
        col = rows[:, COVARIATES.index(c)]
        if np.all(col == col[0]):
            reasons[c] = f"constant covariate (all {col[0]:g})"
        else:
            used.append(c)
    X = np.column_stack([np.ones(len(y))] + [rows[:, COVARIATES.index(c)] for c in used])
    names = ("intercept", *used)
    for c in dependent_columns(X, names):
        reasons[c] = "collinear with other covariates"
    used = [c for c in used if c not in reasons]
    design = DesignMatrix.from_columns(
        np.column_stack([rows[:, COVARIATES.index(c)] for c in used]) if used else np.empty((len(y), 0)),
        y,
        used,
    )
    full = fit_logistic(design, config.tol, config.max_iter)
    block.fit = full
    results = {}
    if not full.converged:
        for c in used:
            reasons[c] = "full model did not converge"
    else:
        wald = full.beta / full.std_err
        for j, c in enumerate(used, start=1):
            result = CovariateResult(
                name=c,
                beta=float(full.beta[j]),
                std_err=float(full.std_err[j]),
                wald=float(wald[j]),
            )
            sub = fit_logistic(design.drop(c), config.tol, config.max_iter)
            if not sub.converged:
                result.reason = "drop-one sub-model did not converge"
            else:
                lr = likelihood_ratio_test(full, sub, 1)
                result.lr_statistic = lr.statistic
                result.lr_p_value = lr.p_value
                result.sub_log_lik = sub.log_lik
            results[c] = result
    block.covariates = [
        results.get(c) or CovariateResult(name=c, reason=reasons.get(c)) for c in config.covariates
    ]
    return block


def analyze_tweets(
    tweets: Sequence[Tweet],
    model: news.NaiveBayesModel,
    sentiment_lexicon: Lexicon,
    english_lexicon: Lexicon | None,
    config: AnalysisConfig,
) -> tuple[list[tuple[str, int]], list[Block]]:
    """Run the per-tweet stages and fit the retweet models.

    Returns the stage counts and one block per analysed subset.
    """
    policy = NegativePolicy.parse(config.negative_policy)
    mode = InteractionMode.parse(config.interaction_mode)
    stages = [("loaded", len(tweets))]
    if config.language_filter:
        tweets = [t for t in tweets if is_english(t, english_lexicon, config.require_declared)]
        stages.append(("english", len(tweets)))
    if not tweets:
        raise DataError("no tweets left after language filtering")

    rows, p_news, retweets, arousal = [], [], [], []
    for tweet in tweets:
        tokens = tokenize(tweet.text)
        p = news.posterior(model, vectorize(tokens, model.vocab))
        s = score(tokens, sentiment_lexicon)
        fv = extract(tweet, s, p, mode, policy)
        rows.append(fv.covariates())
        p_news.append(p)
        retweets.append(fv.is_retweet)
        arousal.append(s.arousal)

    blocks = [_fit_block(ALL_BLOCK, rows, p_news, retweets, config)]
    if config.arousal_filter:
        keep = [i for i, a in enumerate(arousal) if a > 0]
        stages.append(("arousal>0", len(keep)))
        if not keep:
            raise DataError("no tweets left after the arousal > 0 filter")
        blocks.append(
            _fit_block(
                AROUSAL_BLOCK,
                [rows[i] for i in keep],
                [p_news[i] for i in keep],
                [retweets[i] for i in keep],
                config,
            )
        )
    return stages, blocks


def load_news_model(config: AnalysisConfig, stopwords) -> tuple[news.NaiveBayesModel, dict]:
    if config.news_model is not None:
        with open(config.news_model, encoding="utf-8") as fh:
            model = news.load_model(fh)
        return model, {"source": "file"}
    sentences = load_labeled_corpus(
        config.labeled_corpus, config.news_category, config.excluded_categories
    )
    trained = train_news_model(
        sentences, stopwords, config.vocab_size, config.split, config.seed, config.alpha
    )
    info = {
        "source": "trained",
        "accuracy": trained.accuracy,
        "n_train": trained.n_train,
        "n_test": trained.n_test,
    }
    return trained.model, info


def run_analysis(config: AnalysisConfig) -> Report:
    stopwords = load_stopwords(config.stopwords or bundled_path("stopwords.txt"))
    sentiment_lexicon = load_lexicon(
        config.sentiment_lexicon or bundled_path("sentiment_sample.tsv"), *SENTIMENT_RANGE
    )
    english_lexicon = None
    if config.language_filter:
        english_lexicon = load_lexicon(
            config.english_lexicon or bundled_path("englishness_sample.tsv"), *ENGLISHNESS_RANGE
        )
    model, model_info = load_news_model(config, stopwords)
    model_info.update(
        vocab_size=model.D,
        stopword_count=model.vocab.stopword_count,
        prior_news=model.prior_news,
        alpha=model.smoothing_alpha,
    )
    tweets = load_tweets(config.corpus, on_error=config.on_error)
    log.info("loaded %d tweets from %s", len(tweets), config.corpus)
    stages, blocks = analyze_tweets(tweets, model, sentiment_lexicon, english_lexicon, config)
    name = config.corpus_name or os.path.splitext(os.path.basename(config.corpus))[0]
    return Report(
        corpus=name,
        stages=stages,
        blocks=blocks,
        news_model=model_info,
        config=config.to_dict(),
    )
