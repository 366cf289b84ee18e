"""Bernoulli Naive Bayes news / non-news classifier.

Every one of the D vocabulary terms enters the class likelihood: present
terms through p(w_d=1|class), absent ones through p(w_d=0|class). Scores
are accumulated in log space and turned into a posterior with a logistic
transform of the log-likelihood difference.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from virality.corpus_io import NEWS, OTHER
from virality.errors import DataError
from virality.tokenizer import TermPresenceVector, VocabularyModel

MODEL_FORMAT = "virality-naive-bayes"
MODEL_VERSION = 1

_CLASSES = (NEWS, OTHER)


@dataclass(frozen=True, eq=False)
class NaiveBayesModel:
    """Trained classifier.

    ``p_present[c, d]`` is p(w_d=1 | class c) with class 0 = news and
    class 1 = other. Log tables are derived on construction.
    """

    vocab: VocabularyModel
    prior_news: float
    p_present: np.ndarray
    smoothing_alpha: float = 1.0
    log_prior_news: float = field(init=False)
    log_prior_other: float = field(init=False)
    log_present: np.ndarray = field(init=False, repr=False)
    log_absent: np.ndarray = field(init=False, repr=False)
    _base: np.ndarray = field(init=False, repr=False)
    _delta: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        p = np.array(self.p_present, dtype=np.float64)
        if p.shape != (2, self.vocab.D):
            raise ValueError(f"p_present must have shape (2, {self.vocab.D}), got {p.shape}")
        if not 0.0 < self.prior_news < 1.0:
            raise ValueError("prior_news must lie in (0, 1)")
        p.setflags(write=False)
        with np.errstate(divide="ignore"):
            log_present = np.log(p)
            log_absent = np.log1p(-p)
        set_ = object.__setattr__
        set_(self, "p_present", p)
        set_(self, "log_prior_news", math.log(self.prior_news))
        set_(self, "log_prior_other", math.log1p(-self.prior_news))
        set_(self, "log_present", log_present)
        set_(self, "log_absent", log_absent)
        # L_c(v) = log prior_c + sum_d log p(w_d=0|c) + sum_{d in v} [log p(1|c) - log p(0|c)]
        set_(self, "_base", np.array([self.log_prior_news, self.log_prior_other]) + log_absent.sum(axis=1))
        set_(self, "_delta", log_present - log_absent)

    @property
    def D(self) -> int:
        return self.vocab.D

    def log_joint(self, vector: TermPresenceVector) -> tuple[float, float]:
        """Return ``(L_news, L_other)`` for one presence vector."""
        if vector.dim != self.vocab.D:
            raise ValueError("vector was built against a different vocabulary")
        idx = np.fromiter(vector.present, dtype=np.intp, count=len(vector.present))
        idx.sort()
        totals = self._base + self._delta[:, idx].sum(axis=1)
        return float(totals[0]), float(totals[1])

    def __eq__(self, other):
        if not isinstance(other, NaiveBayesModel):
            return NotImplemented
        return (
            self.vocab.terms == other.vocab.terms
            and self.vocab.stopword_count == other.vocab.stopword_count
            and self.prior_news == other.prior_news
            and self.smoothing_alpha == other.smoothing_alpha
            and np.array_equal(self.p_present, other.p_present)
        )


def _logistic_of_difference(l_news: float, l_other: float) -> float:
    diff = l_other - l_news
    if diff > 0:
        e = math.exp(-diff)
        return e / (1.0 + e)
    return 1.0 / (1.0 + math.exp(diff))


def posterior(model: NaiveBayesModel, vector: TermPresenceVector) -> float:
    """p(news | w) for a presence vector."""
    return _logistic_of_difference(*model.log_joint(vector))


def posteriors(model: NaiveBayesModel, vectors: Iterable[TermPresenceVector]) -> list[float]:
    return [posterior(model, v) for v in vectors]


def split_train_test(
    items: Sequence,
    train_fraction: float = 0.75,
    seed: int = 0,
    label_of: Callable = lambda item: item.label,
) -> tuple[list, list]:
    """Seeded uniform random partition into (train, test).

    Raises ``DataError`` if either part misses one of the two labels.
    """
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"train_fraction must lie strictly in (0, 1), got {train_fraction}")
    n = len(items)
    n_train = int(round(n * train_fraction))
    if n_train == 0 or n_train == n:
        raise DataError(f"cannot split {n} items with fraction {train_fraction}: a part would be empty")
    order = np.random.default_rng(seed).permutation(n)
    train = [items[i] for i in order[:n_train]]
    test = [items[i] for i in order[n_train:]]
    for part_name, part in (("train", train), ("test", test)):
        labels = {label_of(x) for x in part}
        missing = [c for c in _CLASSES if c not in labels]
        if missing:
            raise DataError(
                f"{part_name} part has no {missing[0]!r} examples; "
                "choose another seed or split fraction"
            )
    return train, test


def train(
    examples: Iterable[tuple[TermPresenceVector, str]],
    vocab: VocabularyModel,
    alpha: float = 1.0,
) -> NaiveBayesModel:
    """Estimate priors and smoothed presence probabilities.

    p(w_d=1|c) = (count_{d,c} + alpha) / (n_c + 2 alpha). With ``alpha=0``
    every term must be both present and absent at least once per class.
    """
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    counts = np.zeros((2, vocab.D), dtype=np.int64)
    n_class = np.zeros(2, dtype=np.int64)
    for vector, label in examples:
        if label == NEWS:
            c = 0
        elif label == OTHER:
            c = 1
        else:
            raise DataError(f"unknown label {label!r}")
        if vector.dim != vocab.D:
            raise ValueError("vector was built against a different vocabulary")
        n_class[c] += 1
        for d in vector.present:
            counts[c, d] += 1
    if n_class.min() == 0:
        raise DataError("training data must contain both news and other examples")
    if alpha == 0:
        bad = (counts == 0) | (counts == n_class[:, None])
        if bad.any():
            c, d = np.argwhere(bad)[0]
            raise DataError(
                f"term {vocab.terms[d]!r} has a zero or saturated count in class "
                f"{_CLASSES[c]!r}; use alpha > 0"
            )
    p_present = (counts + alpha) / (n_class[:, None] + 2.0 * alpha)
    prior_news = float(n_class[0] / n_class.sum())
    return NaiveBayesModel(vocab, prior_news, p_present, smoothing_alpha=float(alpha))


def evaluate(model: NaiveBayesModel, test: Sequence[tuple[TermPresenceVector, str]]) -> float:
    """Accuracy with decision rule posterior > 0.5 (ties count as non-news)."""
    if not test:
        raise ValueError("test set is empty")
    correct = sum((posterior(model, v) > 0.5) == (label == NEWS) for v, label in test)
    return correct / len(test)


def news_rate(probabilities: Sequence[float]) -> float:
    """Fraction of probabilities strictly above 0.5."""
    if len(probabilities) == 0:
        raise DataError("news rate of an empty set of tweets")
    return sum(1 for p in probabilities if p > 0.5) / len(probabilities)


def save_model(model: NaiveBayesModel, stream) -> None:
    record = {
        "format": MODEL_FORMAT,
        "version": MODEL_VERSION,
        "alpha": model.smoothing_alpha,
        "stopword_count": model.vocab.stopword_count,
        "prior_news": model.prior_news,
        "terms": list(model.vocab.terms),
        "p_present_news": model.p_present[0].tolist(),
        "p_present_other": model.p_present[1].tolist(),
    }
    json.dump(record, stream, ensure_ascii=False)
    stream.write("\n")


def load_model(stream) -> NaiveBayesModel:
    try:
        record = json.load(stream)
    except json.JSONDecodeError as exc:
        raise DataError(f"model file is not valid JSON ({exc.msg})") from None
    if record.get("format") != MODEL_FORMAT:
        raise DataError("not a naive Bayes model file")
    if record.get("version") != MODEL_VERSION:
        raise DataError(f"unsupported model version {record.get('version')!r}")
    vocab = VocabularyModel(tuple(record["terms"]), stopword_count=record["stopword_count"])
    p = np.array([record["p_present_news"], record["p_present_other"]], dtype=np.float64)
    return NaiveBayesModel(vocab, record["prior_news"], p, smoothing_alpha=record["alpha"])
