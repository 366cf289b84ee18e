"""Retweet virality analysis: language filtering, news classification,
lexicon sentiment, tweet features and binomial GLM hypothesis tests."""

from virality.errors import (
    ConfigError,
    ConvergenceError,
    DataError,
    RankDeficientError,
    ViralityError,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "ConvergenceError",
    "DataError",
    "RankDeficientError",
    "ViralityError",
]
