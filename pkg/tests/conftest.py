import os
import sys

import pytest

from virality.lexicons import (
    bundled_englishness_lexicon,
    bundled_sentiment_lexicon,
    bundled_stopwords,
)

sys.path.insert(0, os.path.dirname(__file__))

DATA = os.path.join(os.path.dirname(__file__), "data")


def data_path(name):
    return os.path.join(DATA, name)


@pytest.fixture(scope="session")
def sentiment_lexicon():
    return bundled_sentiment_lexicon()


@pytest.fixture(scope="session")
def english_lexicon():
    return bundled_englishness_lexicon()


@pytest.fixture(scope="session")
def stopwords():
    return bundled_stopwords()
