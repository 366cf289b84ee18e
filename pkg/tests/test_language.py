from hypothesis import given, strategies as st

from virality.corpus_io import Tweet
from virality.language import englishness, is_english
from virality.lexicons import Lexicon

LEX = Lexicon({"the": 3, "le": -2, "and": 2, "og": -3}, -3, 3)


def test_empty_text_scores_zero():
    assert englishness("", LEX) == 0


def test_accumulation():
    assert englishness("the the le", LEX) == 3 + 3 - 2


def test_unknown_words_score_zero():
    assert englishness("qwerty zxcv", LEX) == 0


def test_zero_is_not_english():
    assert not is_english(Tweet("1", "the le og and"), LEX)  # 3 - 2 - 3 + 2 = 0


def test_both_gates():
    assert is_english(Tweet("1", "the le", "en"), LEX, require_declared=True)


def test_declared_language_gate():
    tweet = Tweet("1", "the and", "pt")
    assert not is_english(tweet, LEX, require_declared=True)
    assert is_english(tweet, LEX, require_declared=False)


def test_absent_language_counts_as_english():
    assert is_english(Tweet("1", "the", None), LEX, require_declared=True)


vocab = st.sampled_from(["the", "le", "and", "og", "xyz", "hello"])
texts = st.lists(vocab, max_size=12).map(" ".join)


@given(texts, texts)
def test_additivity(a, b):
    assert englishness(a + " " + b, LEX) == englishness(a, LEX) + englishness(b, LEX)


@given(texts)
def test_monotonicity(text):
    base = englishness(text, LEX)
    assert englishness(text + " the", LEX) >= base
    assert englishness(text + " og", LEX) <= base


@given(st.lists(vocab, min_size=1, max_size=12).map(" ".join), st.sampled_from(["en", "pt", None]), st.booleans())
def test_gate_strictness(text, lang, flag):
    if englishness(text, LEX) <= 0:
        assert not is_english(Tweet("1", text, lang), LEX, flag)
