import pytest
from hypothesis import given, strategies as st

from virality.lexicons import Lexicon
from virality.sentiment import NegativePolicy, SentimentScore, negative_flag, score

LEX = Lexicon({"abandon": -2, "abandoned": -2, "aboard": 1, "good": 3, "bad": -3, "meh": 0}, -5, 5)


def test_lexicon_sample_words():
    s = score(["abandoned", "aboard"], LEX)
    assert (s.valence, s.arousal) == (-1, 3)


def test_empty():
    assert score([], LEX) == SentimentScore(0, 0, 0)


def test_multiplicity():
    s = score(["abandon", "abandon"], LEX)
    assert (s.valence, s.arousal) == (-4, 4)


def test_no_stemming():
    assert score(["abandoning"], LEX) == SentimentScore()


def test_negative_flag_valence_policy():
    assert negative_flag(SentimentScore(-1, 1, 1), "valence")


def test_policies_differ_on_mixed_tweet():
    s = score(["good", "abandon"], LEX)  # +3, -2
    assert s.valence == 1
    assert not negative_flag(s, NegativePolicy.VALENCE)
    assert negative_flag(s, NegativePolicy.WORD)


def test_neutral_under_both_policies():
    s = score(["meh", "unknown"], LEX)
    assert (s.valence, s.arousal) == (0, 0)
    assert not negative_flag(s, "valence")
    assert not negative_flag(s, "word")


def test_policy_aliases():
    assert NegativePolicy.parse("valence_below_zero") is NegativePolicy.VALENCE
    assert NegativePolicy.parse("any_negative_word") is NegativePolicy.WORD
    with pytest.raises(ValueError):
        NegativePolicy.parse("other")


tokens = st.lists(st.sampled_from(sorted(LEX.entries) + ["zzz", "qq"]), max_size=20)


@given(tokens)
def test_arousal_bounds_valence(toks):
    s = score(toks, LEX)
    assert s.arousal >= abs(s.valence)
    if s.arousal == 0:
        assert s.valence == 0
    assert s.negative == (s.valence < 0)
