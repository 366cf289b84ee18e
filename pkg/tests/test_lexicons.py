import io

import pytest
from hypothesis import given, strategies as st

from virality.errors import DataError
from virality.lexicons import Lexicon, dump_lexicon, load_lexicon, load_stopwords


def test_bundled_sample_entries():
    lex = load_lexicon(["abandon\t-2\n", "aboard\t1\n"], -5, 5)
    assert lex.entries == {"abandon": -2, "aboard": 1}
    assert lex.get("abandon") == -2
    assert lex.get("unknown") == 0


def test_out_of_range_is_an_error():
    with pytest.raises(DataError, match="happy"):
        load_lexicon(["happy\t7\n"], -5, 5)


def test_duplicate_word_is_an_error():
    with pytest.raises(DataError, match="duplicate"):
        load_lexicon(["good\t3\n", "Good\t2\n"], -5, 5)


def test_non_integer_score_is_an_error():
    with pytest.raises(DataError, match="non-integer"):
        load_lexicon(["good\t2.5\n"], -5, 5)


def test_words_are_lowercased_and_comments_skipped():
    lex = load_lexicon(["# header\n", "\n", "COP\t2\n"], -3, 3)
    assert lex.entries == {"cop": 2}


def test_constructor_rejects_out_of_range():
    with pytest.raises(ValueError):
        Lexicon({"x": 4}, -3, 3)


def test_entries_are_read_only():
    lex = Lexicon({"x": 1}, -3, 3)
    with pytest.raises(TypeError):
        lex.entries["y"] = 2


def test_bundled_lexicons(sentiment_lexicon, english_lexicon, stopwords):
    assert sentiment_lexicon.get("abandoned") == -2
    assert sentiment_lexicon.get("aboard") == 1
    assert (sentiment_lexicon.min_score, sentiment_lexicon.max_score) == (-5, 5)
    assert english_lexicon.get("the") > 0
    assert "the" in stopwords


words = st.text(alphabet="abcdefghijklmnopqrstuvwxyz'", min_size=1, max_size=10)


@given(st.dictionaries(words, st.integers(-5, 5), max_size=30))
def test_load_is_idempotent_on_dump(entries):
    lex = Lexicon(entries, -5, 5)
    buf = io.StringIO()
    dump_lexicon(lex, buf)
    text = buf.getvalue()
    again = load_lexicon(io.StringIO(text), -5, 5)
    assert dict(again.entries) == entries
    # entry count equals non-comment, non-blank line count
    assert len(again) == sum(1 for line in text.splitlines() if line.strip())


def test_stopwords_file():
    assert load_stopwords(["The\n", "# c\n", "\n", "and\n"]) == {"the", "and"}
