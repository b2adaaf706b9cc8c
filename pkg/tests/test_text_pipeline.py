"""Tokenizer, stemmer, and stop-list behaviour."""

from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from paperrec.errors import InvalidConfig
from paperrec.text.pipeline import Stoplist, remove_stopwords, stem, tokenize

DATA = Path(__file__).resolve().parent / "data"


def _read_rows(name: str, columns: int) -> list[tuple[str, ...]]:
    rows = []
    for line in (DATA / name).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = tuple(line.split("\t"))
        assert len(parts) == columns, line
        rows.append(parts)
    return rows


def _words_1k() -> list[str]:
    return [w for w, in _read_rows("words_1k.txt", 1)]


class TestTokenize:
    def test_lowercases_and_splits_on_non_alphanumerics(self):
        text = "Model-based Testing of U.S. systems (2nd ed.)"
        assert tokenize(text) == ["model", "based", "testing", "of", "systems", "2nd", "ed"]

    def test_short_tokens_dropped(self):
        # single letters from initialisms vanish, two-letter tokens stay
        assert tokenize("A C++ to Go port") == ["to", "go", "port"]

    def test_underscore_is_a_separator(self):
        assert tokenize("foo_bar baz") == ["foo", "bar", "baz"]

    def test_unicode_letters_kept(self):
        assert tokenize("naïve Bayes résumé") == ["naïve", "bayes", "résumé"]

    def test_digits_kept(self):
        assert tokenize("tcp2 ipv6 802 protocols") == ["tcp2", "ipv6", "802", "protocols"]

    def test_empty_input(self):
        assert tokenize("") == []
        assert tokenize("  \t\n ") == []

    @given(st.text(max_size=200))
    def test_tokens_are_lowercase_and_at_least_two_chars(self, text):
        for token in tokenize(text):
            assert len(token) >= 2
            assert token == token.lower()
            assert all(ch.isalnum() and ch != "_" for ch in token)


class TestStem:
    def test_golden_table(self):
        for word, expected in _read_rows("stem_golden.tsv", 2):
            assert stem(word) == expected, f"stem({word!r})"

    def test_shared_stem_family(self):
        # the canonical family: all four collapse to the same stem
        assert {stem(w) for w in ("clear", "clearly", "cleared", "clearing")} == {"clear"}

    def test_single_pass_documented_violations(self):
        for word, first, second in _read_rows("stem_idempotence_violations.txt", 3):
            assert stem(word) == first, word
            assert stem(first) == second, word
            assert first != second, word

    def test_strips_at_most_one_suffix(self):
        for word in _words_1k():
            out = stem(word)
            delta = len(word) - len(out)
            assert delta in (0, 2, 3), (word, out)
            if delta:
                assert word == out + word[len(out):]
                assert word[len(out):] in ("ing", "ed", "ly")
                assert len(out) >= 3

    def test_first_matching_suffix_wins(self):
        for word in _words_1k():
            for suffix in ("ing", "ed", "ly"):
                if word.endswith(suffix) and len(word) - len(suffix) >= 3:
                    assert stem(word) == word[: -len(suffix)], word
                    break
            else:
                assert stem(word) == word

    def test_short_words_untouched(self):
        for word in ("ed", "ly", "ing", "red", "fly", "used", "ring"):
            assert len(stem(word)) >= min(len(word), 3)


class TestStoplist:
    def test_default_has_140_words_including_the_and_of(self, stoplist):
        assert len(stoplist) == 140
        assert "the" in stoplist
        assert "of" in stoplist

    def test_remove_stopwords(self, stoplist):
        kept = remove_stopwords(["the", "cost", "of", "cloning", "and", "reuse"], stoplist)
        assert kept == ["cost", "cloning", "reuse"]

    def test_from_text_skips_comments_and_blanks(self):
        sl = Stoplist.from_text("# c\nthe\n\nof\nzebra\n")
        assert len(sl) == 3 and "zebra" in sl

    def test_rejects_uppercase_entries(self):
        with pytest.raises(InvalidConfig):
            Stoplist.from_text("the\nof\nBad\n")

    def test_rejects_lists_missing_required_words(self):
        with pytest.raises(InvalidConfig):
            Stoplist.from_text("and\nor\nof\n")

    def test_from_file(self, tmp_path):
        path = tmp_path / "stop.txt"
        path.write_text("the\nof\ncustomword\n")
        assert "customword" in Stoplist.from_file(path)

    def test_default_words_survive_tokenizer(self, stoplist):
        # every stop word must be matchable by the tokenizer, or it's dead weight
        for word in stoplist.words:
            if len(word) >= 2:
                assert tokenize(word) == [word]
