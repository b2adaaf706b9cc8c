"""Document vectors, vocabulary construction, and set cosine."""

import pytest
from hypothesis import given, strategies as st

from conftest import make_record
from oracles import brute_cosine
from paperrec.errors import EmptyVocabulary, VocabularyMismatch
from paperrec.text.vectors import (
    DocVector,
    Vocabulary,
    build_vocabulary,
    cosine,
    document_tokens,
    vectorize,
)

term_sets = st.sets(st.integers(min_value=0, max_value=40).map(lambda n: f"t{n:02d}"), max_size=15)


def _vectors(a_terms: set, b_terms: set) -> tuple[DocVector, DocVector]:
    vocab = Vocabulary(tuple(sorted(a_terms | b_terms)) or ("pad0",))
    return (
        DocVector(paper="a", terms=frozenset(vocab.id_of(t) for t in a_terms), vocab_key=vocab.key),
        DocVector(paper="b", terms=frozenset(vocab.id_of(t) for t in b_terms), vocab_key=vocab.key),
    )


class TestDocumentTokens:
    def test_combines_title_keywords_abstract(self, stoplist):
        record = make_record(
            title="The Mining of Histories",
            keywords=["code clones", "software evolution"],
            abstract="We mine the change history daily.",
        )
        tokens = document_tokens(record, stoplist)
        # stopwords gone ("the", "of", "we"); only ing/ed/ly strip off
        assert tokens == [
            "min", "histories",
            "code", "clones", "software", "evolution",
            "mine", "change", "history", "dai",
        ]

    def test_stemming_can_be_disabled(self, stoplist):
        record = make_record(title="mining histories daily")
        assert document_tokens(record, stoplist, stemming=False) == [
            "mining", "histories", "daily",
        ]


class TestVocabulary:
    def test_first_occurrence_ids(self, stoplist):
        records = [
            make_record(title="alpha9 beta9"),
            make_record(title="beta9 gamma9"),
        ]
        vocab = build_vocabulary(records, stoplist)
        assert vocab.terms == ("alpha9", "beta9", "gamma9")
        assert vocab.id_of("gamma9") == 2
        assert vocab.term_of(0) == "alpha9"

    def test_dump_lines(self, stoplist):
        vocab = build_vocabulary([make_record(title="alpha9 beta9")], stoplist)
        assert vocab.dump_lines() == ["0\talpha9", "1\tbeta9"]

    def test_empty_corpus_rejected(self, stoplist):
        with pytest.raises(EmptyVocabulary):
            build_vocabulary([], stoplist)

    def test_all_stopword_corpus_rejected(self, stoplist):
        with pytest.raises(EmptyVocabulary):
            build_vocabulary([make_record(title="the of and")], stoplist)

    def test_vectorize_drops_unknown_terms(self, stoplist):
        known = make_record(title="alpha9 beta9")
        vocab = build_vocabulary([known], stoplist)
        vec = vectorize(make_record(title="beta9 newterm9"), vocab, stoplist)
        assert vec.terms == frozenset({vocab.id_of("beta9")})


class TestCosine:
    def test_worked_example_two_thirds(self):
        a, b = _vectors({"t00", "t01", "t02"}, {"t01", "t02", "t03"})
        assert cosine(a, b) == 2 / 3

    def test_empty_vector_scores_zero(self):
        a, b = _vectors(set(), {"t01"})
        assert cosine(a, b) == 0.0
        assert cosine(a, a) == 0.0

    def test_vocabulary_mismatch_rejected(self):
        a, _ = _vectors({"t00"}, {"t01"})
        other = DocVector(paper="x", terms=frozenset({"t00"}), vocab_key="0" * 16)
        with pytest.raises(VocabularyMismatch):
            cosine(a, other)

    @given(term_sets, term_sets)
    def test_matches_oracle_and_is_symmetric(self, sa, sb):
        a, b = _vectors(sa, sb)
        assert cosine(a, b) == brute_cosine(sa, sb)
        assert cosine(a, b) == cosine(b, a)
        assert 0.0 <= cosine(a, b) <= 1.0

    @given(term_sets)
    def test_self_cosine_is_one_for_nonempty(self, sa):
        a, _ = _vectors(sa, set())
        expected = 1.0 if sa else 0.0
        assert cosine(a, a) == expected

    @given(term_sets, term_sets)
    def test_disjoint_sets_score_zero(self, sa, sb):
        sb = {t + "x" for t in sb}  # force disjoint
        a, b = _vectors(sa, sb)
        assert cosine(a, b) == 0.0
