"""Bag-of-words bit vectors over a corpus vocabulary, and their cosine similarity.

A document's text is the concatenation of its title, keywords, and abstract.
Each distinct post-pipeline token becomes one vocabulary attribute; a document
is the set of attribute ids it contains (presence only, no counts).
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import EmptyVocabulary, VocabularyMismatch
from .pipeline import Stoplist, remove_stopwords, stem, tokenize


def document_tokens(record, stoplist: Stoplist | None, stemming: bool = True) -> list[str]:
    """Run the full preprocessing pipeline over one paper's text fields.

    ``record`` needs ``title``, ``keywords`` and ``abstract`` attributes.
    Multi-word keywords contribute their constituent tokens; passing
    ``stoplist=None`` or ``stemming=False`` disables that stage.
    """
    text = " ".join((record.title, " ".join(record.keywords), record.abstract))
    tokens = tokenize(text)
    if stoplist is not None:
        tokens = remove_stopwords(tokens, stoplist)
    if stemming:
        tokens = [stem(tok) for tok in tokens]
    return tokens


@dataclass(frozen=True)
class Vocabulary:
    """Dense bijection between post-pipeline terms and ids 0..N-1."""

    terms: tuple[str, ...]
    ids: dict[str, int] = field(init=False, repr=False, compare=False)
    key: str = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ids", {term: i for i, term in enumerate(self.terms)})
        digest = hashlib.sha256("\n".join(self.terms).encode("utf-8")).hexdigest()[:16]
        object.__setattr__(self, "key", digest)
        if len(self.ids) != len(self.terms):
            raise ValueError("vocabulary terms must be unique")

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.ids

    def id_of(self, term: str) -> int:
        return self.ids[term]

    def term_of(self, term_id: int) -> str:
        return self.terms[term_id]

    def dump_lines(self) -> list[str]:
        """Debug dump, one ``id<TAB>term`` line per term."""
        return [f"{i}\t{term}" for i, term in enumerate(self.terms)]


@dataclass(frozen=True)
class DocVector:
    """Set bits of one document's bag-of-words bit vector."""

    paper: str
    terms: frozenset[int]
    vocab_key: str

    @property
    def sorted_terms(self) -> tuple[int, ...]:
        return tuple(sorted(self.terms))

    def __len__(self) -> int:
        return len(self.terms)


def build_vocabulary(corpus: Sequence, stoplist: Stoplist | None, stemming: bool = True) -> Vocabulary:
    """Collect vocabulary terms over the corpus, ids in first-occurrence order.

    Scanning follows the input order of ``corpus``, so identical input order
    yields an identical vocabulary. Raises EmptyVocabulary when every
    document reduces to zero tokens.
    """
    if not corpus:
        raise EmptyVocabulary("cannot build a vocabulary from an empty corpus")
    terms: list[str] = []
    seen: set[str] = set()
    for record in corpus:
        for token in document_tokens(record, stoplist, stemming=stemming):
            if token not in seen:
                seen.add(token)
                terms.append(token)
    if not terms:
        raise EmptyVocabulary("every document reduced to zero tokens")
    return Vocabulary(tuple(terms))


def vectorize(record, vocabulary: Vocabulary, stoplist: Stoplist | None, stemming: bool = True) -> DocVector:
    """Map a record onto the vocabulary; out-of-vocabulary tokens are dropped.

    Dropping unknown tokens lets new documents be queried against a frozen
    vocabulary.
    """
    ids = {
        vocabulary.ids[token]
        for token in document_tokens(record, stoplist, stemming=stemming)
        if token in vocabulary.ids
    }
    return DocVector(paper=record.id, terms=frozenset(ids), vocab_key=vocabulary.key)


def cosine(a: DocVector, b: DocVector) -> float:
    """Cosine similarity of two bit vectors: |a & b| / sqrt(|a| * |b|).

    Defined as 0.0 when either vector is empty so degenerate documents rank
    last instead of failing the query. The expression is symmetric in its
    arguments, exactly.
    """
    if a.vocab_key != b.vocab_key:
        raise VocabularyMismatch(
            f"vectors built over different vocabularies ({a.vocab_key} vs {b.vocab_key})"
        )
    if not a.terms or not b.terms:
        return 0.0
    overlap = len(a.terms & b.terms)
    return overlap / math.sqrt(len(a.terms) * len(b.terms))
