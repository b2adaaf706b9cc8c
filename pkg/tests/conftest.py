from __future__ import annotations

import random
from pathlib import Path

import pytest

from paperrec.corpus.names import AuthorName
from paperrec.corpus.records import PaperRecord
from paperrec.text.pipeline import Stoplist

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def stoplist() -> Stoplist:
    return Stoplist.default()


@pytest.fixture(scope="session")
def fixtures_root() -> Path:
    return FIXTURES


def make_record(
    title: str,
    author_names: list[str] | None = None,
    keywords: list[str] | None = None,
    abstract: str = "",
    venue: str = "VENUE",
    year: int = 2005,
    area: str | None = None,
) -> PaperRecord:
    """Compact record factory for tests; one-token default author."""
    names = author_names or ["Test Person"]
    authors = []
    for name in names:
        parts = name.split()
        authors.append(AuthorName(given=parts[0], family=parts[-1], raw=name))
    return PaperRecord.build(
        title=title,
        authors=authors,
        keywords=keywords or [],
        abstract=abstract,
        venue=venue,
        year=year,
        area=area,
    )


def random_term_corpus(
    rng: random.Random,
    papers: int,
    vocab: int,
    min_terms: int = 1,
    max_terms: int = 12,
    authors: int | None = None,
) -> list[PaperRecord]:
    """Papers whose token sets are random draws from a digit-safe vocabulary.

    Tokens end in digits so the stemmer leaves them alone, and none collide
    with stop words; what goes in is exactly what lands in the vectors.
    Papers rotate through a smaller author pool so most authors hold
    several papers.
    """
    pool = [f"tok{t:04d}" for t in range(vocab)]
    author_count = authors if authors is not None else max(1, papers // 2)
    records = []
    for i in range(papers):
        size = rng.randint(min_terms, max_terms)
        terms = rng.sample(pool, min(size, len(pool)))
        j = i % author_count
        records.append(
            make_record(
                title=f"paper{i:04d} " + " ".join(terms[: len(terms) // 2 + 1]),
                abstract=" ".join(terms[len(terms) // 2 + 1:]),
                author_names=[f"Gen{j:04d} Person{j:04d}"],
            )
        )
    return records
