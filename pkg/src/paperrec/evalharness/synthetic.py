"""Seeded synthetic corpora with planted topic areas.

Each area owns a disjoint topic vocabulary; papers draw their tokens from
their area's vocabulary, except that every token independently comes from a
shared cross-area pool with probability ``overlap``. With overlap 0 the
cross-area cosine of any pair is exactly 0, which makes these corpora useful
as ground truth for the classification evaluation. Authors publish 2-4
papers, always inside one area.
"""

from __future__ import annotations

import random

from ..corpus.names import AuthorName
from ..corpus.records import PaperRecord
from ..errors import InvalidConfig

_TITLE_TOKENS = 3
_KEYWORD_TOKENS = 3
_ABSTRACT_TOKENS = 24
_MIN_PAPERS_PER_AUTHOR = 2
_MAX_PAPERS_PER_AUTHOR = 4


def generate_synthetic_corpus(
    areas: int,
    papers_per_area: int,
    authors_per_area: int,
    vocab_per_topic: int,
    overlap: float,
    seed: int,
) -> list[PaperRecord]:
    """Build a deterministic multi-area corpus for desk-scale experiments."""
    if areas < 1 or papers_per_area < 1 or authors_per_area < 1 or vocab_per_topic < 1:
        raise InvalidConfig("all synthetic corpus counts must be >= 1")
    if not (0.0 <= overlap < 1.0):
        raise InvalidConfig(f"overlap {overlap} outside [0, 1)")
    if papers_per_area > _MAX_PAPERS_PER_AUTHOR * authors_per_area:
        raise InvalidConfig(
            f"{papers_per_area} papers per area cannot be covered by "
            f"{authors_per_area} authors writing at most {_MAX_PAPERS_PER_AUTHOR} papers each"
        )

    rng = random.Random(seed)
    shared_pool = [f"shared{t:03d}" for t in range(vocab_per_topic)]
    records: list[PaperRecord] = []

    for area_idx in range(areas):
        area = f"area{area_idx}"
        venue = f"CONF{area_idx}"
        topic_pool = [f"{area}term{t:03d}" for t in range(vocab_per_topic)]

        def draw_tokens(count: int) -> list[str]:
            return [
                rng.choice(shared_pool) if rng.random() < overlap else rng.choice(topic_pool)
                for _ in range(count)
            ]

        authors = [
            AuthorName(
                given=f"Ida{i:02d}",
                family=f"Area{area_idx}Scholar{i:02d}",
                raw=f"Ida{i:02d} Area{area_idx}Scholar{i:02d}",
            )
            for i in range(authors_per_area)
        ]

        # Every paper gets a primary author round-robin; authors left under
        # the 2-paper floor pick up co-authorships on other papers.
        paper_authors: list[list[int]] = [[] for _ in range(papers_per_area)]
        papers_of_author: list[list[int]] = [[] for _ in range(authors_per_area)]
        order = list(range(papers_per_area))
        rng.shuffle(order)
        for slot, paper_idx in enumerate(order):
            author_idx = slot % authors_per_area
            paper_authors[paper_idx].append(author_idx)
            papers_of_author[author_idx].append(paper_idx)
        for author_idx in range(authors_per_area):
            while len(papers_of_author[author_idx]) < _MIN_PAPERS_PER_AUTHOR:
                pool = [p for p in range(papers_per_area) if author_idx not in paper_authors[p]]
                extra = rng.choice(pool)
                paper_authors[extra].append(author_idx)
                papers_of_author[author_idx].append(extra)

        for paper_idx in range(papers_per_area):
            serial = f"study{area_idx}x{paper_idx:04d}"
            title = " ".join(draw_tokens(_TITLE_TOKENS) + [serial])
            keywords = tuple(draw_tokens(_KEYWORD_TOKENS))
            abstract = " ".join(draw_tokens(_ABSTRACT_TOKENS))
            records.append(
                PaperRecord.build(
                    title=title,
                    authors=tuple(authors[i] for i in paper_authors[paper_idx]),
                    keywords=keywords,
                    abstract=abstract,
                    venue=venue,
                    year=2004 + rng.randrange(8),
                    area=area,
                )
            )
    return records
