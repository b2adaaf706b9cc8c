"""Sparse author-by-paper preference matrix.

Preferences are implicit and positive-only: authorship is the signal, and
every (author, paper) authorship pair gets the fixed top rating on the 1-5
scale. Nothing else is present at build time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from ..corpus.names import AuthorId
from ..corpus.records import PaperRecord

AUTHORSHIP_SCORE = 5.0

RATING_MIN = 1.0
RATING_MAX = 5.0


@dataclass
class RatingMatrix:
    """Sparse (author id, paper id) -> rating map with both orientations."""

    by_author: dict[int, dict[str, float]] = field(default_factory=dict)
    by_paper: dict[str, dict[int, float]] = field(default_factory=dict)

    def set_rating(self, author_id: int, paper: str, rating: float) -> None:
        if not (RATING_MIN <= rating <= RATING_MAX):
            raise ValueError(f"rating {rating} outside [{RATING_MIN}, {RATING_MAX}]")
        self.by_author.setdefault(author_id, {})[paper] = rating
        self.by_paper.setdefault(paper, {})[author_id] = rating

    def papers_of(self, author_id: int) -> dict[str, float]:
        return self.by_author.get(author_id, {})

    def column(self, paper: str) -> dict[int, float]:
        return self.by_paper.get(paper, {})

    def entries(self) -> Iterator[tuple[int, str, float]]:
        for author_id, row in self.by_author.items():
            for paper, rating in row.items():
                yield author_id, paper, rating

    def __len__(self) -> int:
        return sum(len(row) for row in self.by_author.values())


def build_rating_matrix(records: Sequence[PaperRecord], alias_map: Mapping[str, AuthorId]) -> RatingMatrix:
    """One AUTHORSHIP_SCORE entry per resolved (author, paper) pair, nothing else."""
    matrix = RatingMatrix()
    for record in records:
        for author in record.authors:
            identity = alias_map[author.canonical_key]
            matrix.set_rating(identity.id, record.id, AUTHORSHIP_SCORE)
    return matrix
