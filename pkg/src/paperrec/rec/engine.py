"""Top-N recommendation strategies over the corpus index and rating matrix.

The primary strategy scores a candidate paper by its best cosine similarity
to any of the target author's own papers, rescaled onto the rating scale by
the corpus-wide pairwise maximum: score = max_x cos(x, candidate) * 5 / M.
Candidates are also assigned to the most similar own paper ("centroid");
since centroids are themselves papers they never move, so the assignment is
a single pass.

The second strategy is item-based collaborative filtering: a candidate's
score is the similarity-weighted average of the author's own ratings. On a
positive-only authorship matrix almost no paper pair shares a rater, so
rating-column similarity falls back to content cosine; each similarity
records which branch produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Literal, Mapping, NamedTuple, Sequence

from ..corpus.names import AuthorId, normalize_author_name, resolve_author_aliases
from ..corpus.records import PaperRecord
from ..errors import AmbiguousAuthor, DegenerateCorpus, NoUserPapers, UnknownUser
from ..text.pipeline import Stoplist
from ..text.vectors import cosine
from .index import CorpusIndex, build_index
from .matrix import RatingMatrix, build_rating_matrix

Strategy = Literal["naive", "itemcf"]


@dataclass(frozen=True)
class Recommendation:
    """One recommended paper: estimated score in (0, 5] plus the own paper
    (cluster centroid) the candidate was assigned to."""

    paper: str
    score: float
    centroid: str
    basis: str | None = None  # item-CF only: "ratings" or "content"


class ItemSimilarity(NamedTuple):
    value: float
    branch: str  # "ratings" when the columns share a rater, else "content"


def cluster_assign(
    candidates: Sequence[str],
    user_papers: Sequence[str],
    index: CorpusIndex,
) -> dict[str, str]:
    """Assign each candidate to its most similar own paper, one pass.

    Ties break toward the smallest centroid paper id.
    """
    if not user_papers:
        raise NoUserPapers("cannot cluster candidates without any own papers")
    centroids = sorted(user_papers)
    assignment: dict[str, str] = {}
    for candidate in candidates:
        cand_vec = index.vectors[candidate]
        best_centroid = centroids[0]
        best_sim = -1.0
        for centroid in centroids:
            sim = cosine(cand_vec, index.vectors[centroid])
            if sim > best_sim:
                best_sim = sim
                best_centroid = centroid
        assignment[candidate] = best_centroid
    return assignment


def naive_score(candidate: str, user_papers: Sequence[str], index: CorpusIndex) -> float:
    """Best own-paper cosine, scaled to the rating ceiling.

    The denominator is the maximum cosine over all distinct paper pairs in
    the corpus, so the best-matching pair corpus-wide scores exactly 5.
    """
    if index.pairwise_max <= 0.0:
        raise DegenerateCorpus("no two papers in the corpus share a term")
    if not user_papers:
        raise NoUserPapers("author has no papers to score against")
    cand_vec = index.vectors[candidate]
    best = max(cosine(index.vectors[own], cand_vec) for own in user_papers)
    return best * 5.0 / index.pairwise_max


def recommend_naive(
    user: AuthorId,
    n: int,
    index: CorpusIndex,
    matrix: RatingMatrix,
) -> list[Recommendation]:
    """Top-n candidates by naive score, descending; own papers excluded.

    Ties break toward the smaller paper id. Zero-score candidates are never
    recommended, so fewer than n items come back when the positive pool is
    small.
    """
    own = matrix.papers_of(user.id)
    if not own:
        raise UnknownUser(f"author {user.display!r} has no papers in the corpus")
    user_papers = sorted(own)
    scored: list[tuple[float, str]] = []
    for candidate in index.paper_order:
        if candidate in own:
            continue
        score = naive_score(candidate, user_papers, index)
        if score > 0.0:
            scored.append((score, candidate))
    scored.sort(key=lambda item: (-item[0], item[1]))
    top = scored[:n]
    centroid_of = cluster_assign([paper for _, paper in top], user_papers, index)
    return [Recommendation(paper=paper, score=score, centroid=centroid_of[paper]) for score, paper in top]


def item_similarity(i: str, j: str, matrix: RatingMatrix, index: CorpusIndex) -> ItemSimilarity:
    """Cosine of two papers' rating columns, content cosine as the fallback.

    The fallback fires when the columns share no rater, which is the dominant
    case for authorship-only ratings.
    """
    col_i = matrix.column(i)
    col_j = matrix.column(j)
    shared = sorted(set(col_i) & set(col_j))
    if shared:
        dot = sum(col_i[a] * col_j[a] for a in shared)
        norm_i = sqrt(sum(r * r for r in col_i.values()))
        norm_j = sqrt(sum(r * r for r in col_j.values()))
        return ItemSimilarity(dot / (norm_i * norm_j), "ratings")
    return ItemSimilarity(cosine(index.vectors[i], index.vectors[j]), "content")


def recommend_itemcf(
    user: AuthorId,
    n: int,
    matrix: RatingMatrix,
    index: CorpusIndex,
) -> list[Recommendation]:
    """Top-n candidates by similarity-weighted average of the user's ratings.

    Candidates with zero similarity to every rated item are omitted (their
    weighted average is undefined). Ties break toward the smaller paper id.
    """
    own = matrix.papers_of(user.id)
    if not own:
        raise UnknownUser(f"author {user.display!r} has no papers in the corpus")
    rated = sorted(own)
    scored: list[tuple[float, str, str]] = []
    for candidate in index.paper_order:
        if candidate in own:
            continue
        weight_sum = 0.0
        weighted_ratings = 0.0
        any_ratings_branch = False
        for item in rated:
            sim = item_similarity(item, candidate, matrix, index)
            if sim.value > 0.0 and sim.branch == "ratings":
                any_ratings_branch = True
            weight_sum += sim.value
            weighted_ratings += sim.value * own[item]
        if weight_sum <= 0.0:
            continue
        score = weighted_ratings / weight_sum
        basis = "ratings" if any_ratings_branch else "content"
        scored.append((score, candidate, basis))
    scored.sort(key=lambda item: (-item[0], item[1]))
    top = scored[:n]
    centroid_of = cluster_assign([paper for _, paper, _ in top], rated, index)
    return [
        Recommendation(paper=paper, score=score, centroid=centroid_of[paper], basis=basis)
        for score, paper, basis in top
    ]


def format_recommendations(
    recommendations: Sequence[Recommendation],
    titles: Mapping[str, str],
) -> list[str]:
    """Stable output lines: rank, paper id, score (6 decimals), centroid, title."""
    return [
        f"{rank}\t{rec.paper}\t{rec.score:.6f}\t{rec.centroid}\t{titles.get(rec.paper, '')}"
        for rank, rec in enumerate(recommendations, start=1)
    ]


def _common_prefix_len(a: str, b: str) -> int:
    n = min(len(a), len(b))
    for i in range(n):
        if a[i] != b[i]:
            return i
    return n


class RecommendEngine:
    """Everything needed to serve recommendations for one corpus snapshot.

    Immutable once built; safe to share across requests.
    """

    def __init__(
        self,
        records: Sequence[PaperRecord],
        stoplist: Stoplist | None,
        index: CorpusIndex | None = None,
    ):
        self.records = list(records)
        self.records_by_id = {record.id: record for record in self.records}
        self.stoplist = stoplist
        self.alias_map, self.authors = resolve_author_aliases(self.records)
        self.matrix = build_rating_matrix(self.records, self.alias_map)
        self.index = index if index is not None else build_index(self.records, stoplist)

    def lookup_author(self, query: str) -> AuthorId:
        """Resolve a raw author query through the alias map.

        A full name must match its canonical key; an initials-only query also
        matches full names with the same family and initial; a bare family
        name matches every identity with that family. Exactly one match
        resolves, none raises UnknownUser with prefix-based suggestions, and
        several raise AmbiguousAuthor listing all of them.
        """
        name = normalize_author_name(query)
        key = name.canonical_key
        matches: dict[int, AuthorId] = {}
        hit = self.alias_map.get(key)
        if hit is not None:
            matches[hit.id] = hit
        if name.given_is_initial or not name.given:
            initial = name.given[0].lower() if name.given else None
            for entry in self.authors.entries:
                rep = self.authors.names[entry.id]
                if rep.family.lower() != name.family.lower():
                    continue
                if initial is not None and (not rep.given or rep.given[0].lower() != initial):
                    continue
                matches[entry.id] = entry
        if len(matches) == 1:
            return next(iter(matches.values()))
        if not matches:
            raise UnknownUser(
                f"no author matches {query!r}",
                suggestions=self._suggest(key),
            )
        candidates = sorted(m.display for m in matches.values())
        raise AmbiguousAuthor(f"{query!r} matches {len(matches)} authors", candidates=candidates)

    def _suggest(self, key: str, limit: int = 5) -> list[str]:
        """The closest author names by canonical-key prefix overlap."""
        ranked = sorted(
            ((entry, self.authors.names[entry.id].canonical_key) for entry in self.authors.entries),
            key=lambda item: (-_common_prefix_len(key, item[1]), item[1]),
        )
        return [entry.display for entry, _ in ranked[:limit]]

    def recommend(self, user: AuthorId, n: int, strategy: Strategy = "naive") -> list[Recommendation]:
        if strategy == "naive":
            return recommend_naive(user, n, self.index, self.matrix)
        if strategy == "itemcf":
            return recommend_itemcf(user, n, self.matrix, self.index)
        raise ValueError(f"unknown strategy {strategy!r}")

    def stats(self) -> dict:
        areas: dict[str, int] = {}
        for record in self.records:
            label = record.area if record.area is not None else "(none)"
            areas[label] = areas.get(label, 0) + 1
        return {
            "papers": len(self.records),
            "authors": len(self.authors),
            "vocabulary_size": len(self.index.vocabulary),
            "pairwise_max": self.index.pairwise_max,
            "rating_entries": len(self.matrix),
            "areas": dict(sorted(areas.items())),
        }
