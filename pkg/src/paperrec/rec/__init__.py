from .engine import (
    ItemSimilarity,
    Recommendation,
    RecommendEngine,
    cluster_assign,
    format_recommendations,
    item_similarity,
    naive_score,
    recommend_itemcf,
    recommend_naive,
)
from .index import CorpusIndex, build_index, pairwise_max_cosine
from .matrix import AUTHORSHIP_SCORE, RatingMatrix, build_rating_matrix

__all__ = [
    "ItemSimilarity",
    "Recommendation",
    "RecommendEngine",
    "cluster_assign",
    "format_recommendations",
    "item_similarity",
    "naive_score",
    "recommend_itemcf",
    "recommend_naive",
    "CorpusIndex",
    "build_index",
    "pairwise_max_cosine",
    "AUTHORSHIP_SCORE",
    "RatingMatrix",
    "build_rating_matrix",
]
