"""Corpus index: one bit vector per paper plus the corpus-wide pairwise
maximum cosine, which normalizes preference scores onto the rating scale.

The pairwise maximum is the quadratic hot spot of an index build, so it runs
as a blocked sparse matrix product over the bit vectors. The arithmetic per
pair is the exact expression used by ``text.vectors.cosine`` (intersection
count divided by the square root of the integer size product), so the result
is bit-identical to a naive double loop.
"""

from __future__ import annotations

import hashlib
import pickle
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from ..corpus.records import PaperRecord
from ..errors import IoFailure
from ..text.pipeline import Stoplist
from ..text.vectors import DocVector, Vocabulary, build_vocabulary, vectorize

_CACHE_FORMAT = 1


@dataclass(frozen=True)
class CorpusIndex:
    """Immutable per-corpus index, shareable across threads once built."""

    vocabulary: Vocabulary
    vectors: dict[str, DocVector]
    paper_order: tuple[str, ...]
    pairwise_max: float  # max cosine over all distinct paper pairs; 0.0 if none share a term

    def __len__(self) -> int:
        return len(self.paper_order)


def pairwise_max_cosine(vectors: Sequence[DocVector]) -> float:
    """Maximum cosine over all distinct pairs of the given bit vectors."""
    n = len(vectors)
    if n < 2:
        return 0.0
    sizes = np.array([len(v.terms) for v in vectors], dtype=np.int64)
    n_terms = int(max((max(v.terms) for v in vectors if v.terms), default=-1)) + 1
    if n_terms == 0 or int(sizes.sum()) == 0:
        return 0.0

    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(sizes, out=indptr[1:])
    indices = np.empty(int(indptr[-1]), dtype=np.int64)
    for row, vector in enumerate(vectors):
        indices[indptr[row] : indptr[row + 1]] = vector.sorted_terms
    data = np.ones(len(indices), dtype=np.int64)
    bits = sp.csr_matrix((data, indices, indptr), shape=(n, n_terms))
    bits_t = bits.T.tocsc()

    best = 0.0
    block = max(1, 4_000_000 // n)
    for start in range(0, n, block):
        stop = min(start + block, n)
        counts = (bits[start:stop] @ bits_t).tocoo()
        if counts.nnz == 0:
            continue
        rows = counts.row + start
        mask = rows != counts.col  # drop self-pairs
        if not mask.any():
            continue
        overlap = counts.data[mask]
        # Same expression as text.vectors.cosine, vectorized.
        sims = overlap / np.sqrt(sizes[rows[mask]] * sizes[counts.col[mask]])
        block_best = float(sims.max())
        if block_best > best:
            best = block_best
    return best


def build_index(records: Sequence[PaperRecord], stoplist: Stoplist | None) -> CorpusIndex:
    vocabulary = build_vocabulary(records, stoplist)
    order = tuple(record.id for record in records)
    vectors = {record.id: vectorize(record, vocabulary, stoplist) for record in records}
    pairwise_max = pairwise_max_cosine([vectors[pid] for pid in order])
    return CorpusIndex(
        vocabulary=vocabulary,
        vectors=vectors,
        paper_order=order,
        pairwise_max=pairwise_max,
    )


def file_sha256(path: str | Path) -> str:
    try:
        return hashlib.sha256(Path(path).read_bytes()).hexdigest()
    except OSError as exc:
        raise IoFailure(f"cannot hash {path}: {exc}") from exc


def index_cache_path(corpus_path: str | Path) -> Path:
    return Path(str(corpus_path) + ".idx")


def save_index_cache(index: CorpusIndex, path: str | Path, corpus_sha: str, stoplist_sha: str) -> None:
    """Persist an index keyed by the corpus and stop-list content hashes."""
    payload = {
        "format": _CACHE_FORMAT,
        "corpus_sha": corpus_sha,
        "stoplist_sha": stoplist_sha,
        "terms": list(index.vocabulary.terms),
        "order": list(index.paper_order),
        "vectors": {pid: list(vec.sorted_terms) for pid, vec in index.vectors.items()},
        "pairwise_max": index.pairwise_max,
    }
    try:
        with open(path, "wb") as fh:
            pickle.dump(payload, fh, protocol=pickle.HIGHEST_PROTOCOL)
    except OSError as exc:
        raise IoFailure(f"cannot write index cache {path}: {exc}") from exc


def load_index_cache(path: str | Path, corpus_sha: str, stoplist_sha: str) -> CorpusIndex | None:
    """Load a cached index; any mismatch (format, hashes) invalidates it."""
    try:
        with open(path, "rb") as fh:
            payload = pickle.load(fh)
    except (OSError, pickle.UnpicklingError, EOFError):
        return None
    if not isinstance(payload, dict) or payload.get("format") != _CACHE_FORMAT:
        return None
    if payload.get("corpus_sha") != corpus_sha or payload.get("stoplist_sha") != stoplist_sha:
        return None
    vocabulary = Vocabulary(tuple(payload["terms"]))
    vectors = {
        pid: DocVector(paper=pid, terms=frozenset(terms), vocab_key=vocabulary.key)
        for pid, terms in payload["vectors"].items()
    }
    return CorpusIndex(
        vocabulary=vocabulary,
        vectors=vectors,
        paper_order=tuple(payload["order"]),
        pairwise_max=payload["pairwise_max"],
    )
