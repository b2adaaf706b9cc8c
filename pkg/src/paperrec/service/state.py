"""Service configuration and the lazily built engine behind the endpoints."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from ..corpus.records import load_corpus
from ..errors import InvalidConfig, IoFailure
from ..rec.engine import RecommendEngine
from ..rec.index import (
    build_index,
    file_sha256,
    index_cache_path,
    load_index_cache,
    save_index_cache,
)
from ..text.pipeline import Stoplist

_CONFIG_KEYS = {"corpus", "stoplist", "venue_areas", "fixtures", "top_n", "seed", "no_cache"}


@dataclass(frozen=True)
class ServiceConfig:
    """Paths and defaults shared by the service and the command line."""

    corpus: str = "corpus.jsonl"
    stoplist: str | None = None
    venue_areas: str | None = None
    fixtures: str | None = None
    top_n: int = 10
    seed: int = 42
    no_cache: bool = False

    def __post_init__(self) -> None:
        if self.top_n < 1:
            raise InvalidConfig(f"top_n must be >= 1, got {self.top_n}")

    @classmethod
    def from_file(cls, path: str | Path) -> "ServiceConfig":
        """Load a JSON config file; unknown keys are rejected."""
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise IoFailure(f"cannot read config {path}: {exc}") from exc
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidConfig(f"config {path} is not valid JSON: {exc}") from exc
        if not isinstance(obj, dict):
            raise InvalidConfig(f"config {path} must hold a JSON object")
        unknown = set(obj) - _CONFIG_KEYS
        if unknown:
            raise InvalidConfig(f"config {path} has unknown keys: {sorted(unknown)}")
        return cls(**obj)

    def override(self, **changes) -> "ServiceConfig":
        """Copy with the non-None entries of ``changes`` applied."""
        effective = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **effective) if effective else self


def load_stoplist(config: ServiceConfig) -> Stoplist:
    if config.stoplist:
        return Stoplist.from_file(config.stoplist)
    return Stoplist.default()


def stoplist_sha(config: ServiceConfig) -> str:
    """Content hash of whichever stop-word list the config selects."""
    if config.stoplist:
        return file_sha256(config.stoplist)
    data = resources.files("paperrec.text").joinpath("data/stopwords.txt")
    return hashlib.sha256(data.read_bytes()).hexdigest()


class ServiceState:
    """Owns the engine and rebuilds it when the corpus file changes."""

    def __init__(self, config: ServiceConfig):
        self.config = config
        self._engine: RecommendEngine | None = None
        self._corpus_sha: str | None = None
        self._index_was_cached = False

    def invalidate(self) -> None:
        self._engine = None
        self._corpus_sha = None

    @property
    def index_was_cached(self) -> bool:
        return self._index_was_cached

    def engine(self, force_rebuild: bool = False) -> RecommendEngine:
        """Return the engine for the configured corpus, building on demand.

        The index cache next to the corpus file is keyed by content hashes,
        so a corpus or stop-list edit on disk can never serve stale vectors.
        """
        corpus_path = Path(self.config.corpus)
        if not corpus_path.is_file():
            raise IoFailure(f"corpus file {corpus_path} does not exist; run ingest first")
        corpus_sha = file_sha256(corpus_path)
        if self._engine is not None and corpus_sha == self._corpus_sha and not force_rebuild:
            return self._engine

        records = load_corpus(corpus_path)
        stoplist = load_stoplist(self.config)
        stop_sha = stoplist_sha(self.config)
        cache_file = index_cache_path(corpus_path)

        index = None
        self._index_was_cached = False
        if not self.config.no_cache and not force_rebuild:
            index = load_index_cache(cache_file, corpus_sha, stop_sha)
            self._index_was_cached = index is not None
        if index is None:
            index = build_index(records, stoplist)
            if not self.config.no_cache:
                save_index_cache(index, cache_file, corpus_sha, stop_sha)

        self._engine = RecommendEngine(records, stoplist, index=index)
        self._corpus_sha = corpus_sha
        return self._engine
