"""Request and response bodies for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: Literal["ok"] = "ok"
    version: str


class IngestRequest(BaseModel):
    site: Literal["ieee_xplore", "acm_dl"]
    venue: str
    year: int
    listings: list[str] = Field(default_factory=list)
    pages_dir: Optional[str] = None
    fixtures: Optional[str] = None
    venue_areas: Optional[str] = None
    append: bool = False
    fail_threshold: float = 0.5


class IngestResponse(BaseModel):
    pages_parsed: int
    records_written: int
    malformed_skipped: int
    elapsed_seconds: float
    corpus: str


class IndexRequest(BaseModel):
    force: bool = False
    dump_terms: bool = False


class IndexResponse(BaseModel):
    papers: int
    vocabulary_size: int
    pairwise_max: float
    cached: bool
    elapsed_seconds: float
    terms: Optional[list[str]] = None


class RecommendRequest(BaseModel):
    author: str
    n: Optional[int] = Field(default=None, ge=1)
    strategy: Literal["naive", "itemcf"] = "naive"


class RecommendationItem(BaseModel):
    rank: int
    paper: str
    score: float
    centroid: str
    title: str
    basis: Optional[str] = None


class RecommendResponse(BaseModel):
    author: str
    strategy: str
    items: list[RecommendationItem]


class EvaluateRequest(BaseModel):
    per_area: int = Field(ge=1)
    top_n: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = None
    strategy: Literal["naive", "itemcf"] = "naive"


class EvaluateResponse(BaseModel):
    table: str
    machine: list[str]
    row_areas: list[str]
    col_areas: list[str]
    counts: dict[str, dict[str, int]]
    per_area_accuracy: dict[str, float]
    overall_accuracy: float
    top_n: int
    seed: int
    strategy: str


class SynthRequest(BaseModel):
    areas: int = Field(ge=1)
    papers_per_area: int = Field(ge=1)
    authors_per_area: int = Field(ge=1)
    vocab_per_topic: int = Field(default=60, ge=1)
    overlap: float = Field(default=0.0, ge=0.0, lt=1.0)
    seed: Optional[int] = None
    corpus: Optional[str] = None
    append: bool = False


class SynthResponse(BaseModel):
    records_written: int
    corpus: str


class StatsResponse(BaseModel):
    papers: int
    authors: int
    vocabulary_size: int
    pairwise_max: float
    rating_entries: int
    areas: dict[str, int]
