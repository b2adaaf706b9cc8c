"""FastAPI application exposing the recommender over HTTP."""

from __future__ import annotations

import time

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..corpus.records import load_venue_areas, store_corpus
from ..corpus.sites import SiteKind
from ..errors import PaperRecError
from ..evalharness.classify import run_classification_eval
from ..evalharness.synthetic import generate_synthetic_corpus
from ..corpus.ingest import run_ingest
from .schemas import (
    EvaluateRequest,
    EvaluateResponse,
    HealthResponse,
    IndexRequest,
    IndexResponse,
    IngestRequest,
    IngestResponse,
    RecommendRequest,
    RecommendResponse,
    RecommendationItem,
    StatsResponse,
    SynthRequest,
    SynthResponse,
)
from .state import ServiceConfig, ServiceState


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    state = ServiceState(config or ServiceConfig())
    app = FastAPI(title="paperrec", version=__version__)
    app.state.service = state

    @app.exception_handler(PaperRecError)
    async def _handle_domain_error(_request: Request, exc: PaperRecError) -> JSONResponse:
        return JSONResponse(status_code=exc.http_status, content=exc.payload())

    @app.get("/health", response_model=HealthResponse)
    async def health() -> HealthResponse:
        return HealthResponse(version=__version__)

    @app.post("/ingest", response_model=IngestResponse)
    async def ingest(req: IngestRequest) -> IngestResponse:
        areas_path = req.venue_areas or state.config.venue_areas
        summary = run_ingest(
            site=SiteKind(req.site),
            venue=req.venue,
            year=req.year,
            corpus_path=state.config.corpus,
            listing_paths=req.listings,
            pages_dir=req.pages_dir,
            fixture_root=req.fixtures or state.config.fixtures,
            venue_areas=load_venue_areas(areas_path) if areas_path else None,
            append=req.append,
            fail_threshold=req.fail_threshold,
        )
        state.invalidate()
        return IngestResponse(
            pages_parsed=summary.pages_parsed,
            records_written=summary.records_written,
            malformed_skipped=summary.malformed_skipped,
            elapsed_seconds=summary.elapsed_seconds,
            corpus=str(summary.corpus),
        )

    @app.post("/index", response_model=IndexResponse)
    async def index(req: IndexRequest) -> IndexResponse:
        started = time.monotonic()
        engine = state.engine(force_rebuild=req.force)
        return IndexResponse(
            papers=len(engine.records),
            vocabulary_size=len(engine.index.vocabulary),
            pairwise_max=engine.index.pairwise_max,
            cached=state.index_was_cached,
            elapsed_seconds=time.monotonic() - started,
            terms=list(engine.index.vocabulary.dump_lines()) if req.dump_terms else None,
        )

    @app.post("/recommend", response_model=RecommendResponse)
    async def recommend(req: RecommendRequest) -> RecommendResponse:
        engine = state.engine()
        author = engine.lookup_author(req.author)
        n = req.n if req.n is not None else state.config.top_n
        recs = engine.recommend(author, n, strategy=req.strategy)
        items = [
            RecommendationItem(
                rank=rank,
                paper=rec.paper,
                score=rec.score,
                centroid=rec.centroid,
                title=engine.records_by_id[rec.paper].title,
                basis=rec.basis,
            )
            for rank, rec in enumerate(recs, start=1)
        ]
        return RecommendResponse(author=author.display, strategy=req.strategy, items=items)

    @app.post("/evaluate", response_model=EvaluateResponse)
    async def evaluate(req: EvaluateRequest) -> EvaluateResponse:
        engine = state.engine()
        report = run_classification_eval(
            engine,
            per_area=req.per_area,
            top_n=req.top_n if req.top_n is not None else state.config.top_n,
            seed=req.seed if req.seed is not None else state.config.seed,
            strategy=req.strategy,
        )
        return EvaluateResponse(
            table=report.render_table(),
            machine=report.machine_lines(),
            row_areas=list(report.row_areas),
            col_areas=list(report.col_areas),
            counts=report.counts,
            per_area_accuracy=report.per_area_accuracy,
            overall_accuracy=report.overall_accuracy,
            top_n=report.top_n,
            seed=report.seed,
            strategy=report.strategy,
        )

    @app.post("/synth", response_model=SynthResponse)
    async def synth(req: SynthRequest) -> SynthResponse:
        records = generate_synthetic_corpus(
            areas=req.areas,
            papers_per_area=req.papers_per_area,
            authors_per_area=req.authors_per_area,
            vocab_per_topic=req.vocab_per_topic,
            overlap=req.overlap,
            seed=req.seed if req.seed is not None else state.config.seed,
        )
        target = req.corpus or state.config.corpus
        store_corpus(records, target, append=req.append)
        state.invalidate()
        return SynthResponse(records_written=len(records), corpus=str(target))

    @app.get("/stats", response_model=StatsResponse)
    async def stats() -> StatsResponse:
        return StatsResponse(**state.engine().stats())

    return app
