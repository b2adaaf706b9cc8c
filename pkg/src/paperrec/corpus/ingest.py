"""Ingestion runs: listing pages -> paper pages -> validated corpus records."""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import IngestAborted, InvalidConfig, IoFailure, MalformedPage
from .fetch import Fetcher, FixtureFetcher
from .records import PaperRecord, store_corpus
from .sites import SiteKind, extract_paper_links, parse_paper_page


@dataclass(frozen=True)
class IngestSummary:
    pages_parsed: int
    records_written: int
    malformed_skipped: int
    elapsed_seconds: float
    corpus: str


def _listing_page_urls(listing_paths: Sequence[str | Path], site: SiteKind) -> list[str]:
    urls: list[str] = []
    seen: set[str] = set()
    for listing_path in listing_paths:
        try:
            html_text = Path(listing_path).read_text(encoding="utf-8")
        except OSError as exc:
            raise IoFailure(f"cannot read listing {listing_path}: {exc}") from exc
        for url in extract_paper_links(html_text, site):
            if url not in seen:
                seen.add(url)
                urls.append(url)
    return urls


def run_ingest(
    site: SiteKind,
    venue: str,
    year: int,
    corpus_path: str | Path,
    listing_paths: Sequence[str | Path] = (),
    pages_dir: str | Path | None = None,
    fixture_root: str | Path | None = None,
    fetcher: Fetcher | None = None,
    venue_areas: dict[str, str] | None = None,
    append: bool = False,
    fail_threshold: float = 0.5,
) -> IngestSummary:
    """Parse paper pages and write validated records to the corpus file.

    Pages come either from listing files (their links are fetched through the
    fetch boundary, by default a fixture directory) or directly from a
    directory of saved paper pages. Unparseable pages are skipped and
    counted; the run aborts when their fraction exceeds ``fail_threshold``.
    """
    started = time.monotonic()
    pages: list[tuple[str, str]] = []  # (source name, html)

    if pages_dir is not None and listing_paths:
        raise InvalidConfig("pass either listing files or a pages directory, not both")
    if pages_dir is not None:
        pages_root = Path(pages_dir)
        if not pages_root.is_dir():
            raise IoFailure(f"pages directory {pages_root} does not exist")
        for page_path in sorted(pages_root.glob("*.html")):
            pages.append((page_path.name, page_path.read_text(encoding="utf-8")))
    elif listing_paths:
        if fetcher is None:
            if fixture_root is None:
                raise InvalidConfig("listing ingestion needs a fixture directory or a fetcher")
            fetcher = FixtureFetcher(fixture_root, site)
        for url in _listing_page_urls(listing_paths, site):
            pages.append((url, fetcher(url)))
    else:
        raise InvalidConfig("nothing to ingest: pass listing files or a pages directory")

    records: list[PaperRecord] = []
    failures: list[tuple[str, MalformedPage]] = []
    area = (venue_areas or {}).get(venue)
    for source, html_text in pages:
        try:
            record = parse_paper_page(html_text, site, venue=venue, year=year)
        except MalformedPage as exc:
            failures.append((source, exc))
            continue
        if area is not None:
            record = PaperRecord(
                id=record.id,
                title=record.title,
                authors=record.authors,
                keywords=record.keywords,
                abstract=record.abstract,
                venue=record.venue,
                year=record.year,
                area=area,
            )
        records.append(record)

    if pages and len(failures) / len(pages) > fail_threshold:
        source, first = failures[0]
        raise IngestAborted(
            f"{len(failures)} of {len(pages)} pages failed to parse "
            f"(threshold {fail_threshold:.0%}); first failure: {source}: {first}",
            first_error=f"{source}: {first}",
            pages=len(pages),
            failed=len(failures),
        )

    store_corpus(records, corpus_path, append=append)
    return IngestSummary(
        pages_parsed=len(pages),
        records_written=len(records),
        malformed_skipped=len(failures),
        elapsed_seconds=time.monotonic() - started,
        corpus=str(corpus_path),
    )
