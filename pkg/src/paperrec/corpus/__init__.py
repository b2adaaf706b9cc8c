from .fetch import Fetcher, FixtureFetcher
from .ingest import IngestSummary, run_ingest
from .names import AuthorId, AuthorName, AuthorTable, normalize_author_name, resolve_author_aliases
from .records import PaperRecord, load_corpus, load_venue_areas, paper_id, store_corpus
from .sites import SiteKind, extract_paper_links, parse_paper_page

__all__ = [
    "Fetcher",
    "FixtureFetcher",
    "IngestSummary",
    "run_ingest",
    "AuthorId",
    "AuthorName",
    "AuthorTable",
    "normalize_author_name",
    "resolve_author_aliases",
    "PaperRecord",
    "load_corpus",
    "load_venue_areas",
    "paper_id",
    "store_corpus",
    "SiteKind",
    "extract_paper_links",
    "parse_paper_page",
]
