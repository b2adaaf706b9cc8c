"""Per-site HTML extraction via regular expression matching.

Both supported digital libraries expose listing pages (one URL per paper) and
per-paper detail pages. The extraction regexes are data, not code: they live
in ``data/site_patterns.json`` so a markup drift is a one-file fix. ACM-style
listings carry every paper of a proceedings on a single page; IEEE-style
listings are paginated, so callers iterate listing pages there.
"""

from __future__ import annotations

import html
import json
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources

from ..errors import MalformedPage
from .names import AuthorName, normalize_author_name
from .records import PaperRecord


class SiteKind(str, Enum):
    IEEE_XPLORE = "ieee_xplore"
    ACM_DL = "acm_dl"


@dataclass(frozen=True)
class SitePatterns:
    listing_signature: re.Pattern
    paper_link: re.Pattern
    title: re.Pattern
    authors_block: re.Pattern
    author_item: re.Pattern
    keywords_block: re.Pattern
    keyword_item: re.Pattern
    abstract: re.Pattern


@lru_cache(maxsize=None)
def site_patterns(site: SiteKind) -> SitePatterns:
    data = resources.files("paperrec.corpus").joinpath("data/site_patterns.json")
    table = json.loads(data.read_text(encoding="utf-8"))
    raw = table[site.value]
    return SitePatterns(**{name: re.compile(pattern, re.S) for name, pattern in raw.items()})


def _clean_fragment(fragment: str) -> str:
    """Strip tags, unescape entities, collapse whitespace."""
    text = re.sub(r"<[^>]+>", " ", fragment)
    return " ".join(html.unescape(text).split())


def extract_paper_links(html_text: str, site: SiteKind) -> list[str]:
    """Pull per-paper detail URLs out of a listing page, in page order.

    Duplicate URLs keep their first occurrence. A page that matches no link
    and lacks the site's listing signature is rejected as malformed; a
    recognizable listing with no entries yields an empty list.
    """
    patterns = site_patterns(site)
    links: list[str] = []
    seen: set[str] = set()
    for match in patterns.paper_link.finditer(html_text):
        url = html.unescape(match.group(1)).strip()
        if url and url not in seen:
            seen.add(url)
            links.append(url)
    if not links and not patterns.listing_signature.search(html_text):
        raise MalformedPage(f"page is not a recognizable {site.value} listing")
    return links


def parse_paper_page(html_text: str, site: SiteKind, venue: str, year: int) -> PaperRecord:
    """Extract one paper's fields from its detail page.

    Title and author block are mandatory; keywords and abstract fall back to
    empty values when their sections are absent.
    """
    patterns = site_patterns(site)

    title_match = patterns.title.search(html_text)
    title = _clean_fragment(title_match.group(1)) if title_match else ""
    if not title:
        raise MalformedPage(f"cannot locate title on {site.value} page")

    authors_match = patterns.authors_block.search(html_text)
    if not authors_match:
        raise MalformedPage(f"cannot locate author block on {site.value} page")
    authors: list[AuthorName] = []
    for item in patterns.author_item.finditer(authors_match.group(1)):
        raw_name = _clean_fragment(item.group(1))
        if raw_name:
            authors.append(normalize_author_name(raw_name))
    if not authors:
        raise MalformedPage(f"author block on {site.value} page has no names")

    keywords: list[str] = []
    keywords_match = patterns.keywords_block.search(html_text)
    if keywords_match:
        for item in patterns.keyword_item.finditer(keywords_match.group(1)):
            keyword = _clean_fragment(item.group(1))
            if keyword:
                keywords.append(keyword)

    abstract_match = patterns.abstract.search(html_text)
    abstract = _clean_fragment(abstract_match.group(1)) if abstract_match else ""

    return PaperRecord.build(
        title=title,
        authors=authors,
        keywords=keywords,
        abstract=abstract,
        venue=venue,
        year=year,
    )
