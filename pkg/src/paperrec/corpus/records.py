"""Paper records and the line-delimited corpus file format.

One UTF-8 JSON object per line, fixed key order
(id, title, authors, keywords, abstract, venue, year, area) so stored
corpora are byte-stable for a given record list.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import CorruptRecord, InvalidConfig, IoFailure
from .names import AuthorName

YEAR_MIN = 1900
YEAR_MAX = 2100


def paper_id(venue: str, year: int, title: str) -> str:
    """Stable 64-bit content hash of venue, year, and normalized title."""
    norm_title = " ".join(title.split()).lower()
    digest = hashlib.sha256(f"{venue}|{year}|{norm_title}".encode("utf-8")).hexdigest()
    return digest[:16]


@dataclass(frozen=True)
class PaperRecord:
    """One crawled paper. ``id`` is derived from venue, year, and title only."""

    id: str
    title: str
    authors: tuple[AuthorName, ...]
    keywords: tuple[str, ...]
    abstract: str
    venue: str
    year: int
    area: str | None = None

    def __post_init__(self) -> None:
        if not self.title.strip():
            raise InvalidConfig("title must be non-empty")
        if not self.authors:
            raise InvalidConfig("authors must be non-empty")
        if not (YEAR_MIN <= self.year <= YEAR_MAX):
            raise InvalidConfig(f"year {self.year} outside {YEAR_MIN}-{YEAR_MAX}")

    @classmethod
    def build(
        cls,
        title: str,
        authors: Iterable[AuthorName],
        keywords: Iterable[str] = (),
        abstract: str = "",
        venue: str = "",
        year: int = YEAR_MIN,
        area: str | None = None,
    ) -> "PaperRecord":
        return cls(
            id=paper_id(venue, year, title),
            title=title,
            authors=tuple(authors),
            keywords=tuple(keywords),
            abstract=abstract,
            venue=venue,
            year=year,
            area=area,
        )


def _author_to_obj(author: AuthorName) -> dict:
    return {
        "given": author.given,
        "middle": author.middle,
        "family": author.family,
        "suffix": author.suffix,
        "raw": author.raw,
    }


def record_to_line(record: PaperRecord) -> str:
    obj = {
        "id": record.id,
        "title": record.title,
        "authors": [_author_to_obj(a) for a in record.authors],
        "keywords": list(record.keywords),
        "abstract": record.abstract,
        "venue": record.venue,
        "year": record.year,
        "area": record.area,
    }
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


_RECORD_KEYS = ("id", "title", "authors", "keywords", "abstract", "venue", "year", "area")
_AUTHOR_KEYS = ("given", "middle", "family", "suffix", "raw")


def _require(condition: bool, message: str, line_no: int) -> None:
    if not condition:
        raise CorruptRecord(message, line=line_no)


def _author_from_obj(obj, line_no: int) -> AuthorName:
    _require(isinstance(obj, dict), "author entry is not an object", line_no)
    _require(set(obj) == set(_AUTHOR_KEYS), f"author keys must be {_AUTHOR_KEYS}", line_no)
    for key in ("given", "family", "raw"):
        _require(isinstance(obj[key], str), f"author field {key} must be a string", line_no)
    for key in ("middle", "suffix"):
        _require(obj[key] is None or isinstance(obj[key], str), f"author field {key} must be a string or null", line_no)
    _require(bool(obj["family"]), "author family name is empty", line_no)
    return AuthorName(
        given=obj["given"],
        family=obj["family"],
        middle=obj["middle"],
        suffix=obj["suffix"],
        raw=obj["raw"],
    )


def record_from_line(line: str, line_no: int) -> PaperRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorruptRecord(f"invalid JSON ({exc.msg})", line=line_no) from exc
    _require(isinstance(obj, dict), "record is not an object", line_no)
    _require(set(obj) == set(_RECORD_KEYS), f"record keys must be {_RECORD_KEYS}", line_no)
    for key in ("id", "title", "abstract", "venue"):
        _require(isinstance(obj[key], str), f"field {key} must be a string", line_no)
    _require(bool(obj["id"]), "field id is empty", line_no)
    _require(bool(obj["title"].strip()), "field title is empty", line_no)
    _require(isinstance(obj["year"], int) and not isinstance(obj["year"], bool), "field year must be an integer", line_no)
    _require(YEAR_MIN <= obj["year"] <= YEAR_MAX, f"year outside {YEAR_MIN}-{YEAR_MAX}", line_no)
    _require(obj["area"] is None or isinstance(obj["area"], str), "field area must be a string or null", line_no)
    _require(
        obj["id"] == paper_id(obj["venue"], obj["year"], obj["title"]),
        "field id does not match venue, year, and title",
        line_no,
    )
    _require(isinstance(obj["authors"], list) and obj["authors"], "field authors must be a non-empty list", line_no)
    _require(
        isinstance(obj["keywords"], list) and all(isinstance(k, str) for k in obj["keywords"]),
        "field keywords must be a list of strings",
        line_no,
    )
    authors = tuple(_author_from_obj(a, line_no) for a in obj["authors"])
    return PaperRecord(
        id=obj["id"],
        title=obj["title"],
        authors=authors,
        keywords=tuple(obj["keywords"]),
        abstract=obj["abstract"],
        venue=obj["venue"],
        year=obj["year"],
        area=obj["area"],
    )


def store_corpus(records: Sequence[PaperRecord], path: str | Path, append: bool = False) -> None:
    """Write records one JSON object per line; load(store(R)) == R."""
    mode = "a" if append else "w"
    try:
        with open(path, mode, encoding="utf-8", newline="\n") as fh:
            for record in records:
                fh.write(record_to_line(record))
                fh.write("\n")
    except OSError as exc:
        raise IoFailure(f"cannot write corpus {path}: {exc}") from exc


def load_corpus(path: str | Path) -> list[PaperRecord]:
    """Read a corpus file; aborts with CorruptRecord at the first bad line."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise IoFailure(f"cannot read corpus {path}: {exc}") from exc
    records = []
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        records.append(record_from_line(line, line_no))
    return records


def load_venue_areas(path: str | Path) -> dict[str, str]:
    """Read the venue-to-area table: one ``venue<TAB>area`` line per venue."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot read venue-area table {path}: {exc}") from exc
    table: dict[str, str] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" not in line:
            raise CorruptRecord("expected venue<TAB>area", line=line_no)
        venue, area = line.split("\t", 1)
        table[venue.strip()] = area.strip()
    return table
