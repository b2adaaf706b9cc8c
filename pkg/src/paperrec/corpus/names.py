"""Author name normalization and alias resolution.

The same researcher shows up under different surface forms across pages
("Smith, John A.", "John A. Smith", "J. Smith"). Normalization parses any
ordering of given/family name, middle name and suffix into a structured
AuthorName; alias resolution then merges initials-only forms into full names
when the co-author overlap supports it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import EmptyName

# Recognized generational suffixes, keyed by their dot-free lowercase form.
_SUFFIXES = {"jr": "Jr", "sr": "Sr", "ii": "II", "iii": "III", "iv": "IV"}


def _collapse_ws(text: str) -> str:
    return " ".join(text.split())


@dataclass(frozen=True)
class AuthorName:
    """Structured person name. ``raw`` keeps the original extracted string."""

    given: str
    family: str
    middle: str | None = None
    suffix: str | None = None
    raw: str = ""

    def __post_init__(self) -> None:
        if not self.family:
            raise EmptyName("family name must be non-empty")

    @property
    def canonical_key(self) -> str:
        """Lowercase "given middle family" with single spaces; suffix excluded."""
        parts = [p for p in (self.given, self.middle or "", self.family) if p]
        return " ".join(parts).lower()

    @property
    def display(self) -> str:
        """Original-case "Given Middle Family" form."""
        parts = [p for p in (self.given, self.middle or "", self.family) if p]
        return " ".join(parts)

    @property
    def given_is_initial(self) -> bool:
        g = self.given
        return (len(g) == 1 and g.isalpha()) or (len(g) == 2 and g[0].isalpha() and g[1] == ".")


@dataclass(frozen=True)
class AuthorId:
    """Resolved author identity: index into the author table plus display name."""

    id: int
    display: str


def _pop_suffix(tokens: list[str]) -> str | None:
    if len(tokens) > 1:
        stripped = tokens[-1].rstrip(".").lower()
        if stripped in _SUFFIXES:
            tokens.pop()
            return _SUFFIXES[stripped]
    return None


def normalize_author_name(raw: str) -> AuthorName:
    """Parse a raw author string in either name ordering.

    Recognized forms: "Family, Given [Middle] [, Suffix]" and
    "Given [Middle] Family [Suffix]". A single remaining token is treated as
    a family name with empty given name.
    """
    text = _collapse_ws(raw)
    if not text:
        raise EmptyName("author name is empty")

    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise EmptyName(f"author name {raw!r} has no name tokens")
    suffix = None
    stripped = parts[-1].rstrip(".").lower()
    if len(parts) > 1 and stripped in _SUFFIXES:
        suffix = _SUFFIXES[stripped]
        parts = parts[:-1]

    if len(parts) >= 2:
        # Comma ordering: family first, the rest is "Given [Middle ...]".
        family = parts[0]
        rest = " ".join(parts[1:]).split()
        if suffix is None:
            suffix = _pop_suffix(rest)
        given = rest[0] if rest else ""
        middle = " ".join(rest[1:]) or None
        if not given:
            return AuthorName(given="", family=family, suffix=suffix, raw=raw)
        return AuthorName(given=given, family=family, middle=middle, suffix=suffix, raw=raw)

    tokens = parts[0].split()
    if suffix is None:
        suffix = _pop_suffix(tokens)
    if len(tokens) == 1:
        return AuthorName(given="", family=tokens[0], suffix=suffix, raw=raw)
    given = tokens[0]
    family = tokens[-1]
    middle = " ".join(tokens[1:-1]) or None
    return AuthorName(given=given, family=family, middle=middle, suffix=suffix, raw=raw)


@dataclass
class AuthorTable:
    """Post-resolution author identities, ids dense from 0."""

    entries: list[AuthorId]
    names: dict[int, AuthorName]  # representative structured name per identity

    def __len__(self) -> int:
        return len(self.entries)

    def by_id(self, author_id: int) -> AuthorId:
        return self.entries[author_id]

    def displays(self) -> list[str]:
        return [entry.display for entry in self.entries]


def resolve_author_aliases(records: Sequence) -> tuple[dict[str, AuthorId], AuthorTable]:
    """Merge initials-only names into full names backed by co-author evidence.

    An initials-only name merges into a full name when all three hold: same
    family name, the initial matches the full given name's first letter, and
    the two names share at least one co-author (a third author appearing on a
    paper of each). When two or more full names qualify, the merge is refused
    and the initials form keeps its own identity: a false merge would corrupt
    every downstream preference score, a false split merely dilutes them.

    Returns the alias map (canonical key -> AuthorId) and the author table.
    Output is deterministic for a fixed record ordering, and resolving an
    already-resolved corpus is the identity.
    """
    order: list[str] = []  # canonical keys, first-occurrence order
    rep: dict[str, AuthorName] = {}
    papers_of: dict[str, list[str]] = {}
    coauthors_of: dict[str, set[str]] = {}

    for record in records:
        keys = [a.canonical_key for a in record.authors]
        for author in record.authors:
            key = author.canonical_key
            if key not in rep:
                rep[key] = author
                order.append(key)
                papers_of[key] = []
                coauthors_of[key] = set()
            papers_of[key].append(record.id)
            coauthors_of[key].update(k for k in keys if k != key)

    merged: dict[str, str] = {}  # initials key -> full key
    full_keys = [k for k in order if rep[k].given and not rep[k].given_is_initial]
    for key in order:
        name = rep[key]
        if not name.given_is_initial:
            continue
        initial = name.given[0].lower()
        candidates = []
        for full in full_keys:
            full_name = rep[full]
            if full_name.family.lower() != name.family.lower():
                continue
            if full_name.given[0].lower() != initial:
                continue
            shared = (coauthors_of[key] - {full}) & (coauthors_of[full] - {key})
            if shared:
                candidates.append(full)
        if len(candidates) == 1:
            merged[key] = candidates[0]

    entries: list[AuthorId] = []
    names: dict[int, AuthorName] = {}
    id_of_key: dict[str, int] = {}
    for key in order:
        if key in merged:
            continue
        author_id = len(entries)
        id_of_key[key] = author_id
        entries.append(AuthorId(id=author_id, display=rep[key].display))
        names[author_id] = rep[key]

    alias_map: dict[str, AuthorId] = {}
    for key in order:
        target = merged.get(key, key)
        alias_map[key] = entries[id_of_key[target]]
    return alias_map, AuthorTable(entries=entries, names=names)
