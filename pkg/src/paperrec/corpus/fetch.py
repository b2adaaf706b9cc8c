"""The fetch boundary: URL -> page text.

Everything above this boundary is pure; what "fetching" means is injected.
The default implementation resolves URLs against a local fixture directory
laid out as ``<root>/<site>/<name>.html``, which keeps ingestion
deterministic and network-free. A live crawler would drop in here.
"""

from __future__ import annotations

import posixpath
from pathlib import Path
from typing import Callable
from urllib.parse import urlsplit

from ..errors import IoFailure
from .sites import SiteKind

Fetcher = Callable[[str], str]


class FixtureFetcher:
    """Serve page text from saved HTML files keyed by URL basename."""

    def __init__(self, root: str | Path, site: SiteKind):
        self.root = Path(root)
        self.site = site

    def resolve(self, url: str) -> Path:
        name = posixpath.basename(urlsplit(url).path)
        return self.root / self.site.value / name

    def __call__(self, url: str) -> str:
        path = self.resolve(url)
        try:
            return path.read_text(encoding="utf-8")
        except OSError as exc:
            raise IoFailure(f"no fixture for {url} (looked at {path}): {exc}") from exc
