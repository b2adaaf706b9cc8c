"""Token-level text preprocessing: tokenizer, stop-word filter, suffix stemmer.

The pipeline is deliberately simple and fully deterministic: lowercase,
split on non-alphanumerics, drop one-character tokens, filter a fixed
stop-word list, then strip a single trailing suffix out of ("ing", "ed",
"ly") when the remaining stem keeps at least three characters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..errors import InvalidConfig, IoFailure

# Letters or digits, Unicode-aware; underscore is a separator like punctuation.
_TOKEN_RE = re.compile(r"[^\W_]+")

_SUFFIXES = ("ing", "ed", "ly")
_MIN_STEM_LEN = 3


def tokenize(text: str) -> list[str]:
    """Split text into lowercase alphanumeric tokens of length >= 2, in order."""
    return [tok for tok in _TOKEN_RE.findall(text.lower()) if len(tok) >= 2]


def stem(token: str) -> str:
    """Strip at most one trailing suffix ("ing", "ed", "ly"), tried in that order.

    A suffix is only stripped when the remaining stem has at least three
    characters, so short words like "red" or "ring" pass through unchanged.
    """
    for suffix in _SUFFIXES:
        if token.endswith(suffix) and len(token) - len(suffix) >= _MIN_STEM_LEN:
            return token[: -len(suffix)]
    return token


@dataclass(frozen=True)
class Stoplist:
    """Immutable set of lowercase stop words."""

    words: frozenset[str]

    def __post_init__(self) -> None:
        for word in self.words:
            if not word or word != word.lower() or any(ch.isspace() for ch in word):
                raise InvalidConfig(f"stop word {word!r} must be lowercase with no whitespace")
        if "the" not in self.words or "of" not in self.words:
            raise InvalidConfig('stop-word list must contain at least "the" and "of"')

    def __contains__(self, token: str) -> bool:
        return token in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def from_file(cls, path: str | Path) -> "Stoplist":
        """Read a stop-word file: one word per line, '#' starts a comment line."""
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise IoFailure(f"cannot read stop-word list {path}: {exc}") from exc
        return cls.from_text(text)

    @classmethod
    def from_text(cls, text: str) -> "Stoplist":
        words = set()
        for line in text.splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                words.add(line)
        return cls(frozenset(words))

    @classmethod
    def default(cls) -> "Stoplist":
        """The 140-word list shipped with the package."""
        data = resources.files("paperrec.text").joinpath("data/stopwords.txt")
        return cls.from_text(data.read_text(encoding="utf-8"))


def remove_stopwords(tokens: list[str], stoplist: Stoplist) -> list[str]:
    """Order-preserving filter dropping every token present in the stop list."""
    return [tok for tok in tokens if tok not in stoplist]
