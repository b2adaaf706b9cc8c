"""Exception types shared across the package.

Every error carries a stable machine-readable ``code``, the HTTP status the
service layer responds with, and the process exit code the CLI maps it to
(1 = usage/config problem, 2 = data problem).
"""

from __future__ import annotations

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class PaperRecError(Exception):
    code = "error"
    http_status = 422
    exit_code = EXIT_DATA

    def payload(self) -> dict:
        """Structured form used by the service layer's error responses."""
        return {"error": self.code, "message": str(self), "exit_code": self.exit_code}


class InvalidConfig(PaperRecError):
    code = "invalid_config"
    http_status = 400
    exit_code = EXIT_USAGE


class IoFailure(PaperRecError):
    code = "io_failure"
    http_status = 400
    exit_code = EXIT_USAGE


class MalformedPage(PaperRecError):
    code = "malformed_page"


class IngestAborted(PaperRecError):
    """Raised when the fraction of unparseable pages exceeds the threshold."""

    code = "ingest_aborted"

    def __init__(self, message: str, first_error: str, pages: int, failed: int):
        super().__init__(message)
        self.first_error = first_error
        self.pages = pages
        self.failed = failed

    def payload(self) -> dict:
        data = super().payload()
        data.update(first_error=self.first_error, pages=self.pages, failed=self.failed)
        return data


class EmptyName(PaperRecError):
    code = "empty_name"
    http_status = 400
    exit_code = EXIT_USAGE


class CorruptRecord(PaperRecError):
    code = "corrupt_record"

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line

    def payload(self) -> dict:
        data = super().payload()
        data["line"] = self.line
        return data


class EmptyVocabulary(PaperRecError):
    code = "empty_vocabulary"


class VocabularyMismatch(PaperRecError):
    code = "vocabulary_mismatch"


class NoUserPapers(PaperRecError):
    code = "no_user_papers"


class DegenerateCorpus(PaperRecError):
    code = "degenerate_corpus"


class UnknownUser(PaperRecError):
    code = "unknown_user"
    http_status = 404

    def __init__(self, message: str, suggestions: list[str] | None = None):
        super().__init__(message)
        self.suggestions = suggestions or []

    def payload(self) -> dict:
        data = super().payload()
        data["suggestions"] = self.suggestions
        return data


class AmbiguousAuthor(PaperRecError):
    code = "ambiguous_author"
    http_status = 409

    def __init__(self, message: str, candidates: list[str]):
        super().__init__(message)
        self.candidates = candidates

    def payload(self) -> dict:
        data = super().payload()
        data["candidates"] = self.candidates
        return data


class InsufficientAuthors(PaperRecError):
    code = "insufficient_authors"
    http_status = 409

    def __init__(self, area: str, wanted: int, available: int):
        super().__init__(
            f"area {area!r} has {available} qualifying authors, need {wanted}"
        )
        self.area = area
        self.wanted = wanted
        self.available = available

    def payload(self) -> dict:
        data = super().payload()
        data["area"] = self.area
        return data
