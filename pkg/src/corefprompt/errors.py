"""Exception types shared across the toolkit."""


class CorefPromptError(Exception):
    """Base class for all toolkit errors."""


class ParseError(CorefPromptError):
    """Malformed corpus input; carries the document and line it came from."""

    def __init__(self, message, doc_id=None, line=None):
        self.doc_id = doc_id
        self.line = line
        where = []
        if doc_id is not None:
            where.append(f"doc {doc_id!r}")
        if line is not None:
            where.append(f"line {line}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class DialectError(CorefPromptError):
    """Input does not match the declared file dialect."""


class CrossingSpanError(CorefPromptError):
    """Two mention spans partially overlap (neither nested nor disjoint)."""


class MissingGoldError(CorefPromptError):
    """An operation requiring gold annotations ran on an unannotated document."""


class BackendError(CorefPromptError):
    """Completion backend failure (after retries, for retriable transports)."""

    def __init__(self, message, retriable=False):
        super().__init__(message)
        self.retriable = retriable


class ConfigError(CorefPromptError):
    """Bad run or backend configuration, including HTTP 4xx responses."""


class BudgetExceededError(CorefPromptError):
    """Prompt too large for the configured token budget; the document is skipped."""


class DocumentMissingError(CorefPromptError):
    """An external mention file does not cover the requested document."""
