class PipelineError(Exception):
    """Base class for input/data errors surfaced to CLI and service callers."""


class ConlluError(PipelineError):
    """Malformed CoNLL-U input. Carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PhraseFileError(PipelineError):
    """Malformed phrase-list TSV."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LabelFileError(PipelineError):
    """Malformed two-column labelled-corpus file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AlignmentError(PipelineError):
    """Predicted and gold corpora disagree on sentence ids or token counts."""


class FixtureError(PipelineError):
    """Shipped reference fixtures are internally inconsistent."""
