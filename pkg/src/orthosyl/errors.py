"""Exception hierarchy shared by all orthosyl modules.

Every data-level failure raises a subclass of :class:`OrthosylError` so the
CLI can map them uniformly to exit status 1.
"""


class OrthosylError(Exception):
    """Base class for all toolkit errors."""


class UnsupportedScriptError(OrthosylError):
    """Operation requested for a script the toolkit does not support."""


class MixedScriptError(OrthosylError):
    """A single word contains letters from two different supported scripts."""


class EmptyInputError(OrthosylError):
    """An operation that requires a nonempty word/corpus received an empty one."""


class MarkerCollisionError(OrthosylError):
    """Input text contains the word-boundary marker character."""


class MalformedStreamError(OrthosylError):
    """A token stream violates the boundary-marker invariants."""


class AlignmentError(OrthosylError):
    """Parallel inputs have mismatched line counts or missing references."""


class UndefinedCorrelationError(OrthosylError):
    """Pearson correlation requested for a constant (zero-variance) sequence."""


class ParameterError(OrthosylError):
    """A metric parameter is outside its legal range."""


class DegenerateCorpusError(OrthosylError):
    """A corpus statistic is undefined for this corpus (e.g. zero denominator)."""


class SplitSizeError(OrthosylError):
    """Requested split sizes exceed the corpus length."""


class CorpusDecodeError(OrthosylError):
    """Corpus file is not valid UTF-8."""

    def __init__(self, message: str, byte_offset: int):
        super().__init__(message)
        self.byte_offset = byte_offset


class LexiconFormatError(OrthosylError):
    """A morph lexicon file entry is malformed or inconsistent."""
