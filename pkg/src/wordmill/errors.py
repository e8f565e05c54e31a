"""Shared exception types."""


class WordmillError(Exception):
    """Base class for domain errors raised by this package."""


class NotInVocabularyError(WordmillError):
    """The word cannot be produced by the wheel system."""

    def __init__(self, word: str):
        super().__init__(f"not in vocabulary: {word!r}")
        self.word = word


class AmbiguousWordError(WordmillError):
    """The word is produced by more than one fragment tuple.

    ``parses`` holds every fragment-position tuple that concatenates to the
    word, in ascending index order.
    """

    def __init__(self, word: str, parses):
        self.word = word
        self.parses = tuple(parses)
        super().__init__(f"{len(self.parses)} parses for {word!r}")


class OutOfBoundsError(WordmillError):
    """A grille was placed partly outside its table."""


class FormatError(WordmillError):
    """A data file does not conform to its documented format."""
