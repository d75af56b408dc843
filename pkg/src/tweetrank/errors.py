"""Exception types shared across the package."""


class TweetrankError(Exception):
    """Base class for all tweetrank errors."""


class ValidationError(TweetrankError):
    """Input data violates a documented invariant."""


class EmptyCorpusError(ValidationError):
    """Preprocessing dropped every document; training is impossible."""


class ParseError(TweetrankError):
    """A data file could not be parsed; the message carries the location."""
