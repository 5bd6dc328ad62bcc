"""Exceptions shared across the package."""


class CapExceededError(ValueError):
    """A size/degree cap was exceeded; the message names the cap."""


class WordParseError(ValueError):
    """A word or measure specification could not be parsed."""
