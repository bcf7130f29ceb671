"""Exception types shared across the package."""


class SizeError(ValueError):
    """An enumeration or truncation cap was exceeded."""


class GrammarSyntaxError(ValueError):
    """The grammar DSL text could not be parsed."""
