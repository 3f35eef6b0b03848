class InvariantError(AssertionError):
    """An internal consistency check failed.  Indicates a bug, not bad input."""
