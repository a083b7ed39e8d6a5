class PreconditionError(ValueError):
    """A mathematical precondition of an operation does not hold for the input."""
