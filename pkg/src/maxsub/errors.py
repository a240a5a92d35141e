class InputError(ValueError):
    """Rejected input: a precondition of the operation does not hold."""


class ResourceBoundError(RuntimeError):
    """A configured size bound would be exceeded."""

    def __init__(self, what, value, bound):
        super().__init__(f"{what} = {value} exceeds the bound {bound}")
        self.what = what
        self.value = value
        self.bound = bound


class ConsistencyError(AssertionError):
    """Embedded data failed its self-check."""
