"""Exceptions shared across modules."""


class StateBoundExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured state bound."""

    def __init__(self, needed: int, bound: int, what: str):
        super().__init__(f"{what} needs {needed} states, exceeding the bound {bound}")
        self.needed = needed
        self.bound = bound
