"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the range where an operation is defined."""


class InexpressibleProduct(ValueError):
    """A tensor product of two non-line-bundle factors was requested.

    Products such as Om^p (x) Om^q on one projective factor are not atoms,
    so they have no representation in the sheaf algebra.
    """


class SheafSyntaxError(ValueError):
    """Malformed sheaf expression. ``offset`` is the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
