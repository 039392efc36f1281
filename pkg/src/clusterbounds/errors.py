"""Exception types shared across the package."""


class ClusterBoundsError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(ClusterBoundsError, ValueError):
    """Bad input: dimension mismatch, malformed file, invalid parameter."""


class CommutativityError(ValidationError):
    """A pair of stabilizer generators anticommutes."""

    def __init__(self, i: int, j: int):
        super().__init__(f"generator rows {i} and {j} anticommute")
        self.rows = (i, j)


class ResourceCapError(ClusterBoundsError):
    """A configured memory or work budget would be exceeded."""
