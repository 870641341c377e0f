"""Exception types shared across the package.

Every failure that a caller can provoke with in-contract but rejected data
raises a subclass of DomainError; the CLI maps these to exit code 1.
Programming errors (bad types, internal inconsistencies) stay ordinary
ValueError/AssertionError and are bugs, not domain outcomes.
"""


class DomainError(Exception):
    """Base class for rejections of mathematically inadmissible input."""


class GraphError(DomainError):
    """Malformed plumbing graph (disconnected, self-loop, bad genus...)."""


class IndefiniteLatticeError(DomainError):
    """Operation requires a negative definite intersection form."""

    def __init__(self, message: str = "indefinite lattice"):
        super().__init__(message)


class BoxTooLargeError(DomainError):
    """An exhaustive lattice-box scan would exceed the configured cap."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"box too large: {size} lattice points exceeds cap {cap}")


class BadVertexError(DomainError):
    """Gay-Mark construction requires a(v) <= -e(v) at every vertex."""

    def __init__(self, violators):
        self.violators = list(violators)
        super().__init__(f"bad vertices (valency exceeds -weight): {self.violators}")


class RelatorMismatchError(DomainError):
    """Substitution site does not act on homology like the replacement."""


class InconsistentInputsError(DomainError):
    """Numeric inputs that cannot come from a single consistent filling."""


class DecorationTooSmallError(DomainError):
    def __init__(self):
        super().__init__("decoration too small")


class EnumerationCapError(DomainError):
    """Backtracking enumeration exceeded the configured cap."""

    def __init__(self, cap: int, partial_count: int):
        self.cap = cap
        self.partial_count = partial_count
        super().__init__(
            f"enumeration cap {cap} exceeded ({partial_count} matrices found so far)"
        )
