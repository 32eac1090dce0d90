"""Exception types shared across the library."""


class HopfGaloisError(Exception):
    """Base class for all library errors."""


class DegreeMismatchError(HopfGaloisError):
    """Permutations of different degrees were combined."""


class CapExceededError(HopfGaloisError):
    """A closure grew past its element cap (mis-sized search, not a bug)."""


class BoundExceededError(HopfGaloisError):
    """An enumeration was attempted outside its configured bounds."""


class PreconditionError(HopfGaloisError):
    """An operation was called on input outside its stated domain."""


class UnsupportedOrderError(HopfGaloisError):
    """No complete catalog is available for the requested group order."""


class BudgetExceededError(HopfGaloisError):
    """An exhaustive count ran out of its time budget; no count produced."""


class CountingBugError(HopfGaloisError):
    """An internal counting identity failed; signals an implementation bug."""


class SpecSyntaxError(HopfGaloisError):
    """Group-spec text failed to parse."""

    def __init__(self, message, position, expected=None):
        self.position = position
        self.expected = expected
        detail = f"at position {position}: {message}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class SpecSemanticError(HopfGaloisError):
    """Group-spec text parsed but carries invalid parameters."""
