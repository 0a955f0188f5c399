"""Exception types shared across the library."""


class CartlynError(Exception):
    """Base class for all library errors."""


class EmptyInputError(CartlynError, ValueError):
    """Raised when a word or number sequence has no elements."""


class MalformedIntegerError(CartlynError, ValueError):
    """Raised when an integer token cannot be parsed as signed 64-bit decimal."""


class InconsistentTreeError(CartlynError, ValueError):
    """Raised when a position tree violates its structural invariants."""


class NotAPermutationError(CartlynError, ValueError):
    """Raised when a table expected to be a permutation of 0..n-1 is not."""


class RankMismatchError(CartlynError, ValueError):
    """Raised when a rank table does not fit the word it is used with."""


class NotLyndonError(CartlynError, ValueError):
    """Raised when an operation requires a Lyndon word but the input is not one."""


class TableMismatchError(CartlynError, ValueError):
    """Raised when a precomputed table does not fit the word it is used with."""


class OutOfRangeError(CartlynError, IndexError):
    """Raised when a query position lies outside the indexed word."""


class IndexMismatchError(CartlynError, ValueError):
    """Raised when a preprocessed index was built for different input."""


class SingleLeafError(CartlynError, ValueError):
    """Raised when a tree projection needs internal nodes but there are none."""
