"""Shared exception types."""


class CartanBracketError(Exception):
    """Raised when a structure constant is requested for opposite roots.

    The bracket of root vectors for a and -a is the dual root h_a, a Cartan
    element, not a multiple of another root vector.  There is no structure
    constant to return, and treating the case as 0 would silently break the
    Jacobi oracle, so callers must handle it explicitly.
    """


class InternalConsistencyError(RuntimeError):
    """An exact-arithmetic identity that must hold by construction failed.

    Examples: a recursion produced a non-integral structure constant, or a
    generated root list does not have the classical cardinality.  Always a
    bug, never a data condition.
    """
