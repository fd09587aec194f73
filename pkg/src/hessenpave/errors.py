"""Exceptions shared across the package.

Validation problems (bad user input, out-of-range ranks, malformed text
encodings) raise plain ``ValueError``.  ``ConsistencyError`` is reserved for
failures of internal cross-checks: two independent computations of the same
quantity disagreeing, a constructive solve contradicting a combinatorial
prediction, and the like.  A ``ConsistencyError`` always signals a bug, never
bad input.
"""


class ConsistencyError(RuntimeError):
    """Two routes to the same mathematical fact disagreed."""
