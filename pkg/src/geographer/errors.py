"""Shared error types."""


class ConsistencyError(RuntimeError):
    """Two independent routes to the same invariant disagreed.

    This is a tripwire for internal bugs, never a user input error: the
    pipeline computes key invariants both from assembled pairing data and
    from closed formulas, and refuses to emit certificates when they differ.
    """


class InadmissibleError(ValueError):
    """A requested triple fails the admissibility predicate."""
