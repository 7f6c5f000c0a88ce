"""Shared exception types."""


class InvariantViolation(RuntimeError):
    """A proof-backed impossibility occurred; signals an implementation bug."""
