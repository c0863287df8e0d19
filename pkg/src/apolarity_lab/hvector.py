"""The h-vector: graded dimensions (h_0, ..., h_e) of an artinian level algebra."""

from __future__ import annotations

from .errors import InvalidParameter


class HVector(tuple):
    """Immutable sequence of graded dimensions with h_0 = 1 and h_e > 0.

    Subclasses tuple, so it compares equal to plain tuples with the same
    entries and can be used anywhere a sequence of ints is expected.
    """

    def __new__(cls, entries):
        entries = tuple(int(v) for v in entries)
        if not entries:
            raise InvalidParameter("h-vector must be nonempty")
        if entries[0] != 1:
            raise InvalidParameter(f"h_0 must be 1, got {entries[0]}")
        if any(v < 0 for v in entries):
            raise InvalidParameter("h-vector entries must be non-negative")
        if entries[-1] <= 0:
            raise InvalidParameter("top entry h_e must be positive")
        return super().__new__(cls, entries)

    @property
    def socle_degree(self) -> int:
        return len(self) - 1

    @classmethod
    def parse(cls, text: str) -> "HVector":
        """Parse a comma-separated list like '1,4,9,13'."""
        try:
            entries = [int(part.strip()) for part in text.split(",")]
        except ValueError as exc:
            raise InvalidParameter(f"cannot parse h-vector {text!r}: {exc}") from exc
        return cls(entries)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"HVector(({', '.join(str(v) for v in self)}))"
