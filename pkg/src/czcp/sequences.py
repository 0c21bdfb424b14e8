"""Binary sequences over {+1, -1}, sequence pairs, and elementary transforms.

Sequences are displayed and parsed in the usual '+'/'-' notation (one
character per element). All arithmetic downstream is exact integer
arithmetic; nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class SequenceFormatError(ValueError):
    """Malformed '+'/'-' text. Carries the offending position when known."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class BinarySequence:
    """Immutable fixed-length vector with entries in {+1, -1}."""

    __slots__ = ("_values",)

    def __init__(self, values):
        arr = np.asarray(values, dtype=np.int8)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a binary sequence needs at least one element")
        if not np.all(np.abs(arr) == 1):
            raise ValueError("elements must be +1 or -1")
        arr.flags.writeable = False
        self._values = arr

    @classmethod
    def from_text(cls, text):
        return parse_sequence(text)

    @property
    def values(self):
        """Read-only int8 array view of the elements."""
        return self._values

    @property
    def n(self):
        return self._values.size

    def reverse(self):
        return BinarySequence(self._values[::-1])

    def negate(self):
        return BinarySequence(-self._values)

    def to_text(self):
        return "".join("+" if v > 0 else "-" for v in self._values)

    def __len__(self):
        return self._values.size

    def __iter__(self):
        return iter(int(v) for v in self._values)

    def __getitem__(self, i):
        return int(self._values[i])

    def __eq__(self, other):
        if not isinstance(other, BinarySequence):
            return NotImplemented
        return self._values.shape == other._values.shape and bool(
            np.all(self._values == other._values)
        )

    def __hash__(self):
        return hash((self._values.size, self._values.tobytes()))

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"BinarySequence({self.to_text()!r})"


def parse_sequence(text):
    """Parse a '+'/'-' string into a BinarySequence.

    Raises SequenceFormatError naming the first bad position.
    """
    stripped = text.rstrip("\n")
    if not stripped:
        raise SequenceFormatError("empty sequence", position=0)
    values = np.empty(len(stripped), dtype=np.int8)
    for i, ch in enumerate(stripped):
        if ch == "+":
            values[i] = 1
        elif ch == "-":
            values[i] = -1
        else:
            raise SequenceFormatError(
                f"invalid character {ch!r} at position {i} (expected '+' or '-')",
                position=i,
            )
    return BinarySequence(values)


def format_sequence(seq):
    """Inverse of parse_sequence."""
    return seq.to_text()


@dataclass(frozen=True)
class SequencePair:
    """Ordered pair of equal-length binary sequences."""

    first: BinarySequence
    second: BinarySequence

    def __post_init__(self):
        if self.first.n != self.second.n:
            raise ValueError(
                f"pair members have different lengths: "
                f"{self.first.n} vs {self.second.n}"
            )

    @classmethod
    def from_texts(cls, first, second):
        return cls(parse_sequence(first), parse_sequence(second))

    @property
    def n(self):
        return self.first.n

    def texts(self):
        return (self.first.to_text(), self.second.to_text())

    def __str__(self):
        return f"({self.first}, {self.second})"


def parse_pair(text):
    """Parse the two-line pair format (exactly two '+'/'-' lines)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise SequenceFormatError(
            f"a pair file holds exactly two sequence lines, got {len(lines)}"
        )
    return SequencePair(parse_sequence(lines[0]), parse_sequence(lines[1]))


def kronecker(blocks, fill):
    """Kronecker product: the left operand indexes blocks, the right fills them.

    `blocks` is a BinarySequence (or +-1 array); `fill` may carry entries in
    {-1, 0, +1} as produced by half-sum/half-difference vectors. Returns an
    int64 array of length len(blocks) * len(fill).
    """
    b = blocks.values if isinstance(blocks, BinarySequence) else np.asarray(blocks)
    x = np.asarray(fill)
    return np.kron(b.astype(np.int64), x.astype(np.int64))
