# -*- coding: utf-8 -*-
"""
Graded Bookkeeping
==================
Parity labels and graded dimensions (m|n).

  - Parity       → ℤ₂ degree of a homogeneous element, added mod 2
  - GradedDim    → (even | odd) pair, componentwise arithmetic
  - sign()       → the Koszul sign (−1)^{|a||b|}
"""

import enum
from dataclasses import dataclass

from ..exceptions import NegativeDim, ParseError


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    @property
    def label(self):
        return "even" if self is Parity.EVEN else "odd"

    @classmethod
    def from_label(cls, text):
        key = str(text).strip().lower()
        if key in ("even", "0"):
            return cls.EVEN
        if key in ("odd", "1"):
            return cls.ODD
        raise ParseError(f"Unknown parity {text!r}")


def sign(a, b):
    """(−1)^{|a||b|} for parities a, b."""
    return -1 if (a == Parity.ODD and b == Parity.ODD) else 1


@dataclass(frozen=True)
class GradedDim:
    even: int = 0
    odd: int = 0

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise NegativeDim(f"Negative graded dimension ({self.even}|{self.odd})")

    @property
    def total(self):
        return self.even + self.odd

    def __getitem__(self, parity):
        return self.odd if parity == Parity.ODD else self.even

    def __add__(self, other):
        return GradedDim(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other):
        return GradedDim(self.even - other.even, self.odd - other.odd)

    def __mul__(self, other):
        """Graded tensor product of plain graded vector spaces."""
        if isinstance(other, int):
            return GradedDim(self.even * other, self.odd * other)
        return GradedDim(
            self.even * other.even + self.odd * other.odd,
            self.even * other.odd + self.odd * other.even,
        )

    __rmul__ = __mul__

    def __le__(self, other):
        return self.even <= other.even and self.odd <= other.odd

    def is_zero(self):
        return self.even == 0 and self.odd == 0

    def as_tuple(self):
        return (self.even, self.odd)

    def __str__(self):
        return f"({self.even}|{self.odd})"

    @classmethod
    def parse(cls, text):
        body = str(text).strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        parts = body.split("|")
        if len(parts) != 2:
            raise ParseError(f"Graded dimension must look like (m|n), got {text!r}")
        try:
            return cls(int(parts[0]), int(parts[1]))
        except ValueError as e:
            raise ParseError(f"Graded dimension {text!r}: {e}") from e


ZERO = GradedDim(0, 0)
