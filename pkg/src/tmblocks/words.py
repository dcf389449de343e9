"""Finite binary words, bit-packed into Python integers.

A word is stored as (length, bits) with the first letter in the most
significant bit, so comparing the ``bits`` fields of two equal-length words
is exactly lexicographic comparison. Words are immutable and hashable;
lengths of several thousand letters are routine since Python integers are
arbitrary precision.

Display convention: contiguous '0'/'1' characters, no separators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class BinaryWord:
    """An immutable word over {0,1}; ``bits`` holds the letters MSB-first."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative word length {self.length}")
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError(f"bits 0x{self.bits:x} out of range for length {self.length}")

    @classmethod
    def from_string(cls, text: str) -> "BinaryWord":
        if text and text.strip("01"):
            raise ValueError(f"word must consist of '0'/'1' characters, got {text!r}")
        return cls(len(text), int(text, 2) if text else 0)

    @classmethod
    def from_letters(cls, letters) -> "BinaryWord":
        bits = 0
        n = 0
        for a in letters:
            if a not in (0, 1):
                raise ValueError(f"letter must be 0 or 1, got {a!r}")
            bits = (bits << 1) | a
            n += 1
        return cls(n, bits)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b") if self.length else ""

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"letter index {i} out of range for length {self.length}")
        return (self.bits >> (self.length - 1 - i)) & 1

    def __iter__(self) -> Iterator[int]:
        for i in range(self.length):
            yield (self.bits >> (self.length - 1 - i)) & 1

    # Lexicographic order; a proper prefix precedes its extensions.
    def _cmp(self, other: "BinaryWord") -> int:
        n = min(self.length, other.length)
        a = self.bits >> (self.length - n)
        b = other.bits >> (other.length - n)
        if a != b:
            return -1 if a < b else 1
        if self.length == other.length:
            return 0
        return -1 if self.length < other.length else 1

    def __lt__(self, other: "BinaryWord") -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: "BinaryWord") -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: "BinaryWord") -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: "BinaryWord") -> bool:
        return self._cmp(other) >= 0

    def __add__(self, other: "BinaryWord") -> "BinaryWord":
        return BinaryWord(self.length + other.length,
                          (self.bits << other.length) | other.bits)

    def concat(self, other: "BinaryWord") -> "BinaryWord":
        return self + other

    def mirror(self) -> "BinaryWord":
        """Complement every letter (0 <-> 1)."""
        return BinaryWord(self.length, self.bits ^ ((1 << self.length) - 1))

    def prefix(self, n: int) -> "BinaryWord":
        """The first n letters."""
        if not 0 <= n <= self.length:
            raise ValueError(f"prefix length {n} out of range for word of length {self.length}")
        return BinaryWord(n, self.bits >> (self.length - n))

    def suffix(self, n: int) -> "BinaryWord":
        """The last n letters."""
        if not 0 <= n <= self.length:
            raise ValueError(f"suffix length {n} out of range for word of length {self.length}")
        return BinaryWord(n, self.bits & ((1 << n) - 1))

    def strip_prefix(self, p: "BinaryWord") -> "BinaryWord":
        """Remove the leading copy of p, i.e. the group-notation p^{-1}·self.

        Raises ValueError when p is not actually a prefix (a misapplied
        identity, worth failing loudly on).
        """
        if p.length > self.length or self.prefix(p.length) != p:
            raise ValueError(f"{p} is not a prefix of {self}")
        return self.suffix(self.length - p.length)

    def append(self, letter: int) -> "BinaryWord":
        if letter not in (0, 1):
            raise ValueError(f"letter must be 0 or 1, got {letter!r}")
        return BinaryWord(self.length + 1, (self.bits << 1) | letter)

    def starts_with(self, p: "BinaryWord") -> bool:
        return p.length <= self.length and self.prefix(p.length) == p


EMPTY = BinaryWord(0, 0)


def word(text: str) -> BinaryWord:
    """Shorthand constructor from '0'/'1' text."""
    return BinaryWord.from_string(text)


def lex_compare(u: BinaryWord, v: BinaryWord) -> int:
    """Three-way lexicographic comparison: -1 (LT), 0 (EQ), +1 (GT)."""
    return u._cmp(v)
