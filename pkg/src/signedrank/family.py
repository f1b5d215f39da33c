"""The five group families and the data each one fixes: digit offset, radix rule, group order."""

from enum import Enum
from math import factorial


class GroupFamily(str, Enum):
    B = "B"  # signed permutations
    D = "D"  # even number of negative signs
    S = "S"  # ordinary permutations
    A = "A"  # even permutations
    F = "F"  # signed permutations with even inv

    @classmethod
    def parse(cls, tag):
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).strip().upper())
        except ValueError:
            raise ValueError(f"unknown group family {tag!r}; expected one of B, D, S, A, F") from None

    @property
    def signed(self) -> bool:
        return self in (GroupFamily.B, GroupFamily.D, GroupFamily.F)

    @property
    def offset(self) -> int:
        """Smallest weight index of the family's number system."""
        return {"B": 0, "D": 1, "F": 1, "S": 1, "A": 2}[self.value]

    @property
    def min_n(self) -> int:
        """Smallest n for which the codec is defined."""
        return {"B": 1, "D": 2, "F": 2, "S": 2, "A": 3}[self.value]

    def radix(self, i: int) -> int:
        return 2 * i + 1 if self.signed else i

    def order(self, n: int) -> int:
        if self is GroupFamily.B:
            return 2**n * factorial(n)
        if self is GroupFamily.S:
            return factorial(n)
        if self is GroupFamily.A:
            return max(factorial(n) // 2, 1)
        return 2 ** (n - 1) * factorial(n)

    def digit_count(self, n: int) -> int:
        """Number of inv_i digits the codec reads: inv_1 .. inv_{n - offset'}."""
        return n - self.offset
