"""
Mixed-radix positional number systems.

A system is a pair of aligned sequences: radices ``c_i`` (digit ``i`` ranges
over ``0..c_i``) and weights ``Q_i``.  Every natural has exactly one
representation ``sum(g_i * Q_i)`` iff the first weight is 1 and each weight
is the product of ``(1 + c_j)`` over the earlier positions.

Indices carry an offset so the family systems can be addressed with their
natural indices (B starts at 0, D/F/S at 1, A at 2).  Digits are stored least
significant first; the colon notation ``g_k:...:g_0`` is only a rendering.

>>> ns = builtin_system("B", 4)
>>> ns.weights
(1, 2, 8, 48)
>>> format_digit_string(encode_natural(ns, 17))
'2:0:1'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .errors import DomainError, FormatError, NumberSystemOverflow
from .family import GroupFamily

__all__ = [
    "RadixSequence", "NumberSystem", "DigitString",
    "weights_from_radices", "validate_system", "decode_digits", "encode_natural",
    "increment_digits", "builtin_system", "parse_digit_string", "format_digit_string",
    "iter_digit_strings",
]


@dataclass(frozen=True)
class RadixSequence:
    """Digit bounds ``c_offset, c_offset+1, ...``.

    ``rule`` (index -> radix) makes the sequence generative: the system can be
    extended past its stored length when a natural does not fit.
    """
    radices: tuple[int, ...]
    offset: int = 0
    rule: Optional[Callable[[int], int]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "radices", tuple(int(c) for c in self.radices))
        if not self.radices:
            raise ValueError("radix sequence must be non-empty")
        if any(c < 1 for c in self.radices):
            raise ValueError(f"radices must be >= 1, got {self.radices}")
        if self.offset < 0:
            raise ValueError("offset must be non-negative")

    def __len__(self):
        return len(self.radices)

    def __getitem__(self, i):
        """Radix at *paper index* ``i`` (not list position)."""
        return self.radices[i - self.offset]

    @property
    def generative(self) -> bool:
        return self.rule is not None

    def extended(self, length: int) -> "RadixSequence":
        if length <= len(self):
            return self
        if self.rule is None:
            raise NumberSystemOverflow("radix sequence is finite and cannot be extended")
        extra = [self.rule(self.offset + k) for k in range(len(self), length)]
        return RadixSequence(self.radices + tuple(extra), self.offset, self.rule)


@dataclass(frozen=True)
class NumberSystem:
    radices: RadixSequence
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(q) for q in self.weights))
        if not validate_system(self.weights, self.radices):
            raise ValueError(f"weights {self.weights} do not form a number system with radices "
                             f"{self.radices.radices}")

    @property
    def offset(self) -> int:
        return self.radices.offset

    def __len__(self):
        return len(self.weights)

    @property
    def capacity(self) -> int:
        """Count of naturals representable: ``prod(1 + c_i)``."""
        return self.weights[-1] * (1 + self.radices.radices[-1])

    def radix(self, i: int) -> int:
        return self.radices[i]

    def weight(self, i: int) -> int:
        return self.weights[i - self.offset]

    def extended(self, length: int) -> "NumberSystem":
        if length <= len(self):
            return self
        return weights_from_radices(self.radices.extended(length))


@dataclass(frozen=True)
class DigitString:
    """Digits ``g_offset, g_offset+1, ...`` (least significant first) in ``system``."""
    system: NumberSystem
    digits: tuple[int, ...]

    def __post_init__(self):
        digits = tuple(int(g) for g in self.digits)
        object.__setattr__(self, "digits", digits)
        if not digits:
            raise ValueError("a digit string needs at least one digit")
        if len(digits) > len(self.system):
            raise DomainError(f"{len(digits)} digits exceed the {len(self.system)} positions of the system")
        bounds = self.system.radices.radices
        for pos, (g, c) in enumerate(zip(digits, bounds)):
            if not 0 <= g <= c:
                raise DomainError(f"digit {g} at index {pos + self.system.offset} is outside 0..{c}")

    def __getitem__(self, i):
        """Digit at index ``i``; positions past the stored length read as 0."""
        k = i - self.system.offset
        if k < 0:
            raise IndexError(i)
        return self.digits[k] if k < len(self.digits) else 0

    def __int__(self):
        return decode_digits(self)

    def __str__(self):
        return format_digit_string(self)


def weights_from_radices(c: RadixSequence) -> NumberSystem:
    weights = [1]
    for radix in c.radices[:-1]:
        weights.append(weights[-1] * (1 + radix))
    return NumberSystem(c, tuple(weights))


def validate_system(weights: Sequence[int], c: RadixSequence) -> bool:
    """True iff ``(weights, c)`` is a number system: first weight 1, product recurrence."""
    if isinstance(c, RadixSequence):
        radices = c.radices
    else:
        radices = tuple(c)
    if len(weights) != len(radices):
        raise ValueError(f"length mismatch: {len(weights)} weights vs {len(radices)} radices")
    if not weights:
        raise ValueError("empty number system")
    expected = 1
    for q, radix in zip(weights, radices):
        if q != expected:
            return False
        expected *= 1 + radix
    return True


def decode_digits(d: DigitString) -> int:
    return sum(g * q for g, q in zip(d.digits, d.system.weights))


def _fit(ns: NumberSystem, n: int) -> NumberSystem:
    if n < ns.capacity:
        return ns
    if not ns.radices.generative:
        raise NumberSystemOverflow(f"{n} does not fit; capacity is {ns.capacity}")
    length = len(ns)
    while True:
        length = max(length + 1, 2 * length)
        grown = ns.extended(length)
        if n < grown.capacity:
            return grown


def encode_natural(ns: NumberSystem, n: int, width: Optional[int] = None) -> DigitString:
    """Unique digit string of ``n``.

    Digits are trimmed to the highest non-zero one unless ``width`` asks for a
    fixed count (the codec reads fixed-width inversion vectors).
    """
    n = int(n)
    if n < 0:
        raise DomainError("only naturals can be encoded")
    ns = _fit(ns, n)
    if width is not None and width > len(ns):
        ns = ns.extended(width)
    digits = []
    for q, radix in zip(ns.weights, ns.radices.radices):
        digits.append((n // q) % (1 + radix))
    if width is None:
        while len(digits) > 1 and digits[-1] == 0:
            digits.pop()
    else:
        if any(digits[width:]):
            raise NumberSystemOverflow(f"{n} needs more than {width} digits")
        digits = digits[:width]
    return DigitString(ns, tuple(digits))


def increment_digits(d: DigitString) -> DigitString:
    digits = list(d.digits)
    ns = d.system
    pos = 0
    while True:
        if pos == len(digits):
            if pos == len(ns):
                ns = _fit(ns, ns.capacity)
            digits.append(0)
        if digits[pos] < ns.radices.radices[pos]:
            digits[pos] += 1
            return DigitString(ns, tuple(digits))
        digits[pos] = 0
        pos += 1


def builtin_system(family, n: int) -> NumberSystem:
    """The truncated family system ``<Q_offset, ..., Q_{n-1}>``.

    >>> builtin_system("A", 4).weights, builtin_system("A", 4).radices.radices
    ((1, 3), (2, 3))
    """
    family = GroupFamily.parse(family)
    if n < family.min_n:
        raise DomainError(f"family {family.value} needs n >= {family.min_n}, got {n}")
    indices = range(family.offset, n)
    radices = RadixSequence(tuple(family.radix(i) for i in indices), family.offset, family.radix)
    return weights_from_radices(radices)


def parse_digit_string(text: str, ns: NumberSystem) -> DigitString:
    parts = [p.strip() for p in text.strip().split(":")]
    if not all(p.isascii() and p.isdigit() for p in parts):
        raise FormatError(f"malformed digit string {text!r}")
    digits = tuple(int(p) for p in reversed(parts))
    if len(digits) > len(ns):
        if not ns.radices.generative:
            raise DomainError(f"{len(digits)} digits do not fit a {len(ns)}-position system")
        ns = ns.extended(len(digits))
    return DigitString(ns, digits)


def format_digit_string(d: DigitString, keep_zeros: bool = False) -> str:
    """Most significant digit first, colon separated.

    Leading zeros are dropped unless ``keep_zeros`` is set.
    """
    digits = list(d.digits)
    if not keep_zeros:
        while len(digits) > 1 and digits[-1] == 0:
            digits.pop()
    return ":".join(str(g) for g in reversed(digits))


def iter_digit_strings(ns: NumberSystem) -> Iterable[DigitString]:
    """Every bounded digit string of full width, in no particular order."""
    from itertools import product
    for combo in product(*(range(c + 1) for c in ns.radices.radices)):
        yield DigitString(ns, combo)
