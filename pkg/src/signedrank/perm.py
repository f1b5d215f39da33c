"""
Signed permutations in window notation.

``SignedPermutation((-2, 1))`` sends 1 to -2 and 2 to 1, and ``pi(-j) = -pi(j)``.
Products compose right to left: ``(pi * rho)(i) = pi(rho(i))``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

from .errors import DomainError, FormatError
from .family import GroupFamily

__all__ = [
    "SignedPermutation", "identity", "apply_signed", "compose", "invert", "is_member",
    "enumerate_family", "random_element", "parse_window", "format_window",
]


@dataclass(frozen=True, order=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(w) for w in self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        if n == 0:
            raise FormatError("a signed permutation needs at least one entry")
        if 0 in window:
            raise FormatError(f"zero entry in window {list(window)}")
        if sorted(abs(w) for w in window) != list(range(1, n + 1)):
            raise FormatError(f"{list(window)}: absolute values are not a permutation of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if w > 0 else -1 for w in self.window)

    @property
    def sigma(self) -> tuple[int, ...]:
        """The underlying unsigned permutation ``(|w_1|, ..., |w_n|)``."""
        return tuple(abs(w) for w in self.window)

    def __call__(self, j: int) -> int:
        return apply_signed(self, j)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __invert__(self) -> "SignedPermutation":
        return invert(self)

    def __str__(self):
        return format_window(self)


def identity(n: int) -> SignedPermutation:
    if n < 1:
        raise DomainError("n must be positive")
    return SignedPermutation(tuple(range(1, n + 1)))


def apply_signed(pi: SignedPermutation, j: int) -> int:
    if j == 0 or abs(j) > pi.n:
        raise DomainError(f"{j} is not in +-[1..{pi.n}]")
    w = pi.window[abs(j) - 1]
    return w if j > 0 else -w


def compose(pi: SignedPermutation, rho: SignedPermutation) -> SignedPermutation:
    if pi.n != rho.n:
        raise DomainError(f"cannot compose permutations of sizes {pi.n} and {rho.n}")
    w = pi.window
    return SignedPermutation(tuple(w[r - 1] if r > 0 else -w[-r - 1] for r in rho.window))


def invert(pi: SignedPermutation) -> SignedPermutation:
    inverse = [0] * pi.n
    for i, w in enumerate(pi.window, start=1):
        inverse[abs(w) - 1] = i if w > 0 else -i
    return SignedPermutation(tuple(inverse))


def is_member(pi: SignedPermutation, family) -> bool:
    from .inversions import inv

    family = GroupFamily.parse(family)
    if family is GroupFamily.B:
        return True
    if family is GroupFamily.D:
        return sum(w < 0 for w in pi.window) % 2 == 0
    if family is GroupFamily.F:
        return inv(pi) % 2 == 0
    if any(w < 0 for w in pi.window):
        return False
    if family is GroupFamily.S:
        return True
    return inv(pi) % 2 == 0


def enumerate_family(family, n: int) -> Iterator[SignedPermutation]:
    """Every member of the family at size ``n``, each exactly once.

    Brute force over ``B_n`` (or ``S_n``) filtered by membership; meant for
    oracle tests at small ``n``.
    """
    family = GroupFamily.parse(family)
    if n < 1:
        raise DomainError("n must be positive")
    sign_patterns = list(product((1, -1), repeat=n)) if family.signed else [(1,) * n]
    for sigma in permutations(range(1, n + 1)):
        for signs in sign_patterns:
            pi = SignedPermutation(tuple(e * s for e, s in zip(signs, sigma)))
            if family is GroupFamily.B or is_member(pi, family):
                yield pi


def random_element(family, n: int, seed=None) -> SignedPermutation:
    """Uniform member, drawn by unranking a uniform rank; deterministic per seed."""
    from .codec import unrank

    family = GroupFamily.parse(family)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return unrank(rng.randrange(family.order(n)), n, family)


_WINDOW_RE = re.compile(r"^\s*\[\s*([+-]?[0-9]+(?:\s*,\s*[+-]?[0-9]+)*)\s*\]\s*$")


def parse_window(text: str) -> SignedPermutation:
    m = _WINDOW_RE.match(text)
    if m is None:
        raise FormatError(f"malformed window {text!r}; expected e.g. [-2,1]")
    return SignedPermutation(tuple(int(tok) for tok in m.group(1).split(",")))


def format_window(pi: SignedPermutation) -> str:
    return "[" + ",".join(str(w) for w in pi.window) + "]"
