"""
Inversion statistics on signed permutations.

Two routes are kept side by side.  The root-system route counts positive
roots of type B sent to negative roots; it is slow and serves as the oracle.
The counting route reads ``inv_i`` off the window directly: with
``j = |pi(i)|`` and ``s``/``l`` the numbers of later positions whose absolute
value is smaller/larger than ``j``,

    inv_i = s                 if pi(i) > 0
    inv_i = 1 + s + 2 * l     if pi(i) < 0
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass

from .errors import DomainError
from .perm import SignedPermutation

__all__ = [
    "Root", "positive_roots", "restricted_roots", "act_on_root", "is_negative_root",
    "inv_oracle", "inv_i_oracle", "inv_i_fast", "inv_vector", "inv", "r_value",
]


@dataclass(frozen=True)
class Root:
    """``sum(x * e_a for a, x in terms)``; terms sorted by index, coefficients +-1."""
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        terms = tuple(sorted(self.terms))
        object.__setattr__(self, "terms", terms)
        if len(terms) not in (1, 2):
            raise ValueError("a root has one or two terms")
        if any(x not in (1, -1) for _, x in terms):
            raise ValueError("root coefficients must be +-1")
        if len(terms) == 2 and terms[0][0] == terms[1][0]:
            raise ValueError("root indices must be distinct")

    @classmethod
    def e(cls, k: int, coef: int = 1) -> "Root":
        return cls(((k, coef),))

    def __neg__(self):
        return Root(tuple((a, -x) for a, x in self.terms))

    def __str__(self):
        out = ""
        for a, x in self.terms:
            out += ("-" if x < 0 else ("+" if out else "")) + f"e{a}"
        return out


def positive_roots(n: int) -> list[Root]:
    if n < 1:
        raise DomainError("n must be positive")
    return [root for i in range(1, n + 1) for root in restricted_roots(n, i)]


def restricted_roots(n: int, i: int) -> list[Root]:
    """``e_i`` together with ``e_i + e_j`` and ``e_i - e_j`` for ``i < j <= n``."""
    if not 1 <= i <= n:
        raise DomainError(f"index {i} outside 1..{n}")
    roots = [Root.e(i)]
    for j in range(i + 1, n + 1):
        roots.append(Root(((i, 1), (j, 1))))
        roots.append(Root(((i, 1), (j, -1))))
    return roots


def act_on_root(pi: SignedPermutation, v: Root) -> Root:
    out = []
    for a, x in v.terms:
        w = pi.window[a - 1]
        out.append((abs(w), x if w > 0 else -x))
    return Root(tuple(out))


def is_negative_root(v: Root) -> bool:
    # lowest-index coefficient decides: -e_k, -e_i-e_j and -e_i+e_j (i<j) are negative
    return v.terms[0][1] < 0


def inv_i_oracle(pi: SignedPermutation, i: int) -> int:
    return sum(is_negative_root(act_on_root(pi, v)) for v in restricted_roots(pi.n, i))


def inv_oracle(pi: SignedPermutation) -> int:
    return sum(is_negative_root(act_on_root(pi, v)) for v in positive_roots(pi.n))


def inv_i_fast(pi: SignedPermutation, i: int) -> int:
    n = pi.n
    if not 1 <= i <= n:
        raise DomainError(f"index {i} outside 1..{n}")
    w = pi.window[i - 1]
    j = abs(w)
    smaller = sum(1 for v in pi.window[i:] if abs(v) < j)
    if w > 0:
        return smaller
    return 1 + smaller + 2 * (n - i - smaller)


def _inv_vector(window) -> list[int]:
    # right to left, keeping the later absolute values sorted
    n = len(window)
    seen: list[int] = []
    out = [0] * n
    for k in range(n - 1, -1, -1):
        w = window[k]
        j = w if w > 0 else -w
        smaller = bisect_left(seen, j)
        out[k] = smaller if w > 0 else 1 + smaller + 2 * (len(seen) - smaller)
        insort(seen, j)
    return out


def inv_vector(pi: SignedPermutation) -> tuple[int, ...]:
    """``(inv_1, ..., inv_n)``."""
    return tuple(_inv_vector(pi.window))


def inv(pi: SignedPermutation) -> int:
    return sum(_inv_vector(pi.window))


def r_value(n: int, i: int, j: int) -> int:
    """Number of later positions below ``|pi(i)|``, recovered from ``j = inv_i(pi)``."""
    if not 1 <= i <= n:
        raise DomainError(f"index {i} outside 1..{n}")
    if not 0 <= j <= 2 * (n - i) + 1:
        raise DomainError(f"inv_{i} value {j} outside 0..{2 * (n - i) + 1}")
    return j if j <= n - i else 1 + 2 * (n - i) - j
