"""
Rank and unrank members of the five families.

The rank of ``pi`` reads its i-inversions as digits of the family's number
system: ``inv_i`` sits at weight index ``n - i``, so ``inv_1`` is the most
significant digit.  Unranking rebuilds the relative order of ``|pi(1..n)|``
as a chain, inserting positions from the right, and reads each sign off the
digit (``inv_i > n - i`` iff ``pi(i) < 0``).  The last sign of D and F and
the bottom pair of A are forced by the subgroup condition.

>>> rank(SignedPermutation((-2, 1)), "B")
4
>>> format_window(unrank(2, 3, "A"))
'[3,1,2]'
"""

from __future__ import annotations

from functools import lru_cache
from operator import mul

from .errors import DomainError
from .family import GroupFamily
from .inversions import _inv_vector
from .numsys import DigitString, NumberSystem, builtin_system, encode_natural
from .perm import SignedPermutation, format_window, is_member

__all__ = ["digits_of", "rank", "insert_into_chain", "unrank", "unrank_digits", "encode_rank"]


@lru_cache(maxsize=256)
def _system(family: GroupFamily, n: int) -> NumberSystem:
    return builtin_system(family, n)


def _check_member(pi: SignedPermutation, family: GroupFamily):
    if pi.n < family.min_n:
        raise DomainError(f"family {family.value} codec needs n >= {family.min_n}, got {pi.n}")
    if not is_member(pi, family):
        raise DomainError(f"{format_window(pi)} is not in {family.value}_{pi.n}")


def digits_of(pi: SignedPermutation, family) -> DigitString:
    family = GroupFamily.parse(family)
    _check_member(pi, family)
    n = pi.n
    invs = _inv_vector(pi.window)
    # weight index q holds inv_{n-q}
    digits = tuple(invs[n - q - 1] for q in range(family.offset, n))
    return DigitString(_system(family, n), digits)


def rank(pi: SignedPermutation, family) -> int:
    family = GroupFamily.parse(family)
    _check_member(pi, family)
    return _rank_window(pi.window, family)


def _rank_window(window, family: GroupFamily) -> int:
    # no validation: callers guarantee membership
    n = len(window)
    invs = _inv_vector(window)
    # weight index q pairs with inv_{n-q}
    return sum(map(mul, _system(family, n).weights, reversed(invs[:n - family.offset])))


def insert_into_chain(chain: list, symbol, a: int) -> list:
    """Insert ``symbol`` into a top-to-bottom chain with exactly ``a`` entries below it."""
    if not 0 <= a <= len(chain):
        raise DomainError(f"cannot place a symbol above {a} of {len(chain)} chain entries")
    out = list(chain)
    out.insert(len(out) - a, symbol)
    return out


def _build(n: int, family: GroupFamily, invs) -> tuple[int, ...]:
    """Reconstruct the member whose ``inv_i`` is ``invs[i]`` for the digit-carrying positions."""
    signs = [1] * (n + 1)
    if family is GroupFamily.B:
        chain, start = [], n
    elif family is GroupFamily.A:
        # tau(n-1) < tau(n): position n-1 sits at the bottom
        chain, start = [n, n - 1], n - 2
    else:
        chain, start = [n], n - 1

    for i in range(start, 0, -1):
        g = invs[i]
        free = n - i
        if g > free:
            signs[i] = -1
            a = 1 + 2 * free - g
        else:
            a = g
        chain.insert(len(chain) - a, i)

    values = [0] * (n + 1)
    for t, pos in enumerate(chain):
        values[pos] = n - t

    if family is GroupFamily.D:
        if sum(s < 0 for s in signs[1:n]) % 2:
            signs[n] = -1
    elif family is GroupFamily.F:
        trial = [s * v for s, v in zip(signs[1:], values[1:])]
        if sum(_inv_vector(trial)) % 2:
            signs[n] = -1
    elif family is GroupFamily.A:
        if sum(_inv_vector(values[1:])) % 2:
            values[n - 1], values[n] = values[n], values[n - 1]

    return tuple(s * v for s, v in zip(signs[1:], values[1:]))


def unrank(m: int, n: int, family) -> SignedPermutation:
    family = GroupFamily.parse(family)
    if n < family.min_n:
        raise DomainError(f"family {family.value} codec needs n >= {family.min_n}, got {n}")
    order = family.order(n)
    if not 0 <= m < order:
        raise DomainError(f"rank {m} outside 0..{order - 1} for {family.value}_{n}")
    return SignedPermutation(_unrank_window(m, n, family))


def _unrank_window(m: int, n: int, family: GroupFamily) -> tuple[int, ...]:
    # peel digits least significant first: weight index offset holds inv_{n-offset}
    invs = [0] * (n + 1)
    i = n - family.offset
    for c in _system(family, n).radices.radices:
        m, invs[i] = divmod(m, c + 1)
        i -= 1
    return _build(n, family, invs)


def unrank_digits(d: DigitString, n: int, family) -> SignedPermutation:
    family = GroupFamily.parse(family)
    if n < family.min_n:
        raise DomainError(f"family {family.value} codec needs n >= {family.min_n}, got {n}")
    ns = _system(family, n)
    sys_ = d.system
    if sys_.offset != family.offset or sys_.radices.radices[:len(ns)] != ns.radices.radices[:len(sys_)]:
        raise DomainError(f"digit string is not in the {family.value} number system")
    if len(d.digits) > len(ns):
        raise DomainError(f"{len(d.digits)} digits, but {family.value}_{n} uses {len(ns)}")
    invs = [0] + [d[n - i] for i in range(1, family.digit_count(n) + 1)]
    return SignedPermutation(_build(n, family, invs))


def encode_rank(m: int, n: int, family) -> DigitString:
    """Full-width family digits of rank ``m``."""
    family = GroupFamily.parse(family)
    return encode_natural(_system(family, n), m, width=family.digit_count(n))
