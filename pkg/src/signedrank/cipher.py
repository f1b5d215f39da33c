"""
Toy block cipher over ``B_n``: ``c = rank(unrank(m) * key)``.

Decryption multiplies by the inverse key.  There is no security claim here;
the construction only demonstrates that the codec turns group multiplication
into a bijection on ``[0, 2^n n!)``.

Stream format::

    magic (4 bytes) | version (1) | n (2, big-endian) | plaintext length (8, big-endian)
    followed by k_out-byte big-endian ciphertext blocks

Plaintext is cut into k_in-byte blocks, the largest width whose values all
fit below ``2^n n!``; the final short block is left-padded with zeros.
"""

from __future__ import annotations

import random
import struct
from dataclasses import dataclass, field

from .codec import _rank_window, _unrank_window, unrank
from .errors import DomainError, FormatError
from .family import GroupFamily
from .perm import SignedPermutation, invert

__all__ = [
    "CipherKey", "CipherHeader", "keygen", "encrypt_block", "decrypt_block",
    "encrypt_stream", "decrypt_stream", "block_sizes",
]

MAGIC = b"SPRK"
VERSION = 1
_HEADER = struct.Struct(">4sBHQ")

_B = GroupFamily.B


@dataclass(frozen=True)
class CipherKey:
    key: SignedPermutation
    key_inverse: SignedPermutation = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "key_inverse", invert(self.key))

    @property
    def n(self) -> int:
        return self.key.n

    @property
    def order(self) -> int:
        return _B.order(self.n)


@dataclass(frozen=True)
class CipherHeader:
    n: int
    plaintext_length: int
    magic: bytes = MAGIC
    version: int = VERSION

    def pack(self) -> bytes:
        return _HEADER.pack(self.magic, self.version, self.n, self.plaintext_length)

    @classmethod
    def unpack(cls, data: bytes) -> "CipherHeader":
        if len(data) < _HEADER.size:
            raise FormatError("truncated header")
        magic, version, n, length = _HEADER.unpack_from(data)
        if magic != MAGIC:
            raise FormatError(f"bad magic {magic!r}")
        if version != VERSION:
            raise FormatError(f"unsupported version {version}")
        if n < 1:
            raise FormatError("header declares n = 0")
        return cls(n, length, magic, version)


def keygen(n: int, seed=None) -> CipherKey:
    if n < 1:
        raise DomainError("n must be positive")
    rng = random.Random(seed)
    return CipherKey(unrank(rng.randrange(_B.order(n)), n, _B))


def _check_block(m: int, k: CipherKey):
    if not 0 <= m < k.order:
        raise DomainError(f"block {m} outside 0..{k.order - 1}")


def _apply(m: int, n: int, key: tuple[int, ...]) -> int:
    # rank(unrank(m) * key) on raw windows; the product of two B_n windows is always in B_n
    w = _unrank_window(m, n, _B)
    return _rank_window([w[r - 1] if r > 0 else -w[-r - 1] for r in key], _B)


def encrypt_block(m: int, k: CipherKey) -> int:
    _check_block(m, k)
    return _apply(m, k.n, k.key.window)


def decrypt_block(c: int, k: CipherKey) -> int:
    _check_block(c, k)
    return _apply(c, k.n, k.key_inverse.window)


def block_sizes(n: int) -> tuple[int, int]:
    """``(k_in, k_out)``: largest t with 256^t <= 2^n n!, smallest t with 256^t >= 2^n n!."""
    order = _B.order(n)
    k_in = (order.bit_length() - 1) // 8
    k_out = k_in if 256**k_in == order else k_in + 1
    return k_in, k_out


def encrypt_stream(plaintext: bytes, k: CipherKey) -> bytes:
    k_in, k_out = block_sizes(k.n)
    if k_in == 0:
        raise DomainError(f"n = {k.n} is too small for byte blocks (need 2^n n! >= 256, n >= 4)")
    out = [CipherHeader(k.n, len(plaintext)).pack()]
    for start in range(0, len(plaintext), k_in):
        m = int.from_bytes(plaintext[start:start + k_in], "big")
        out.append(encrypt_block(m, k).to_bytes(k_out, "big"))
    return b"".join(out)


def decrypt_stream(ciphertext: bytes, k: CipherKey) -> bytes:
    header = CipherHeader.unpack(ciphertext)
    if header.n != k.n:
        raise DomainError(f"ciphertext was made for n = {header.n}, key has n = {k.n}")
    k_in, k_out = block_sizes(k.n)
    if k_in == 0:
        raise FormatError(f"n = {k.n} cannot carry byte blocks")
    body = memoryview(ciphertext)[_HEADER.size:]
    blocks, tail = divmod(header.plaintext_length, k_in)
    blocks += bool(tail)
    if len(body) != blocks * k_out:
        raise FormatError(f"expected {blocks * k_out} ciphertext bytes, found {len(body)}")
    out = []
    for b in range(blocks):
        c = int.from_bytes(body[b * k_out:(b + 1) * k_out], "big")
        if c >= k.order:
            raise FormatError(f"block {b} holds {c}, outside the key's domain")
        out.append(decrypt_block(c, k).to_bytes(k_in, "big"))
    if tail:
        out[-1] = out[-1][k_in - tail:]
    return b"".join(out)
