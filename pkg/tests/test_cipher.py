import os
import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from signedrank.cipher import (
    CipherHeader, CipherKey, block_sizes, decrypt_block, decrypt_stream, encrypt_block,
    encrypt_stream, keygen,
)
from signedrank.codec import rank, unrank
from signedrank.errors import DomainError, FormatError
from signedrank.family import GroupFamily
from signedrank.perm import compose, enumerate_family, identity, parse_window


def test_keygen_deterministic_and_valid():
    assert keygen(8, seed=42) == keygen(8, seed=42)
    k = keygen(8, seed=42)
    assert k.n == 8
    assert compose(k.key, k.key_inverse) == identity(8)


def test_keygen_covers_b2():
    counts = Counter(keygen(2, seed=s).key for s in range(10_000))
    assert len(counts) == 8


def test_identity_key():
    k = CipherKey(identity(5))
    for m in range(0, GroupFamily.B.order(5), 37):
        assert encrypt_block(m, k) == m == decrypt_block(m, k)


def test_worked_block():
    # [-2,1] * [2,1] = [1,-2], whose B rank is 1
    k = CipherKey(parse_window("[2,1]"))
    assert unrank(4, 2, "B") == parse_window("[-2,1]")
    assert compose(parse_window("[-2,1]"), parse_window("[2,1]")) == parse_window("[1,-2]")
    assert rank(parse_window("[1,-2]"), "B") == 1
    assert encrypt_block(4, k) == 1
    assert decrypt_block(1, k) == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_blocks_exhaustive(n):
    order = GroupFamily.B.order(n)
    keys = list(enumerate_family("B", n)) if n <= 2 else [keygen(n, seed=s).key for s in range(6)]
    for key in keys:
        k = CipherKey(key)
        images = [encrypt_block(m, k) for m in range(order)]
        assert sorted(images) == list(range(order))
        assert [decrypt_block(c, k) for c in images] == list(range(order))


def test_block_matches_group_definition():
    k = keygen(7, seed=3)
    rng = random.Random(0)
    for _ in range(200):
        m = rng.randrange(GroupFamily.B.order(7))
        assert encrypt_block(m, k) == rank(compose(unrank(m, 7, "B"), k.key), "B")


def test_key_composition_n3():
    group = list(enumerate_family("B", 3))
    for kappa in group[::5]:
        for rho in group[::7]:
            k1, k2, k12 = CipherKey(kappa), CipherKey(rho), CipherKey(compose(kappa, rho))
            for m in range(48):
                assert encrypt_block(encrypt_block(m, k1), k2) == encrypt_block(m, k12)


def test_block_range_errors():
    k = keygen(3, seed=1)
    with pytest.raises(DomainError):
        encrypt_block(48, k)
    with pytest.raises(DomainError):
        decrypt_block(-1, k)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=5, max_value=100), st.integers(min_value=0), st.data())
def test_block_round_trip_property(n, seed, data):
    k = keygen(n, seed=seed)
    m = data.draw(st.integers(min_value=0, max_value=GroupFamily.B.order(n) - 1))
    assert decrypt_block(encrypt_block(m, k), k) == m


@pytest.mark.parametrize("n, k_in, k_out", [(4, 1, 2), (5, 1, 2), (6, 1, 2), (8, 2, 3), (20, 10, 11)])
def test_block_sizes(n, k_in, k_out):
    order = GroupFamily.B.order(n)
    assert block_sizes(n) == (k_in, k_out)
    assert 256**k_in <= order < 256 ** (k_in + 1)
    assert 256 ** (k_out - 1) < order <= 256**k_out


def test_empty_stream():
    k = keygen(6, seed=0)
    ct = encrypt_stream(b"", k)
    assert len(ct) == 15
    assert decrypt_stream(ct, k) == b""


def test_identity_key_stream_passes_blocks_through():
    k = CipherKey(identity(6))
    data = bytes(range(256)) + b"x"
    ct = encrypt_stream(data, k)
    k_in, k_out = block_sizes(6)
    body = ct[15:]
    for b in range(len(body) // k_out):
        plain = data[b * k_in:(b + 1) * k_in]
        assert int.from_bytes(body[b * k_out:(b + 1) * k_out], "big") == int.from_bytes(plain, "big")
    assert decrypt_stream(ct, k) == data


@settings(max_examples=60, deadline=None)
@given(st.binary(max_size=300), st.integers(min_value=4, max_value=30), st.integers(min_value=0))
def test_stream_round_trip_property(data, n, seed):
    k = keygen(n, seed=seed)
    assert decrypt_stream(encrypt_stream(data, k), k) == data


def test_stream_rejects_small_n():
    with pytest.raises(DomainError):
        encrypt_stream(b"abc", keygen(3, seed=0))


def test_header_round_trip_and_layout():
    h = CipherHeader(20, 123456)
    raw = h.pack()
    assert len(raw) == 15
    assert raw[:4] == b"SPRK" and raw[4] == 1
    assert raw[5:7] == (20).to_bytes(2, "big")
    assert raw[7:] == (123456).to_bytes(8, "big")
    assert CipherHeader.unpack(raw) == h


def test_decrypt_stream_errors():
    k = keygen(6, seed=9)
    ct = encrypt_stream(os.urandom(50), k)
    with pytest.raises(FormatError, match="magic"):
        decrypt_stream(b"XXXX" + ct[4:], k)
    with pytest.raises(FormatError, match="version"):
        decrypt_stream(ct[:4] + b"\x02" + ct[5:], k)
    with pytest.raises(FormatError):
        decrypt_stream(ct[:-1], k)
    with pytest.raises(FormatError):
        decrypt_stream(ct[:10], k)
    with pytest.raises(DomainError):
        decrypt_stream(ct, keygen(7, seed=9))
    k_out = block_sizes(6)[1]
    bad = ct[:15] + b"\xff" * k_out + ct[15 + k_out:]
    with pytest.raises(FormatError, match="outside"):
        decrypt_stream(bad, k)
