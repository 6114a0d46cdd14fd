"""Pure-Python hot kernels: bitsliced Serpent rounds, CTR, CBC-MAC, Horner.

Same surface as the compiled ``_ckernels`` module; ``sensorsec.backend``
picks one at import time.
"""

import struct

from ._sbox_py import SBOX_FUNCS, SBOX_INV_FUNCS

NAME = "python"

MASK32 = 0xFFFFFFFF
P = (1 << 80) - (1 << 64) - (1 << 32) - 1
MASK80 = (1 << 80) - 1
_FOLD = (1 << 64) + (1 << 32) + 1

_WORDS = struct.Struct("<4I")


def _rol(x, n):
    return ((x << n) | (x >> (32 - n))) & MASK32


def _ror(x, n):
    return ((x >> n) | (x << (32 - n))) & MASK32


class PreparedKey:
    __slots__ = ("subkeys", "rounds")

    def __init__(self, subkeys, rounds):
        self.subkeys = subkeys
        self.rounds = rounds


def prepare(words, rounds):
    """Pack a flat list of 4*(rounds+1) subkey words for the round loop."""
    if len(words) != 4 * (rounds + 1):
        raise ValueError("expected %d subkey words, got %d" % (4 * (rounds + 1), len(words)))
    sk = tuple(tuple(words[4 * i:4 * i + 4]) for i in range(rounds + 1))
    return PreparedKey(sk, rounds)


def _encrypt_words(pk, x0, x1, x2, x3):
    sk = pk.subkeys
    last = pk.rounds - 1
    for i in range(pk.rounds):
        k = sk[i]
        x0, x1, x2, x3 = SBOX_FUNCS[i & 7](x0 ^ k[0], x1 ^ k[1], x2 ^ k[2], x3 ^ k[3])
        if i < last:
            x0 = ((x0 << 13) | (x0 >> 19)) & MASK32
            x2 = ((x2 << 3) | (x2 >> 29)) & MASK32
            x1 ^= x0 ^ x2
            x3 ^= x2 ^ ((x0 << 3) & MASK32)
            x1 = ((x1 << 1) | (x1 >> 31)) & MASK32
            x3 = ((x3 << 7) | (x3 >> 25)) & MASK32
            x0 ^= x1 ^ x3
            x2 ^= x3 ^ ((x1 << 7) & MASK32)
            x0 = ((x0 << 5) | (x0 >> 27)) & MASK32
            x2 = ((x2 << 22) | (x2 >> 10)) & MASK32
    k = sk[pk.rounds]
    return x0 ^ k[0], x1 ^ k[1], x2 ^ k[2], x3 ^ k[3]


def _decrypt_words(pk, x0, x1, x2, x3):
    sk = pk.subkeys
    k = sk[pk.rounds]
    x0 ^= k[0]
    x1 ^= k[1]
    x2 ^= k[2]
    x3 ^= k[3]
    for i in range(pk.rounds - 1, -1, -1):
        if i < pk.rounds - 1:
            x2 = _ror(x2, 22)
            x0 = _ror(x0, 5)
            x2 ^= x3 ^ ((x1 << 7) & MASK32)
            x0 ^= x1 ^ x3
            x3 = _ror(x3, 7)
            x1 = _ror(x1, 1)
            x3 ^= x2 ^ ((x0 << 3) & MASK32)
            x1 ^= x0 ^ x2
            x2 = _ror(x2, 3)
            x0 = _ror(x0, 13)
        x0, x1, x2, x3 = SBOX_INV_FUNCS[i & 7](x0, x1, x2, x3)
        k = sk[i]
        x0 ^= k[0]
        x1 ^= k[1]
        x2 ^= k[2]
        x3 ^= k[3]
    return x0, x1, x2, x3


def encrypt_block(pk, block):
    return _WORDS.pack(*_encrypt_words(pk, *_WORDS.unpack(block)))


def decrypt_block(pk, block):
    return _WORDS.pack(*_decrypt_words(pk, *_WORDS.unpack(block)))


def ctr_xor(pk, s, data):
    """XOR ``data`` with the keystream of message counter ``s``.

    Counter block j is s (2 bytes BE) followed by j (14 bytes BE).
    """
    n = len(data)
    out = bytearray(n)
    prefix = s.to_bytes(2, "big")
    for j in range(0, (n + 15) // 16):
        ks = encrypt_block(pk, prefix + j.to_bytes(14, "big"))
        base = 16 * j
        for i in range(min(16, n - base)):
            out[base + i] = data[base + i] ^ ks[i]
    return bytes(out)


def cbc_mac(pk, data):
    """Full final CBC block under a zero IV; input zero-padded, min one block."""
    n = len(data)
    if n == 0 or n % 16:
        data = bytes(data) + bytes(16 - n % 16)
    y0 = y1 = y2 = y3 = 0
    for off in range(0, len(data), 16):
        m0, m1, m2, m3 = _WORDS.unpack_from(data, off)
        y0, y1, y2, y3 = _encrypt_words(pk, y0 ^ m0, y1 ^ m1, y2 ^ m2, y3 ^ m3)
    return _WORDS.pack(y0, y1, y2, y3)


def reduce96(r):
    if r < 0 or r >> 96:
        raise ValueError("reduce96 input must be in [0, 2**96)")
    s = r & MASK80
    r5 = r >> 80
    v = s + (r5 << 64) + (r5 << 32) + r5
    if v >= P:
        v -= P
        if v >= P:
            v -= P
    return v


def horner(coeffs, x):
    """Evaluate a polynomial given highest coefficient first at small ``x``."""
    acc = 0
    for c in coeffs:
        acc = reduce96(acc * x) + c
        if acc >= P:
            acc -= P
    return acc
