"""Serpent block cipher with a configurable round count.

Byte conventions follow the widely deployed little-endian word ordering
(libgcrypt, Linux, NESSIE vectors): block and key bytes are loaded as
little-endian 32-bit words. Keys shorter than 256 bits are padded by
appending a single 1 bit and then zeros.

The architecture runs 16 rounds: the first 16 rounds of the standard
round sequence (S-boxes S0..S7 applied twice) with subkeys K0..K16 from
the unmodified key schedule, K16 serving as the final key mix.
"""

import struct

from . import backend
from ._sbox_py import SBOX_FUNCS

BLOCK_SIZE = 16
DEFAULT_ROUNDS = 16
VALID_ROUNDS = (16, 32)

_PHI = 0x9E3779B9
_MASK32 = 0xFFFFFFFF


class CipherError(ValueError):
    pass


def _rol(x, n):
    return ((x << n) | (x >> (32 - n))) & _MASK32


def _pad_key(key):
    if not 1 <= len(key) <= 32:
        raise CipherError("Serpent keys are 1..32 bytes, got %d" % len(key))
    if len(key) < 32:
        key = bytes(key) + b"\x01" + bytes(31 - len(key))
    return key


def key_schedule(key, rounds=DEFAULT_ROUNDS):
    """Expand ``key`` into ``rounds + 1`` subkeys of four 32-bit words each.

    Subkey i is produced by S-box (3 - i) mod 8, as in full Serpent, so the
    16-round schedule is a prefix of the 32-round one.
    """
    if rounds not in VALID_ROUNDS:
        raise CipherError("rounds must be one of %s" % (VALID_ROUNDS,))
    w = list(struct.unpack("<8I", _pad_key(key)))
    for i in range(4 * (rounds + 1)):
        w.append(_rol(w[i] ^ w[i + 3] ^ w[i + 5] ^ w[i + 7] ^ _PHI ^ i, 11))
    pre = w[8:]
    return [
        SBOX_FUNCS[(3 - i) % 8](*pre[4 * i:4 * i + 4])
        for i in range(rounds + 1)
    ]


class Serpent:
    """A keyed Serpent instance. Immutable once constructed."""

    __slots__ = ("rounds", "_pk", "_kernels")

    def __init__(self, key, rounds=DEFAULT_ROUNDS, kernels=None):
        self.rounds = rounds
        self._kernels = kernels or backend.kernels
        words = [w for sk in key_schedule(key, rounds) for w in sk]
        self._pk = self._kernels.prepare(words, rounds)

    def encrypt_block(self, block):
        if len(block) != BLOCK_SIZE:
            raise CipherError("block must be 16 bytes")
        return self._kernels.encrypt_block(self._pk, bytes(block))

    def decrypt_block(self, block):
        if len(block) != BLOCK_SIZE:
            raise CipherError("block must be 16 bytes")
        return self._kernels.decrypt_block(self._pk, bytes(block))

    def ctr_xor(self, s, data):
        return self._kernels.ctr_xor(self._pk, s, bytes(data))

    def cbc_mac(self, data):
        return self._kernels.cbc_mac(self._pk, bytes(data))


def encrypt_block(key, block, rounds=DEFAULT_ROUNDS):
    return Serpent(key, rounds).encrypt_block(block)


def decrypt_block(key, block, rounds=DEFAULT_ROUNDS):
    return Serpent(key, rounds).decrypt_block(block)
