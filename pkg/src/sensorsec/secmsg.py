"""Authenticated frames: CTR encryption with a split counter plus a
truncated CBC-MAC, both under the sender's 80-bit key.

Wire layout (multi-byte fields big-endian)::

    [sender:2][msg_type:1][dest:2][s:2][ciphertext:N][mac:4]

The first five bytes are the link header. ``dest`` is 0 for neighbourhood
broadcasts and names the peer for key-exchange frames. The security
overhead on top of header and payload is exactly the 2-byte counter and
the 4-byte tag.
"""

import hmac
import struct
from dataclasses import dataclass
from functools import lru_cache

from .cipher import BLOCK_SIZE, Serpent

DATA = 0x01
KEY_REQUEST = 0x02
KEY_REPLY = 0x03
MSG_TYPES = (DATA, KEY_REQUEST, KEY_REPLY)

BROADCAST = 0
KEY_BYTES = 10
LINK_HEADER = 5
COUNTER_BYTES = 2
MAC_BYTES = 4
OVERHEAD = COUNTER_BYTES + MAC_BYTES
MAX_COUNTER = 0xFFFF
MAX_PAYLOAD = 1 << 16

_HEADER = struct.Struct(">HBHH")


class SecMsgError(Exception):
    pass


class BadMac(SecMsgError):
    pass


class Replay(SecMsgError):
    pass


class CounterExhausted(SecMsgError):
    pass


class MalformedFrame(SecMsgError, ValueError):
    pass


@dataclass
class CounterState:
    """Per-key message counter; ``s`` is the last value used (0 = none yet)."""

    s: int = 0


@dataclass(frozen=True)
class Frame:
    sender: int
    msg_type: int
    s: int
    ciphertext: bytes
    mac: bytes
    dest: int = BROADCAST

    def header(self):
        return _HEADER.pack(self.sender, self.msg_type, self.dest, self.s)

    def to_bytes(self):
        return self.header() + self.ciphertext + self.mac

    def __len__(self):
        return LINK_HEADER + COUNTER_BYTES + len(self.ciphertext) + MAC_BYTES

    @classmethod
    def from_bytes(cls, data):
        data = bytes(data)
        if len(data) < _HEADER.size + MAC_BYTES:
            raise MalformedFrame("frame shorter than %d bytes" % (_HEADER.size + MAC_BYTES))
        sender, msg_type, dest, s = _HEADER.unpack_from(data)
        return cls(sender, msg_type, s, data[_HEADER.size:-MAC_BYTES], data[-MAC_BYTES:], dest)


@lru_cache(maxsize=512)
def _cipher_for(key_bytes):
    return Serpent(key_bytes)


def as_cipher(key):
    """Accept raw key bytes or a ready Serpent instance."""
    if isinstance(key, Serpent):
        return key
    return _cipher_for(bytes(key))


def counter_block(s, t_blk):
    """Counter register: message counter s in bytes 0-1, block counter in 2-15."""
    if not 0 <= s <= MAX_COUNTER:
        raise ValueError("message counter must fit in 16 bits")
    if not 0 <= t_blk < 1 << 112:
        raise ValueError("block counter must fit in 112 bits")
    return s.to_bytes(2, "big") + t_blk.to_bytes(14, "big")


def ctr_crypt(key, s, data):
    """Encrypt or decrypt ``data`` in CTR mode under message counter ``s``."""
    if len(data) > MAX_PAYLOAD:
        raise ValueError("data longer than %d bytes" % MAX_PAYLOAD)
    if not 0 <= s <= MAX_COUNTER:
        raise ValueError("message counter must fit in 16 bits")
    return as_cipher(key).ctr_xor(s, data)


def cbc_mac(key, data):
    """First four bytes of the zero-IV CBC chain over zero-padded ``data``."""
    return as_cipher(key).cbc_mac(data)[:MAC_BYTES]


def _mac_input(sender, msg_type, dest, s, ciphertext):
    # the ciphertext length is bound in so zero padding cannot be extended
    return _HEADER.pack(sender, msg_type, dest, s) + len(ciphertext).to_bytes(2, "big") + ciphertext


def seal_with_counter(key, sender, msg_type, s, payload, dest=BROADCAST):
    """Build a frame with an explicit counter value; callers own uniqueness."""
    if msg_type not in MSG_TYPES:
        raise ValueError("unknown msg_type 0x%02x" % msg_type)
    if not 0 < s <= MAX_COUNTER:
        raise ValueError("counter out of range")
    cipher = as_cipher(key)
    ct = ctr_crypt(cipher, s, payload)
    mac = cbc_mac(cipher, _mac_input(sender, msg_type, dest, s, ct))
    return Frame(sender, msg_type, s, ct, mac, dest)


def seal(key, sender, msg_type, state, payload, dest=BROADCAST):
    """Seal ``payload`` with the next counter value from ``state``."""
    if state.s >= MAX_COUNTER:
        raise CounterExhausted("16-bit message counter exhausted; a new key is required")
    frame = seal_with_counter(key, sender, msg_type, state.s + 1, payload, dest)
    state.s += 1
    return frame


def verify(key, frame):
    """Raise BadMac unless the tag over header and ciphertext checks out."""
    expect = cbc_mac(key, _mac_input(frame.sender, frame.msg_type, frame.dest, frame.s, frame.ciphertext))
    if not hmac.compare_digest(expect, frame.mac):
        raise BadMac("authentication tag mismatch")


def open(key, frame, last_seen_s):
    """Authenticate, check freshness, and decrypt. Returns the payload.

    The tag is checked before the counter, so a tampered counter is reported
    as BadMac rather than Replay.
    """
    if isinstance(frame, (bytes, bytearray)):
        frame = Frame.from_bytes(frame)
    verify(key, frame)
    if frame.s <= last_seen_s:
        raise Replay("counter %d not above last seen %d" % (frame.s, last_seen_s))
    return ctr_crypt(key, frame.s, frame.ciphertext)


def blocks_used(payload_len):
    return (payload_len + BLOCK_SIZE - 1) // BLOCK_SIZE
