"""Frame sealing: layout, overhead, tamper and replay rejection."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sensorsec import secmsg
from sensorsec.cipher import Serpent
from sensorsec.secmsg import (
    DATA,
    KEY_REQUEST,
    LINK_HEADER,
    OVERHEAD,
    BadMac,
    CounterExhausted,
    CounterState,
    Frame,
    MalformedFrame,
    Replay,
    cbc_mac,
    counter_block,
    ctr_crypt,
)

KEY = bytes(range(10))


def test_counter_block_layout():
    assert counter_block(1, 0) == bytes.fromhex("0001" + "00" * 14)
    assert counter_block(0xABCD, 2) == bytes.fromhex("abcd" + "00" * 13 + "02")


def test_counter_block_injective():
    blocks = {counter_block(s, t) for s in range(16) for t in range(16)}
    assert len(blocks) == 256


def test_counter_block_range():
    with pytest.raises(ValueError):
        counter_block(1 << 16, 0)
    with pytest.raises(ValueError):
        counter_block(0, 1 << 112)


def test_ctr_involution_and_empty(rng):
    for n in (0, 1, 15, 16, 17, 100):
        m = rng.randbytes(n)
        c = ctr_crypt(KEY, 9, m)
        assert len(c) == n
        assert ctr_crypt(KEY, 9, c) == m
    assert ctr_crypt(KEY, 1, b"") == b""


def test_ctr_keystream_blocks():
    c = Serpent(KEY)
    ks = ctr_crypt(KEY, 5, bytes(17))
    assert ks[:16] == c.encrypt_block(counter_block(5, 0))
    assert ks[16:] == c.encrypt_block(counter_block(5, 1))[:1]
    assert secmsg.blocks_used(17) == 2


def test_ctr_counters_give_distinct_streams():
    assert ctr_crypt(KEY, 1, bytes(16)) != ctr_crypt(KEY, 2, bytes(16))


def test_mac_single_block():
    data = bytes(range(16))
    assert cbc_mac(KEY, data) == Serpent(KEY).encrypt_block(data)[:4]
    short = b"abc"
    assert cbc_mac(KEY, short) == Serpent(KEY).encrypt_block(short + bytes(13))[:4]


def test_mac_chains():
    c = Serpent(KEY)
    a, b = bytes(range(16)), bytes(range(16, 32))
    x = c.encrypt_block(a)
    want = c.encrypt_block(bytes(i ^ j for i, j in zip(x, b)))[:4]
    assert cbc_mac(KEY, a + b) == want


def test_mac_bit_flip_sweep_320():
    data = bytes(range(40))
    tag = cbc_mac(KEY, data)
    for bit in range(320):
        flipped = bytearray(data)
        flipped[bit // 8] ^= 1 << (bit % 8)
        assert cbc_mac(KEY, bytes(flipped)) != tag, bit


def test_mac_key_dependent():
    assert cbc_mac(KEY, b"hello") != cbc_mac(bytes(10), b"hello")


def test_frame_sizes():
    st_ = CounterState()
    assert len(secmsg.seal(KEY, 7, DATA, st_, bytes(16)).to_bytes()) == 27
    empty = secmsg.seal(KEY, 7, DATA, st_, b"")
    assert len(empty.to_bytes()) == 11
    assert secmsg.open(KEY, empty, 0) == b""


def test_overhead_every_length():
    st_ = CounterState()
    for n in range(513):
        wire = secmsg.seal(KEY, 1, DATA, st_, bytes(n)).to_bytes()
        assert len(wire) - LINK_HEADER - n == OVERHEAD == 6


def test_wire_layout():
    f = secmsg.seal_with_counter(KEY, 0x0102, KEY_REQUEST, 0x0304, b"x" * 10, dest=0x0506)
    wire = f.to_bytes()
    assert wire[:7] == bytes.fromhex("01020205060304")
    assert wire[7:-4] == f.ciphertext
    assert Frame.from_bytes(wire) == f


def test_consecutive_counters():
    st_ = CounterState()
    a = secmsg.seal(KEY, 1, DATA, st_, b"a")
    b = secmsg.seal(KEY, 1, DATA, st_, b"b")
    assert (a.s, b.s) == (1, 2)


def test_counter_exhaustion():
    st_ = CounterState(secmsg.MAX_COUNTER - 1)
    assert secmsg.seal(KEY, 1, DATA, st_, b"a").s == secmsg.MAX_COUNTER
    with pytest.raises(CounterExhausted):
        secmsg.seal(KEY, 1, DATA, st_, b"b")
    assert st_.s == secmsg.MAX_COUNTER


def test_seal_rejects_bad_type_and_counter():
    with pytest.raises(ValueError):
        secmsg.seal_with_counter(KEY, 1, 9, 1, b"a")
    with pytest.raises(ValueError):
        secmsg.seal_with_counter(KEY, 1, DATA, 0, b"a")


@given(st.binary(max_size=200))
def test_open_roundtrip(payload):
    f = secmsg.seal(KEY, 3, DATA, CounterState(), payload)
    assert secmsg.open(KEY, f, 0) == payload
    assert secmsg.open(KEY, f.to_bytes(), 0) == payload


def test_replay_rejected():
    f = secmsg.seal(KEY, 3, DATA, CounterState(), b"hello")
    assert secmsg.open(KEY, f, 0) == b"hello"
    with pytest.raises(Replay):
        secmsg.open(KEY, f, f.s)
    with pytest.raises(Replay):
        secmsg.open(KEY, f, f.s + 10)


def test_wrong_key_is_bad_mac():
    f = secmsg.seal(KEY, 3, DATA, CounterState(), b"hello")
    with pytest.raises(BadMac):
        secmsg.open(bytes(10), f, 0)


def test_bit_flip_sweep_216():
    wire = secmsg.seal(KEY, 0x1234, DATA, CounterState(41), bytes(range(16))).to_bytes()
    assert len(wire) == 27
    for bit in range(27 * 8):
        raw = bytearray(wire)
        raw[bit // 8] ^= 1 << (bit % 8)
        with pytest.raises(BadMac):
            secmsg.open(KEY, bytes(raw), 0)


def test_truncated_and_extended_frames_rejected():
    wire = secmsg.seal(KEY, 1, DATA, CounterState(), bytes(16)).to_bytes()
    with pytest.raises(MalformedFrame):
        Frame.from_bytes(wire[:10])
    for bad in (wire[:-1], wire + b"\x00", wire[:11] + bytes(16) + wire[-4:]):
        with pytest.raises(BadMac):
            secmsg.open(KEY, bad, 0)


def test_zero_extension_does_not_verify():
    # a 15-byte and a zero-extended 16-byte ciphertext pad to the same block
    f = secmsg.seal(KEY, 1, DATA, CounterState(), bytes(15))
    longer = Frame(f.sender, f.msg_type, f.s, f.ciphertext + b"\x00", f.mac, f.dest)
    with pytest.raises(BadMac):
        secmsg.verify(KEY, longer)


def test_header_fields_are_authenticated():
    f = secmsg.seal(KEY, 1, DATA, CounterState(), b"payload")
    for changed in (
        Frame(2, f.msg_type, f.s, f.ciphertext, f.mac, f.dest),
        Frame(f.sender, KEY_REQUEST, f.s, f.ciphertext, f.mac, f.dest),
        Frame(f.sender, f.msg_type, f.s + 1, f.ciphertext, f.mac, f.dest),
        Frame(f.sender, f.msg_type, f.s, f.ciphertext, f.mac, 9),
    ):
        with pytest.raises(BadMac):
            secmsg.verify(KEY, changed)


def test_tampered_counter_is_bad_mac_not_replay():
    f = secmsg.seal(KEY, 1, DATA, CounterState(10), b"payload")
    lowered = Frame(f.sender, f.msg_type, 1, f.ciphertext, f.mac)
    with pytest.raises(BadMac):
        secmsg.open(KEY, lowered, 5)


def test_accepts_serpent_instance():
    c = Serpent(KEY)
    f = secmsg.seal(c, 1, DATA, CounterState(), b"abc")
    assert secmsg.open(KEY, f, 0) == b"abc"
