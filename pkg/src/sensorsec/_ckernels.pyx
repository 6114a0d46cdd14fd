# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``sensorsec._pykernels`` exactly."""

from libc.stdint cimport uint32_t, uint64_t
from libc.string cimport memcpy, memset
from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING

cdef extern from *:
    """
    typedef unsigned __int128 ss_u128;
    """
    ctypedef unsigned long long ss_u128

include "_sbox_c.pxi"

NAME = "native"

cdef uint64_t MASK64 = 0xFFFFFFFFFFFFFFFFULL
P = (1 << 80) - (1 << 64) - (1 << 32) - 1


cdef inline uint32_t rol(uint32_t x, int n) noexcept nogil:
    return (x << n) | (x >> (32 - n))


cdef inline uint32_t ror(uint32_t x, int n) noexcept nogil:
    return (x >> n) | (x << (32 - n))


cdef inline uint32_t load32(const unsigned char *b) noexcept nogil:
    return <uint32_t>b[0] | (<uint32_t>b[1] << 8) | (<uint32_t>b[2] << 16) | (<uint32_t>b[3] << 24)


cdef inline void store32(unsigned char *b, uint32_t v) noexcept nogil:
    b[0] = v & 0xFF
    b[1] = (v >> 8) & 0xFF
    b[2] = (v >> 16) & 0xFF
    b[3] = (v >> 24) & 0xFF


cdef class PreparedKey:
    cdef uint32_t sk[33][4]
    cdef readonly int rounds


def prepare(words, int rounds):
    if len(words) != 4 * (rounds + 1):
        raise ValueError("expected %d subkey words, got %d" % (4 * (rounds + 1), len(words)))
    if rounds < 1 or rounds > 32:
        raise ValueError("rounds out of range")
    cdef PreparedKey pk = PreparedKey()
    pk.rounds = rounds
    cdef int i
    for i in range(4 * (rounds + 1)):
        pk.sk[i // 4][i % 4] = words[i]
    return pk


cdef void enc_words(PreparedKey pk, uint32_t *x) noexcept nogil:
    cdef int i, j
    cdef int last = pk.rounds - 1
    for i in range(pk.rounds):
        for j in range(4):
            x[j] ^= pk.sk[i][j]
        sbox(i & 7, x)
        if i < last:
            x[0] = rol(x[0], 13)
            x[2] = rol(x[2], 3)
            x[1] ^= x[0] ^ x[2]
            x[3] ^= x[2] ^ (x[0] << 3)
            x[1] = rol(x[1], 1)
            x[3] = rol(x[3], 7)
            x[0] ^= x[1] ^ x[3]
            x[2] ^= x[3] ^ (x[1] << 7)
            x[0] = rol(x[0], 5)
            x[2] = rol(x[2], 22)
    for j in range(4):
        x[j] ^= pk.sk[pk.rounds][j]


cdef void dec_words(PreparedKey pk, uint32_t *x) noexcept nogil:
    cdef int i, j
    for j in range(4):
        x[j] ^= pk.sk[pk.rounds][j]
    i = pk.rounds - 1
    while i >= 0:
        if i < pk.rounds - 1:
            x[2] = ror(x[2], 22)
            x[0] = ror(x[0], 5)
            x[2] ^= x[3] ^ (x[1] << 7)
            x[0] ^= x[1] ^ x[3]
            x[3] = ror(x[3], 7)
            x[1] = ror(x[1], 1)
            x[3] ^= x[2] ^ (x[0] << 3)
            x[1] ^= x[0] ^ x[2]
            x[2] = ror(x[2], 3)
            x[0] = ror(x[0], 13)
        sibox(i & 7, x)
        for j in range(4):
            x[j] ^= pk.sk[i][j]
        i -= 1


cdef inline void load_block(const unsigned char *b, uint32_t *x) noexcept nogil:
    cdef int j
    for j in range(4):
        x[j] = load32(b + 4 * j)


cdef inline void store_block(unsigned char *b, uint32_t *x) noexcept nogil:
    cdef int j
    for j in range(4):
        store32(b + 4 * j, x[j])


def encrypt_block(PreparedKey pk, bytes block):
    if len(block) != 16:
        raise ValueError("block must be 16 bytes")
    cdef uint32_t x[4]
    load_block(<const unsigned char *>PyBytes_AS_STRING(block), x)
    enc_words(pk, x)
    out = PyBytes_FromStringAndSize(NULL, 16)
    store_block(<unsigned char *>PyBytes_AS_STRING(out), x)
    return out


def decrypt_block(PreparedKey pk, bytes block):
    if len(block) != 16:
        raise ValueError("block must be 16 bytes")
    cdef uint32_t x[4]
    load_block(<const unsigned char *>PyBytes_AS_STRING(block), x)
    dec_words(pk, x)
    out = PyBytes_FromStringAndSize(NULL, 16)
    store_block(<unsigned char *>PyBytes_AS_STRING(out), x)
    return out


def ctr_xor(PreparedKey pk, unsigned int s, bytes data):
    if s > 0xFFFF:
        raise OverflowError("message counter exceeds 16 bits")
    cdef Py_ssize_t n = len(data)
    out = PyBytes_FromStringAndSize(NULL, n)
    cdef const unsigned char *src = <const unsigned char *>PyBytes_AS_STRING(data)
    cdef unsigned char *dst = <unsigned char *>PyBytes_AS_STRING(out)
    cdef unsigned char ctr[16]
    cdef unsigned char ks[16]
    cdef uint32_t x[4]
    cdef Py_ssize_t j, i, base, take
    cdef uint64_t jj
    for j in range((n + 15) // 16):
        memset(ctr, 0, 16)
        ctr[0] = (s >> 8) & 0xFF
        ctr[1] = s & 0xFF
        jj = <uint64_t>j
        for i in range(8):
            ctr[15 - i] = (jj >> (8 * i)) & 0xFF
        load_block(ctr, x)
        enc_words(pk, x)
        store_block(ks, x)
        base = 16 * j
        take = n - base
        if take > 16:
            take = 16
        for i in range(take):
            dst[base + i] = src[base + i] ^ ks[i]
    return out


def cbc_mac(PreparedKey pk, bytes data):
    cdef Py_ssize_t n = len(data)
    cdef const unsigned char *src = <const unsigned char *>PyBytes_AS_STRING(data)
    cdef Py_ssize_t nblocks = (n + 15) // 16
    if nblocks == 0:
        nblocks = 1
    cdef uint32_t y[4]
    cdef unsigned char buf[16]
    cdef uint32_t m[4]
    cdef Py_ssize_t b, take, j
    y[0] = y[1] = y[2] = y[3] = 0
    for b in range(nblocks):
        memset(buf, 0, 16)
        take = n - 16 * b
        if take > 16:
            take = 16
        if take > 0:
            memcpy(buf, src + 16 * b, take)
        load_block(buf, m)
        for j in range(4):
            y[j] ^= m[j]
        enc_words(pk, y)
    out = PyBytes_FromStringAndSize(NULL, 16)
    store_block(<unsigned char *>PyBytes_AS_STRING(out), y)
    return out


cdef ss_u128 P128 = ((<ss_u128>0xFFFE) << 64) | <ss_u128>0xFFFFFFFEFFFFFFFFULL
cdef ss_u128 MASK80_128 = ((<ss_u128>0xFFFF) << 64) | <ss_u128>0xFFFFFFFFFFFFFFFFULL


cdef inline ss_u128 c_reduce96(ss_u128 r) noexcept nogil:
    cdef ss_u128 r5 = r >> 80
    cdef ss_u128 v = (r & MASK80_128) + (r5 << 64) + (r5 << 32) + r5
    if v >= P128:
        v -= P128
        if v >= P128:
            v -= P128
    return v


cdef inline ss_u128 to_u128(object v) except *:
    return ((<ss_u128>(<uint64_t>(v >> 64))) << 64) | <ss_u128>(<uint64_t>(v & 0xFFFFFFFFFFFFFFFF))


cdef inline object from_u128(ss_u128 v):
    return (int(<uint64_t>(v >> 64)) << 64) | int(<uint64_t>(v & MASK64))


def reduce96(r):
    if r < 0 or r >> 96:
        raise ValueError("reduce96 input must be in [0, 2**96)")
    return from_u128(c_reduce96(to_u128(r)))


def horner(coeffs, unsigned int x):
    """Evaluate a polynomial given highest coefficient first at small ``x``."""
    if x > 0xFFFF:
        raise OverflowError("x must fit in 16 bits")
    cdef ss_u128 acc = 0
    cdef ss_u128 c
    for coeff in coeffs:
        c = to_u128(coeff)
        acc = c_reduce96(acc * x) + c
        if acc >= P128:
            acc -= P128
    return from_u128(acc)
