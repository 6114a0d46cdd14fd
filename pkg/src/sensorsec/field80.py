"""Arithmetic in GF(p) for the 80-bit generalized Mersenne prime
p = 2**80 - 2**64 - 2**32 - 1.

Field elements are plain ints kept fully reduced in [0, p). Products of a
16-bit node ID and an element fit in 96 bits and are reduced by folding the
top 16-bit limb: since 2**80 = 2**64 + 2**32 + 1 (mod p), the limb r5 of
r = sum(r_i * 2**(16 i)) re-enters as r5 * (2**64 + 2**32 + 1).
"""

from . import backend

P = (1 << 80) - (1 << 64) - (1 << 32) - 1
ELEMENT_BYTES = 10
MAX_ID = 1 << 16

_MASK80 = (1 << 80) - 1
_MASK96 = (1 << 96) - 1


class FieldError(ValueError):
    pass


class ZeroInverse(FieldError, ZeroDivisionError):
    pass


class EmptyPolynomial(FieldError):
    pass


class InvalidId(FieldError):
    pass


def check_id(node_id):
    """Validate a node identity, 0 < id < 2**16."""
    if not isinstance(node_id, int) or not 0 < node_id < MAX_ID:
        raise InvalidId("node id must satisfy 0 < id < 65536, got %r" % (node_id,))
    return node_id


def fe_add(a, b):
    s = a + b
    if s >= P:
        s -= P
    return s


def fe_sub(a, b):
    d = a - b
    if d < 0:
        d += P
    return d


def fe_neg(a):
    return P - a if a else 0


def fe_reduce96(r):
    """Reduce 0 <= r < 2**96 modulo p with one addition and <= 2 subtractions."""
    if not 0 <= r <= _MASK96:
        raise FieldError("fe_reduce96 input must be in [0, 2**96)")
    s = r & _MASK80
    r5 = r >> 80
    v = s + ((r5 << 64) | (r5 << 32) | r5)
    if v >= P:
        v -= P
        if v >= P:
            v -= P
    return v


def fe_mul_small(node_id, a):
    """(id * a) mod p for a 16-bit id: 16x80-bit product, then fe_reduce96."""
    check_id(node_id)
    return fe_reduce96(node_id * a)


def fe_mul(a, b):
    """General product. The 160-bit product is folded 80 bits at a time
    until it fits in 96 bits, then finished by fe_reduce96."""
    r = a * b
    while r > _MASK96:
        hi = r >> 80
        r = (r & _MASK80) + (hi << 64) + (hi << 32) + hi
    return fe_reduce96(r)


def fe_pow(a, e):
    result = 1
    while e:
        if e & 1:
            result = fe_mul(result, a)
        a = fe_mul(a, a)
        e >>= 1
    return result


def fe_inv(a):
    """Inverse by Fermat: a**(p-2)."""
    if a % P == 0:
        raise ZeroInverse("zero has no inverse in GF(p)")
    return fe_pow(a, P - 2)


def horner_eval_py(coeffs, x):
    """Reference-path Horner evaluation using only fe_mul_small and fe_add."""
    if not coeffs:
        raise EmptyPolynomial("cannot evaluate an empty polynomial")
    check_id(x)
    acc = coeffs[0]
    for c in coeffs[1:]:
        acc = fe_add(fe_mul_small(x, acc), c)
    return acc


def horner_eval(coeffs, x):
    """Evaluate sum(a_i x**i) given ``coeffs`` ordered a_t .. a_0.

    ``x`` is a node id, so every step is a short-by-long multiply. Dispatches
    to the selected kernel backend, which runs the same fold-and-add loop.
    """
    if not coeffs:
        raise EmptyPolynomial("cannot evaluate an empty polynomial")
    check_id(x)
    return backend.kernels.horner(coeffs, x)


def encode(a):
    """Canonical 10-byte little-endian encoding."""
    if not 0 <= a < P:
        raise FieldError("value is not a reduced field element")
    return a.to_bytes(ELEMENT_BYTES, "little")


def decode(data):
    if len(data) != ELEMENT_BYTES:
        raise FieldError("field elements are encoded in exactly 10 bytes")
    v = int.from_bytes(data, "little")
    if v >= P:
        raise FieldError("encoding is not canonical (value >= p)")
    return v


def is_element(a):
    return isinstance(a, int) and 0 <= a < P
