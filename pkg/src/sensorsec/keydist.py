"""Symmetric bivariate polynomial key predistribution.

The CA draws f(x, y) = sum a_ij x^i y^j over GF(p) with a_ij = a_ji and
hands node ID the univariate share g_ID(x) = f(x, ID). Two nodes A, B agree
on g_A(B) = f(B, A) = f(A, B) = g_B(A). Any t+1 shares determine f.
"""

import hashlib
import struct
from dataclasses import dataclass, field

from .field80 import (
    ELEMENT_BYTES,
    P,
    check_id,
    decode,
    encode,
    fe_add,
    fe_inv,
    fe_mul,
    fe_sub,
    horner_eval,
)

MAX_DEGREE = 1000
MASTER_MAGIC = b"BMK1"
SHARE_MAGIC = b"BSH1"
FORMAT_VERSION = 1


class KeyDistError(ValueError):
    pass


class DegreeOutOfRange(KeyDistError):
    pass


class DuplicateId(KeyDistError):
    pass


class SelfPairing(KeyDistError):
    pass


class InsufficientShares(KeyDistError):
    pass


class InconsistentShares(KeyDistError):
    pass


class FormatError(KeyDistError):
    pass


class SeededStream:
    """Deterministic byte stream: SHA-256(seed || counter) blocks."""

    def __init__(self, seed):
        self._seed = bytes(seed)
        self._counter = 0
        self._buf = b""

    def read(self, n):
        while len(self._buf) < n:
            block = hashlib.sha256(self._seed + self._counter.to_bytes(8, "little")).digest()
            self._buf += block
            self._counter += 1
        out, self._buf = self._buf[:n], self._buf[n:]
        return out

    def field_element(self):
        # rejection sampling keeps the draw exactly uniform over [0, p)
        while True:
            v = int.from_bytes(self.read(ELEMENT_BYTES), "little")
            if v < P:
                return v


@dataclass
class MasterPolynomial:
    degree: int
    coeffs: list
    issued_ids: set = field(default_factory=set)

    def __post_init__(self):
        n = self.degree + 1
        if len(self.coeffs) != n or any(len(row) != n for row in self.coeffs):
            raise KeyDistError("coefficient matrix must be (t+1)x(t+1)")

    def is_symmetric(self):
        n = self.degree + 1
        return all(self.coeffs[i][j] == self.coeffs[j][i] for i in range(n) for j in range(i + 1, n))

    def evaluate(self, x, y):
        """f(x, y) by nested Horner; an oracle path independent of shares."""
        acc = 0
        for row in reversed(self.coeffs):
            inner = 0
            for a in reversed(row):
                inner = fe_add(fe_mul(inner, y), a)
            acc = fe_add(fe_mul(acc, x), inner)
        return acc

    def to_bytes(self):
        out = [MASTER_MAGIC, bytes([FORMAT_VERSION]), struct.pack("<H", self.degree)]
        for row in self.coeffs:
            out.extend(encode(a) for a in row)
        ids = sorted(self.issued_ids)
        out.append(struct.pack("<H", len(ids)))
        out.extend(struct.pack("<H", i) for i in ids)
        return b"".join(out)

    @classmethod
    def from_bytes(cls, data):
        if len(data) < 7 or data[:4] != MASTER_MAGIC:
            raise FormatError("not a BMK1 master file")
        if data[4] != FORMAT_VERSION:
            raise FormatError("unsupported master file version %d" % data[4])
        (t,) = struct.unpack_from("<H", data, 5)
        if not 1 <= t <= MAX_DEGREE:
            raise FormatError("degree %d out of range" % t)
        n = t + 1
        off = 7
        end = off + n * n * ELEMENT_BYTES
        if len(data) < end + 2:
            raise FormatError("master file truncated")
        flat = [decode(data[i:i + ELEMENT_BYTES]) for i in range(off, end, ELEMENT_BYTES)]
        (count,) = struct.unpack_from("<H", data, end)
        if len(data) != end + 2 + 2 * count:
            raise FormatError("issued-id trailer has the wrong length")
        ids = set(struct.unpack_from("<%dH" % count, data, end + 2))
        master = cls(t, [flat[i * n:(i + 1) * n] for i in range(n)], ids)
        if not master.is_symmetric():
            raise FormatError("master coefficients are not symmetric")
        return master


@dataclass(frozen=True)
class NodeShare:
    """g_ID coefficients, constant term first."""

    id: int
    coeffs: tuple

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient_bytes(self):
        return b"".join(encode(c) for c in self.coeffs)

    def to_bytes(self):
        return b"".join([
            SHARE_MAGIC,
            bytes([FORMAT_VERSION]),
            struct.pack("<HH", self.id, self.degree),
            self.coefficient_bytes(),
        ])

    @classmethod
    def from_bytes(cls, data):
        if len(data) < 9 or data[:4] != SHARE_MAGIC:
            raise FormatError("not a BSH1 share file")
        if data[4] != FORMAT_VERSION:
            raise FormatError("unsupported share file version %d" % data[4])
        node_id, t = struct.unpack_from("<HH", data, 5)
        if len(data) != 9 + (t + 1) * ELEMENT_BYTES:
            raise FormatError("share file has the wrong length")
        check_id(node_id)
        coeffs = tuple(decode(data[i:i + ELEMENT_BYTES]) for i in range(9, len(data), ELEMENT_BYTES))
        return cls(node_id, coeffs)


def ca_generate(t, seed):
    """Draw a random symmetric master polynomial of degree ``t`` from ``seed``."""
    if not isinstance(t, int) or not 1 <= t <= MAX_DEGREE:
        raise DegreeOutOfRange("degree must satisfy 1 <= t <= %d, got %r" % (MAX_DEGREE, t))
    stream = SeededStream(b"sensorsec/master" + bytes(seed))
    n = t + 1
    coeffs = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            coeffs[i][j] = coeffs[j][i] = stream.field_element()
    return MasterPolynomial(t, coeffs)


def derive_share(master, node_id):
    check_id(node_id)
    if node_id in master.issued_ids:
        raise DuplicateId("id %d has already been provisioned" % node_id)
    coeffs = tuple(horner_eval(row[::-1], node_id) for row in master.coeffs)
    master.issued_ids.add(node_id)
    return NodeShare(node_id, coeffs)


def pairwise_secret(share, peer):
    check_id(peer)
    if peer == share.id:
        raise SelfPairing("a node has no pairwise secret with itself")
    return horner_eval(share.coeffs[::-1], peer)


def secret_key_bytes(secret):
    """80-bit pairwise secret as a 10-byte cipher key."""
    return encode(secret)


def _lagrange_basis(xs):
    """Coefficient lists (constant first) of the Lagrange basis polynomials."""
    n = len(xs)
    # full product prod (y - x_k)
    full = [1]
    for xk in xs:
        nxt = [0] * (len(full) + 1)
        for d, c in enumerate(full):
            nxt[d + 1] = fe_add(nxt[d + 1], c)
            nxt[d] = fe_sub(nxt[d], fe_mul(c, xk))
        full = nxt
    basis = []
    for k, xk in enumerate(xs):
        # synthetic division of the full product by (y - x_k)
        quot = [0] * n
        carry = 0
        for d in range(n, 0, -1):
            carry = fe_add(full[d], fe_mul(carry, xk))
            quot[d - 1] = carry
        denom = 1
        for m, xm in enumerate(xs):
            if m != k:
                denom = fe_mul(denom, fe_sub(xk, xm))
        scale = fe_inv(denom)
        basis.append([fe_mul(q, scale) for q in quot])
    return basis


def reconstruct_master(shares, degree=None):
    """Interpolate the master polynomial from at least t+1 distinct shares.

    Row i of the matrix is the degree-t polynomial ID -> coefficient i of
    g_ID, recovered by Lagrange interpolation through t+1 sample IDs. Extra
    shares beyond t+1 are checked against the result.
    """
    shares = list(shares)
    if not shares:
        raise InsufficientShares("no shares given")
    t = shares[0].degree if degree is None else degree
    if any(s.degree != t for s in shares):
        raise InconsistentShares("shares have different degrees")
    if len({s.id for s in shares}) != len(shares):
        raise InconsistentShares("shares must come from distinct ids")
    if len(shares) < t + 1:
        raise InsufficientShares("need %d shares for degree %d, have %d" % (t + 1, t, len(shares)))
    used = shares[:t + 1]
    basis = _lagrange_basis([s.id for s in used])
    n = t + 1
    coeffs = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = 0
            for k, s in enumerate(used):
                acc = fe_add(acc, fe_mul(basis[k][j], s.coeffs[i]))
            coeffs[i][j] = acc
    master = MasterPolynomial(t, coeffs, {s.id for s in shares})
    if not master.is_symmetric():
        raise InconsistentShares("interpolated matrix is not symmetric")
    for s in shares[t + 1:]:
        expect = tuple(horner_eval(row[::-1], s.id) for row in coeffs)
        if expect != s.coeffs:
            raise InconsistentShares("share %d disagrees with the interpolated master" % s.id)
    return master


def candidate_master(shares, degree, rng):
    """Adversary's best guess at the master from at most t shares.

    Fresh ids are fabricated until t+1 shares exist. A fabricated share's
    values at every id already held are forced by symmetry
    (g_z(a) = g_a(z)); the remaining values are random guesses. Pairwise
    consistent shares on t+1 ids always interpolate to a symmetric master,
    so the result is a valid candidate, just (almost surely) not the real one.
    """
    held = list(shares)
    if len(held) > degree:
        raise KeyDistError("with more than t shares use reconstruct_master")
    taken = {s.id for s in held}

    def fresh_id():
        while True:
            v = rng.randrange(1, 1 << 16)
            if v not in taken:
                taken.add(v)
                return v

    while len(held) < degree + 1:
        z = fresh_id()
        xs = [s.id for s in held] + [z]
        ys = [pairwise_secret(s, z) for s in held] + [rng.randrange(P)]
        while len(xs) < degree + 1:
            xs.append(fresh_id())
            ys.append(rng.randrange(P))
        basis = _lagrange_basis(xs)
        gz = []
        for j in range(degree + 1):
            acc = 0
            for k in range(degree + 1):
                acc = fe_add(acc, fe_mul(basis[k][j], ys[k]))
            gz.append(acc)
        held.append(NodeShare(z, tuple(gz)))
    return reconstruct_master(held, degree)
