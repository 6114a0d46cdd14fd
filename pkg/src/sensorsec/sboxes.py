"""Serpent S-box tables and their algebraic normal form.

The round function never indexes these tables; the bitsliced kernels use
straight-line AND/XOR code generated from the ANF by tools/gen_sboxes.py.
The tables stay here as the source of truth and for the generator's tests.
"""

SBOX = (
    (3, 8, 15, 1, 10, 6, 5, 11, 14, 13, 4, 2, 7, 0, 9, 12),
    (15, 12, 2, 7, 9, 0, 5, 10, 1, 11, 14, 8, 6, 13, 3, 4),
    (8, 6, 7, 9, 3, 12, 10, 15, 13, 1, 14, 4, 0, 11, 5, 2),
    (0, 15, 11, 8, 12, 9, 6, 3, 13, 1, 2, 4, 10, 7, 5, 14),
    (1, 15, 8, 3, 12, 0, 11, 6, 2, 5, 4, 10, 9, 14, 7, 13),
    (15, 5, 2, 11, 4, 10, 9, 12, 0, 3, 14, 8, 13, 6, 7, 1),
    (7, 2, 12, 5, 8, 4, 6, 11, 14, 9, 1, 15, 13, 3, 10, 0),
    (1, 13, 15, 0, 14, 8, 2, 11, 7, 4, 12, 10, 9, 3, 5, 6),
)


def _invert(box):
    inv = [0] * 16
    for i, v in enumerate(box):
        inv[v] = i
    return tuple(inv)


SBOX_INV = tuple(_invert(box) for box in SBOX)


def anf(box):
    """Return, per output bit, the sorted list of input monomials.

    A monomial is a 4-bit mask over the input bits; mask 0 is the constant 1.
    """
    out = []
    for bit in range(4):
        coeffs = [(box[x] >> bit) & 1 for x in range(16)]
        # Moebius transform over GF(2)
        for i in range(4):
            step = 1 << i
            for x in range(16):
                if x & step:
                    coeffs[x] ^= coeffs[x ^ step]
        out.append([m for m in range(16) if coeffs[m]])
    return out


def apply_bitsliced_reference(box, x0, x1, x2, x3):
    """Slow per-bit table application, used only to check generated code."""
    y = [0, 0, 0, 0]
    for k in range(32):
        nib = ((x0 >> k) & 1) | ((x1 >> k) & 1) << 1 | ((x2 >> k) & 1) << 2 | ((x3 >> k) & 1) << 3
        v = box[nib]
        for j in range(4):
            y[j] |= ((v >> j) & 1) << k
    return tuple(y)
