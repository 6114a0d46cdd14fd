"""Generated by tools/gen_sboxes.py from sensorsec.sboxes; do not edit."""


def s0(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p7 = p3 & x2
    p13 = p5 & x3
    p14 = p6 & x3
    return (
        (x0 ^ p3 ^ x2 ^ p5 ^ p6 ^ p7 ^ x3 ^ p13 ^ p14) ^ 0xFFFFFFFF,
        (x0 ^ p5 ^ p6 ^ p7 ^ p10 ^ p13 ^ p14) ^ 0xFFFFFFFF,
        x1 ^ p3 ^ p5 ^ p7 ^ x3 ^ p10 ^ p14,
        x0 ^ x1 ^ x2 ^ x3 ^ p9,
    )


def s1(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p11 = p3 & x3
    p13 = p5 & x3
    p14 = p6 & x3
    return (
        (x0 ^ x1 ^ p6 ^ p9 ^ p12 ^ p13 ^ p14) ^ 0xFFFFFFFF,
        (x0 ^ p3 ^ x2 ^ p5 ^ x3 ^ p10 ^ p11 ^ p13 ^ p14) ^ 0xFFFFFFFF,
        (x1 ^ p3 ^ x2 ^ x3) ^ 0xFFFFFFFF,
        (x1 ^ p5 ^ x3 ^ p9 ^ p11 ^ p13 ^ p14) ^ 0xFFFFFFFF,
    )


def s2(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p13 = p5 & x3
    return (
        x1 ^ x2 ^ p5 ^ x3,
        x0 ^ x1 ^ x2 ^ p6 ^ p7 ^ p9 ^ p11 ^ p12 ^ p13,
        x0 ^ x1 ^ p6 ^ x3 ^ p10 ^ p11 ^ p12 ^ p13,
        (x0 ^ x1 ^ x2 ^ p7 ^ p10) ^ 0xFFFFFFFF,
    )


def s3(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p13 = p5 & x3
    p14 = p6 & x3
    return (
        x0 ^ x1 ^ p6 ^ x3 ^ p9 ^ p12 ^ p13 ^ p14,
        x0 ^ x1 ^ p5 ^ p9 ^ p11 ^ p12 ^ p13,
        x0 ^ p3 ^ x2 ^ p7 ^ x3 ^ p10 ^ p11,
        x0 ^ x1 ^ p3 ^ x2 ^ p5 ^ p7 ^ x3 ^ p12 ^ p13,
    )


def s4(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p13 = p5 & x3
    p14 = p6 & x3
    return (
        (x1 ^ p3 ^ x2 ^ x3 ^ p9 ^ p10) ^ 0xFFFFFFFF,
        x0 ^ p5 ^ p6 ^ x3 ^ p10 ^ p12 ^ p13 ^ p14,
        x0 ^ p3 ^ x2 ^ p6 ^ p7 ^ p10 ^ p11 ^ p12 ^ p14,
        x0 ^ x1 ^ x2 ^ p6 ^ p9 ^ p10 ^ p11,
    )


def s5(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p13 = p5 & x3
    p14 = p6 & x3
    return (
        (x1 ^ p3 ^ x2 ^ x3 ^ p9 ^ p10) ^ 0xFFFFFFFF,
        (x0 ^ p3 ^ x2 ^ x3 ^ p10 ^ p11 ^ p12) ^ 0xFFFFFFFF,
        (x1 ^ p5 ^ x3 ^ p11 ^ p12 ^ p13 ^ p14) ^ 0xFFFFFFFF,
        (x0 ^ x1 ^ x2 ^ p7 ^ x3 ^ p9 ^ p13) ^ 0xFFFFFFFF,
    )


def s6(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p14 = p6 & x3
    return (
        (x0 ^ x1 ^ x2 ^ p5 ^ p6 ^ p7 ^ x3 ^ p11 ^ p14) ^ 0xFFFFFFFF,
        (x1 ^ x2 ^ p9) ^ 0xFFFFFFFF,
        (x0 ^ p3 ^ x2 ^ p6 ^ p7 ^ p10 ^ p11 ^ p12 ^ p14) ^ 0xFFFFFFFF,
        x1 ^ p3 ^ x2 ^ p5 ^ p7 ^ x3 ^ p12 ^ p14,
    )


def s7(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p13 = p5 & x3
    p14 = p6 & x3
    return (
        (p3 ^ x2 ^ p9 ^ p10 ^ p12 ^ p13 ^ p14) ^ 0xFFFFFFFF,
        x1 ^ p3 ^ x2 ^ p5 ^ p6 ^ x3 ^ p9 ^ p11 ^ p13,
        x0 ^ x1 ^ x2 ^ p7 ^ x3 ^ p9 ^ p10 ^ p11 ^ p14,
        x0 ^ x1 ^ x2 ^ p5 ^ p7 ^ p9,
    )


def si0(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p11 = p3 & x3
    p13 = p5 & x3
    p14 = p6 & x3
    return (
        (p3 ^ x2 ^ p6 ^ p9 ^ p10 ^ p11 ^ p12 ^ p13 ^ p14) ^ 0xFFFFFFFF,
        x0 ^ x1 ^ x2 ^ p5 ^ p10 ^ p13 ^ p14,
        (x0 ^ x1 ^ p3 ^ x2 ^ x3) ^ 0xFFFFFFFF,
        (x0 ^ p6 ^ x3 ^ p11 ^ p12 ^ p13 ^ p14) ^ 0xFFFFFFFF,
    )


def si1(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p7 = p3 & x2
    p13 = p5 & x3
    p14 = p6 & x3
    return (
        (x0 ^ x1 ^ p3 ^ p7 ^ p10 ^ p13 ^ p14) ^ 0xFFFFFFFF,
        x1 ^ x2 ^ p7 ^ x3 ^ p9 ^ p10 ^ p13 ^ p14,
        (x0 ^ x1 ^ p5 ^ p6 ^ p7 ^ x3 ^ p13) ^ 0xFFFFFFFF,
        x0 ^ x2 ^ x3 ^ p10,
    )


def si2(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p13 = p5 & x3
    return (
        x0 ^ x1 ^ x2 ^ p6 ^ p10,
        x1 ^ p3 ^ x2 ^ p9 ^ p11 ^ p12 ^ p13,
        (x0 ^ p3 ^ x2 ^ x3 ^ p9 ^ p10 ^ p11 ^ p13) ^ 0xFFFFFFFF,
        (p3 ^ p6 ^ p7 ^ x3 ^ p13) ^ 0xFFFFFFFF,
    )


def si3(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p13 = p5 & x3
    p14 = p6 & x3
    return (
        x0 ^ x2 ^ p6 ^ x3 ^ p9 ^ p10 ^ p14,
        x1 ^ x2 ^ p6 ^ p7 ^ x3 ^ p9 ^ p13 ^ p14,
        p3 ^ p5 ^ p6 ^ p9 ^ p10 ^ p11 ^ p12 ^ p13,
        x0 ^ x1 ^ x2 ^ p5 ^ p7 ^ p9 ^ p11 ^ p12,
    )


def si4(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p13 = p5 & x3
    return (
        (x0 ^ x1 ^ x2 ^ x3 ^ p9 ^ p11 ^ p12 ^ p13) ^ 0xFFFFFFFF,
        p3 ^ x2 ^ p5 ^ x3 ^ p9 ^ p13,
        (x0 ^ x1 ^ p3 ^ x2 ^ p5 ^ p7 ^ x3 ^ p10 ^ p11) ^ 0xFFFFFFFF,
        x1 ^ p3 ^ x2 ^ p9 ^ p11 ^ p12,
    )


def si5(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p13 = p5 & x3
    return (
        x0 ^ p6 ^ x3 ^ p11,
        x0 ^ x1 ^ p5 ^ p6 ^ p7 ^ x3 ^ p9 ^ p11,
        x0 ^ p3 ^ x2 ^ p10 ^ p11 ^ p13,
        (x1 ^ p3 ^ x2 ^ p7 ^ p9) ^ 0xFFFFFFFF,
    )


def si6(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p14 = p6 & x3
    return (
        (x0 ^ p3 ^ p5 ^ p6 ^ p7 ^ x3 ^ p11 ^ p14) ^ 0xFFFFFFFF,
        (x1 ^ x2 ^ p5 ^ x3) ^ 0xFFFFFFFF,
        (x0 ^ x1 ^ p6 ^ p10 ^ p11 ^ p12 ^ p14) ^ 0xFFFFFFFF,
        (x1 ^ p3 ^ x2 ^ p6 ^ p7 ^ x3 ^ p9 ^ p11 ^ p12 ^ p14) ^ 0xFFFFFFFF,
    )


def si7(x0, x1, x2, x3):
    p3 = x0 & x1
    p5 = x0 & x2
    p6 = x1 & x2
    p9 = x0 & x3
    p10 = x1 & x3
    p12 = x2 & x3
    p7 = p3 & x2
    p11 = p3 & x3
    p13 = p5 & x3
    p14 = p6 & x3
    return (
        (x0 ^ x1 ^ p6 ^ p10 ^ p11 ^ p12 ^ p14) ^ 0xFFFFFFFF,
        (x0 ^ x2 ^ p6 ^ x3 ^ p9 ^ p10 ^ p13 ^ p14) ^ 0xFFFFFFFF,
        x1 ^ p5 ^ x3 ^ p11 ^ p12 ^ p13,
        p3 ^ x2 ^ p7 ^ p9 ^ p10 ^ p11,
    )


SBOX_FUNCS = (s0, s1, s2, s3, s4, s5, s6, s7)
SBOX_INV_FUNCS = (si0, si1, si2, si3, si4, si5, si6, si7)
