#!/usr/bin/env python3
"""Generate straight-line bitsliced S-box code for both kernel backends.

Usage: python tools/gen_sboxes.py   (rewrites src/sensorsec/_sbox_py.py and _sbox_c.pxi)
"""
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
PKG = os.path.join(HERE, "..", "src", "sensorsec")
sys.path.insert(0, os.path.join(HERE, "..", "src"))

from sensorsec.sboxes import SBOX, SBOX_INV, anf  # noqa: E402

HEADER = "Generated by tools/gen_sboxes.py from sensorsec.sboxes; do not edit."


def _products(monos):
    """Ordered list of (mask, expr) for every product of >= 2 inputs needed."""
    need = set()
    for m in monos:
        while bin(m).count("1") >= 2:
            need.add(m)
            m &= ~(1 << (m.bit_length() - 1))
    lines = []
    for m in sorted(need, key=lambda v: (bin(v).count("1"), v)):
        hi = m.bit_length() - 1
        rest = m & ~(1 << hi)
        left = f"x{rest.bit_length() - 1}" if bin(rest).count("1") == 1 else f"p{rest}"
        lines.append((m, f"{left} & x{hi}"))
    return lines


def _term(m):
    if m == 0:
        return None
    if bin(m).count("1") == 1:
        return f"x{m.bit_length() - 1}"
    return f"p{m}"


def _body(box, complement="({e}) ^ 0xFFFFFFFF"):
    outs = anf(box)
    prods = _products([m for bit in outs for m in bit])
    exprs = []
    for monos in outs:
        terms = [_term(m) for m in monos if m]
        e = " ^ ".join(terms) if terms else "0"
        if 0 in monos:
            e = complement.format(e=e)
        exprs.append(e)
    return prods, exprs


def gen_python():
    out = [f'"""{HEADER}"""', ""]
    names = []
    for kind, boxes in (("s", SBOX), ("si", SBOX_INV)):
        for n, box in enumerate(boxes):
            prods, exprs = _body(box)
            name = f"{kind}{n}"
            names.append(name)
            out.append("")
            out.append(f"def {name}(x0, x1, x2, x3):")
            for m, e in prods:
                out.append(f"    p{m} = {e}")
            out.append("    return (")
            for e in exprs:
                out.append(f"        {e},")
            out.append("    )")
            out.append("")
    out.append("")
    out.append("SBOX_FUNCS = (" + ", ".join(f"s{i}" for i in range(8)) + ")")
    out.append("SBOX_INV_FUNCS = (" + ", ".join(f"si{i}" for i in range(8)) + ")")
    return "\n".join(out) + "\n"


def gen_cython():
    out = [f"# {HEADER}", ""]
    for kind, boxes in (("s", SBOX), ("si", SBOX_INV)):
        for n, box in enumerate(boxes):
            prods, exprs = _body(box, complement="~({e})")
            out.append(f"cdef inline void {kind}{n}(uint32_t *x) noexcept nogil:")
            out.append("    cdef uint32_t x0 = x[0], x1 = x[1], x2 = x[2], x3 = x[3]")
            for m, e in prods:
                out.append(f"    cdef uint32_t p{m} = {e}")
            for j, e in enumerate(exprs):
                out.append(f"    x[{j}] = {e}")
            out.append("")
            out.append("")
    for kind in ("s", "si"):
        out.append(f"cdef inline void {kind}box(int n, uint32_t *x) noexcept nogil:")
        for n in range(8):
            kw = "if" if n == 0 else "elif"
            out.append(f"    {kw} n == {n}:")
            out.append(f"        {kind}{n}(x)")
        out.append("")
        out.append("")
    return "\n".join(out).rstrip() + "\n"


if __name__ == "__main__":
    with open(os.path.join(PKG, "_sbox_py.py"), "w") as fh:
        fh.write(gen_python())
    with open(os.path.join(PKG, "_sbox_c.pxi"), "w") as fh:
        fh.write(gen_cython())
