"""Compiled and pure-Python kernels must be interchangeable."""

import os
import random
import subprocess
import sys

import pytest

from sensorsec import _pykernels, backend
from sensorsec.cipher import Serpent, key_schedule
from sensorsec.field80 import P

from .test_cipher import slow_serpent


def _pair(rounds=16, key=bytes(10)):
    words = [w for sk in key_schedule(key, rounds) for w in sk]
    return words


def test_python_backend_always_present():
    assert backend.available()["python"] is _pykernels
    assert backend.NAME in backend.available()


def test_kernel_block_ops(kernels, rng):
    for _ in range(200):
        key = rng.randbytes(10)
        rounds = rng.choice([16, 32])
        pk = kernels.prepare(_pair(rounds, key), rounds)
        block = rng.randbytes(16)
        ct = kernels.encrypt_block(pk, block)
        assert ct == Serpent(key, rounds, kernels=_pykernels).encrypt_block(block)
        assert kernels.decrypt_block(pk, ct) == block
    key, block = rng.randbytes(10), rng.randbytes(16)
    assert Serpent(key, kernels=kernels).encrypt_block(block) == slow_serpent(key, block, 16)


def test_kernel_ctr_and_mac(kernels, rng):
    for n in (0, 1, 15, 16, 17, 33, 200):
        key = rng.randbytes(10)
        data = rng.randbytes(n)
        s = rng.randrange(1 << 16)
        ref = Serpent(key, kernels=_pykernels)
        got = Serpent(key, kernels=kernels)
        assert got.ctr_xor(s, data) == ref.ctr_xor(s, data)
        assert got.cbc_mac(data) == ref.cbc_mac(data)


def test_kernel_field_ops(kernels):
    rng = random.Random(9)
    for _ in range(5000):
        r = rng.getrandbits(96)
        assert kernels.reduce96(r) == r % P
    for degree in (0, 1, 5, 20, 40):
        for _ in range(50):
            coeffs = [rng.randrange(P) for _ in range(degree + 1)]
            x = rng.randrange(1, 1 << 16)
            want = sum(a * x ** (degree - i) for i, a in enumerate(coeffs)) % P
            assert kernels.horner(coeffs, x) == want
    for edge in (0, P - 1, P, (1 << 96) - 1):
        assert kernels.reduce96(edge) == edge % P


def test_kernel_reduce96_rejects_wide(kernels):
    with pytest.raises((ValueError, OverflowError)):
        kernels.reduce96(1 << 96)


@pytest.mark.skipif("native" not in backend.available(), reason="extension not built")
def test_native_is_default_when_built():
    assert os.environ.get("SENSORSEC_PURE_PYTHON") or backend.NAME == "native"


def test_env_forces_pure_python():
    code = "from sensorsec import backend; print(backend.NAME)"
    env = dict(os.environ, SENSORSEC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
