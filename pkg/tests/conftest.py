import ctypes
import ctypes.util
import os
import random

import pytest

from sensorsec import backend

_GCRYPT_CANDIDATES = (
    ctypes.util.find_library("gcrypt"),
    "libgcrypt.so.20",
    "/usr/lib/x86_64-linux-gnu/libgcrypt.so.20",
)

SCENARIO_DIR = os.path.join(os.path.dirname(backend.__file__), "scenarios")


def scenario_path(name):
    return os.path.join(SCENARIO_DIR, name)


class Gcrypt:
    """Serpent ECB from the system libgcrypt, used as an outside reference."""

    ALGO = {16: 304, 24: 305, 32: 306}

    def __init__(self, lib):
        self.lib = lib
        lib.gcry_check_version.restype = ctypes.c_char_p
        self.version = lib.gcry_check_version(None).decode()

    def encrypt(self, key, block):
        h = ctypes.c_void_p()
        if self.lib.gcry_cipher_open(ctypes.byref(h), self.ALGO[len(key)], 1, 0):
            raise RuntimeError("gcry_cipher_open failed")
        try:
            if self.lib.gcry_cipher_setkey(h, key, len(key)):
                raise RuntimeError("gcry_cipher_setkey failed")
            out = ctypes.create_string_buffer(16)
            if self.lib.gcry_cipher_encrypt(h, out, 16, bytes(block), 16):
                raise RuntimeError("gcry_cipher_encrypt failed")
            return out.raw
        finally:
            self.lib.gcry_cipher_close(h)


def load_gcrypt():
    for name in _GCRYPT_CANDIDATES:
        if not name:
            continue
        try:
            return Gcrypt(ctypes.CDLL(name))
        except OSError:
            continue
    return None


@pytest.fixture(scope="session")
def gcrypt():
    g = load_gcrypt()
    if g is None:
        pytest.skip("libgcrypt not available")
    return g


@pytest.fixture(params=sorted(backend.available()))
def kernels(request):
    return backend.available()[request.param]


@pytest.fixture
def rng():
    return random.Random(0x5E7501)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
