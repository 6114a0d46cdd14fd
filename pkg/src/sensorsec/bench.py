"""Host microbenchmarks for the hot kernels, per backend.

Numbers are informational only: the host is not the sensor platform.
"""

import random
import time
from dataclasses import dataclass

from . import backend, secmsg
from .cipher import Serpent
from .field80 import P

TARGETS = ("field", "cipher", "seal")


@dataclass
class BenchResult:
    backend: str
    target: str
    iterations: int
    seconds: float
    bytes_per_op: int

    @property
    def ops_per_second(self):
        return self.iterations / self.seconds if self.seconds > 0 else float("inf")

    @property
    def bytes_per_second(self):
        return self.ops_per_second * self.bytes_per_op

    def line(self):
        return "backend=%s target=%s iterations=%d seconds=%.4f ops/s=%.1f bytes/s=%.1f" % (
            self.backend, self.target, self.iterations, self.seconds,
            self.ops_per_second, self.bytes_per_second)


def run(target, iterations, kernels=None, degree=20):
    if target not in TARGETS:
        raise ValueError("unknown bench target %r" % target)
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    kernels = kernels or backend.kernels
    rng = random.Random(0)
    if target == "field":
        # one pairwise-secret evaluation: degree-t Horner at a 16-bit id
        coeffs = [rng.randrange(P) for _ in range(degree + 1)]
        ids = [rng.randrange(1, 1 << 16) for _ in range(64)]
        horner = kernels.horner
        t0 = time.perf_counter()
        for i in range(iterations):
            horner(coeffs, ids[i & 63])
        return BenchResult(kernels.NAME, target, iterations, time.perf_counter() - t0, 10)
    cipher = Serpent(rng.randbytes(10), kernels=kernels)
    if target == "cipher":
        block = rng.randbytes(16)
        enc = cipher.encrypt_block
        t0 = time.perf_counter()
        for _ in range(iterations):
            block = enc(block)
        return BenchResult(kernels.NAME, target, iterations, time.perf_counter() - t0, 16)
    payload = rng.randbytes(16)
    state = secmsg.CounterState()
    t0 = time.perf_counter()
    for _ in range(iterations):
        if state.s >= secmsg.MAX_COUNTER:
            state.s = 0
        secmsg.seal(cipher, 1, secmsg.DATA, state, payload)
    return BenchResult(kernels.NAME, target, iterations, time.perf_counter() - t0, len(payload))


def compare(target, iterations):
    """Run ``target`` on every importable backend."""
    return [run(target, iterations, mod) for mod in backend.available().values()]
