"""Compare the pure-Python and compiled kernels on every bench target.

    python3 benchmarks/compare_backends.py [iterations]

Host numbers only; they say nothing about the sensor platform.
"""

import sys

from sensorsec import backend, bench


def main(argv):
    iterations = int(argv[1]) if len(argv) > 1 else 5000
    mods = backend.available()
    print("backends: %s (default %s)" % (", ".join(sorted(mods)), backend.NAME))
    for target in bench.TARGETS:
        results = bench.compare(target, iterations)
        for r in results:
            print(r.line())
        by_name = {r.backend: r for r in results}
        if "python" in by_name and "native" in by_name:
            print("  speedup native/python %s: %.1fx" % (
                target, by_name["native"].ops_per_second / by_name["python"].ops_per_second))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
