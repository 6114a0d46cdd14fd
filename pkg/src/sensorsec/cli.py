"""Command line: CA lifecycle, node provisioning, scenarios, benchmarks.

Exit codes: 0 success, 1 scenario safety failure, 2 usage error, 3 I/O error.
"""

import argparse
import os
import secrets
import sys
import tempfile

from . import backend, bench, netsim
from .field80 import FieldError, InvalidId
from .keydist import (
    MAX_DEGREE,
    DuplicateId,
    FormatError,
    MasterPolynomial,
    ca_generate,
    derive_share,
)

EXIT_OK = 0
EXIT_UNSAFE = 1
EXIT_USAGE = 2
EXIT_IO = 3


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _write_atomic(path, data):
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sensorsec-")
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except OSError as exc:
        raise CliError("cannot write %s: %s" % (path, exc.strerror or exc), EXIT_IO) from None


def _read(path):
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (path, exc.strerror or exc), EXIT_IO) from None


def _seed(text):
    if text is None:
        return secrets.token_bytes(32)
    try:
        raw = bytes.fromhex(text)
    except ValueError:
        raise CliError("--seed must be hex", EXIT_USAGE) from None
    if len(raw) != 32:
        raise CliError("--seed must be 32 bytes (64 hex digits)", EXIT_USAGE)
    return raw


def cmd_ca_init(args):
    if not 1 <= args.degree <= MAX_DEGREE:
        raise CliError("--degree must be in [1, %d]" % MAX_DEGREE, EXIT_USAGE)
    master = ca_generate(args.degree, _seed(args.seed))
    data = master.to_bytes()
    _write_atomic(args.out, data)
    print("t=%d file_bytes=%d coefficient_bytes=%d" % (
        master.degree, len(data), (master.degree + 1) ** 2 * 10))
    return EXIT_OK


def cmd_ca_provision(args):
    try:
        master = MasterPolynomial.from_bytes(_read(args.master))
    except (FormatError, FieldError) as exc:
        raise CliError("bad master file: %s" % exc, EXIT_USAGE) from None
    try:
        share = derive_share(master, args.id)
    except (DuplicateId, InvalidId) as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    _write_atomic(args.out, share.to_bytes())
    _write_atomic(args.master, master.to_bytes())
    print("id=%d t=%d coefficient_bytes=%d file_bytes=%d" % (
        share.id, share.degree, len(share.coefficient_bytes()), len(share.to_bytes())))
    return EXIT_OK


def cmd_sim_run(args):
    text = _read(args.config)
    try:
        config = netsim.parse_config(text.decode("utf-8"))
        if args.seed is not None:
            config.seed = args.seed
            config.validate()
    except (netsim.ConfigInvalid, UnicodeDecodeError) as exc:
        raise CliError("invalid config: %s" % exc, EXIT_USAGE) from None
    report = netsim.sim_run(config)
    text = report.to_text()
    if args.report:
        _write_atomic(args.report, text.encode("utf-8"))
    else:
        sys.stdout.write(text)
    summary = " ".join("%s=%s" % (k, netsim._render(report.counters[k]))
                       for k in ("frames_sent", "frames_delivered", "key_exchanges", "replays_rejected"))
    adv = " ".join("%s=%s" % (k, netsim._render(v)) for k, v in report.adversary.items())
    print("%s %s violations=%d" % (summary, adv, len(report.violations)), file=sys.stderr)
    return EXIT_OK if report.safe else EXIT_UNSAFE


def cmd_bench(args):
    mods = backend.available()
    if args.backend == "auto":
        chosen = [backend.kernels]
    elif args.backend == "all":
        chosen = list(mods.values())
    elif args.backend in mods:
        chosen = [mods[args.backend]]
    else:
        raise CliError("backend %r is not available" % args.backend, EXIT_USAGE)
    for mod in chosen:
        print(bench.run(args.target, args.iterations, mod).line())
    print("note: host timings only; not comparable to the sensor platform")
    return EXIT_OK


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser():
    parser = argparse.ArgumentParser(prog="sensorsec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ca = sub.add_parser("ca", help="certificate authority operations")
    ca_sub = ca.add_subparsers(dest="ca_command", required=True)
    p = ca_sub.add_parser("init", help="generate a master polynomial file (BMK1)")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--seed", help="32-byte hex seed; random if omitted")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_ca_init)
    p = ca_sub.add_parser("provision", help="derive a node share file (BSH1)")
    p.add_argument("--master", required=True)
    p.add_argument("--id", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_ca_provision)

    sim = sub.add_parser("sim", help="network simulation")
    sim_sub = sim.add_subparsers(dest="sim_command", required=True)
    p = sim_sub.add_parser("run", help="run one scenario file")
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, help="override the scenario seed")
    p.add_argument("--report", help="report path (stdout if omitted)")
    p.set_defaults(func=cmd_sim_run)

    p = sub.add_parser("bench", help="host microbenchmarks (informational)")
    p.add_argument("--target", choices=bench.TARGETS, required=True)
    p.add_argument("--iterations", type=_positive, default=10000)
    p.add_argument("--backend", default="auto", help="auto, all, python or native")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print("sensorsec: error: %s" % exc, file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
