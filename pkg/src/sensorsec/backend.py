"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module. Set ``SENSORSEC_PURE_PYTHON=1`` to force
the fallback.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

if _ckernels is not None and os.environ.get("SENSORSEC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    kernels = _ckernels
else:
    kernels = _pykernels

NAME = kernels.NAME


def available():
    """All importable backends, by name."""
    found = {"python": _pykernels}
    if _ckernels is not None:
        found["native"] = _ckernels
    return found
