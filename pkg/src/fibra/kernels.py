"""Selects the compiled scan kernels when built, else the pure-Python twin.

Set ``FIBRA_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

IA, IB, IIA, IIB, QUARTIC = _kernels_py.IA, _kernels_py.IB, _kernels_py.IIA, _kernels_py.IIB, _kernels_py.QUARTIC

try:
    if os.environ.get("FIBRA_PURE_PYTHON"):
        raise ImportError("pure-Python kernels requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _kernels_py

square_matches = _impl.square_matches
block_matches = _impl.block_matches


def backends():
    """Mapping of available backend name -> kernel module."""
    found = {"python": _kernels_py}
    if _compiled is not None:
        found["cython"] = _compiled
    return found
