"""Select the compiled kernels when available, else the pure-Python ones.

Set ``DOODLE_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels
if not os.environ.get("DOODLE_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

BRANCH, MUL, DIV = _pykernels.BRANCH, _pykernels.MUL, _pykernels.DIV

enumerate_tables = _impl.enumerate_tables
is_canonical = _impl.is_canonical
count_plan = _impl.count_plan
brute_force = _impl.brute_force
