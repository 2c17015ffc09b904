"""Backend selection for the kernel-scan hot loop.

The compiled Cython extension is preferred when importable; setting the
environment variable ``HOPFACT_PURE_PYTHON`` (to any nonempty value)
forces the pure-Python implementation, which is also the fallback when
the extension was not built.
"""

import os

from . import _scan_py

if os.environ.get("HOPFACT_PURE_PYTHON"):
    _impl = _scan_py
else:
    try:
        from . import _scan_core as _impl
    except ImportError:
        _impl = _scan_py

scan_lattice = _impl.scan_lattice
BACKEND_NAME = _impl.BACKEND_NAME
HAVE_COMPILED_CORE = BACKEND_NAME == "compiled"
