"""Select the word-matching kernel at import time.

The compiled extension is preferred; the pure-Python twin is used when
the build is unavailable or QGAL_PURE_PYTHON=1 is set.
"""

import os

if os.environ.get("QGAL_PURE_PYTHON"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
find_first_match = _impl.find_first_match
has_subword = _impl.has_subword
