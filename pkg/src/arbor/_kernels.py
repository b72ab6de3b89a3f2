"""Backend selection for the hot kernels.

The compiled extension (arbor._speed, built from Cython) is preferred when
importable; otherwise the pure-Python twins take over.  Set ARBOR_PURE=1 to
force the pure backend regardless.
"""

from __future__ import annotations

import os

if os.environ.get("ARBOR_PURE"):
    from arbor import _purekernels as _impl
else:
    try:
        from arbor import _speed as _impl  # type: ignore[no-redef]
    except ImportError:
        from arbor import _purekernels as _impl

rooted_code = _impl.rooted_code
rooted_auts = _impl.rooted_auts
conj_classes = _impl.conj_classes


def backend_name() -> str:
    return _impl.BACKEND
