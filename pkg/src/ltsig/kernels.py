"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_fallback``.  Set ``LTSIG_PURE_PYTHON=1`` to force the fallback.
"""

import os

from ltsig import _fallback

if os.environ.get("LTSIG_PURE_PYTHON") == "1":
    _impl = _fallback
else:
    try:
        from ltsig import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _fallback

BACKEND = "python" if _impl is _fallback else "compiled"

bk_factor = _impl.bk_factor
jump_table = _impl.jump_table
intro_sign_table = _impl.intro_sign_table


def available_backends() -> dict:
    out = {"python": _fallback}
    try:
        from ltsig import _kernels
    except ImportError:
        return out
    out["compiled"] = _kernels
    return out
