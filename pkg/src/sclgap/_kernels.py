"""Kernel dispatch: compiled extension when built, pure Python otherwise.

Set SCLGAP_PURE=1 to force the fallback (used by the benchmark and for
debugging kernel discrepancies).
"""

import os

from . import _pure

if os.environ.get("SCLGAP_PURE"):
    _impl = _pure
    COMPILED = False
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:
        _impl = _pure
        COMPILED = False

reduce_word = _impl.reduce_word
eta0 = _impl.eta0
alpha_word = _impl.alpha_word
beta_word = _impl.beta_word
eta0_exhaustive_defect = _impl.eta0_exhaustive_defect
