"""Select the sweep-kernel backend at import time.

The compiled extension (cpfn._ckernel) is preferred; the pure-Python twin
(cpfn._pykernel) is used when the extension is missing or when the
environment variable CPFN_PURE_PYTHON is set to a non-empty value.
`BACKEND` reports which one is active ("cython" or "python").
"""

from __future__ import annotations

import os

if os.environ.get("CPFN_PURE_PYTHON"):
    from . import _pykernel as _impl
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernel as _impl

BACKEND: str = _impl.BACKEND
count_cp_tables = _impl.count_cp_tables
cp_agreement_sweep = _impl.cp_agreement_sweep
