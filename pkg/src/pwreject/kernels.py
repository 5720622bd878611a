"""Backend selection for the special-function kernels.

Prefers the compiled Cython extension; falls back to the pure-Python
implementation when the extension is unavailable.  Set the environment
variable ``PWREJECT_PURE_PYTHON=1`` to force the fallback (useful for the
benchmark and for testing both paths).
"""

import os

if os.environ.get("PWREJECT_PURE_PYTHON"):
    from pwreject._kernels_py import BACKEND, reg_inc_beta, reg_lower_gamma
else:
    try:
        from pwreject._ckernels import BACKEND, reg_inc_beta, reg_lower_gamma
    except ImportError:
        from pwreject._kernels_py import BACKEND, reg_inc_beta, reg_lower_gamma

__all__ = ["BACKEND", "reg_lower_gamma", "reg_inc_beta"]
