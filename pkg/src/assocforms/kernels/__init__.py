"""Hot inner loops, compiled when possible.

The Cython extension ``_ckernels`` is used if it was built; otherwise the
Python implementations in ``_pykernels`` are used.  Setting the environment
variable ``ASSOCFORMS_KERNELS=python`` forces the fallback.
"""
import os

from . import _pykernels

if os.environ.get("ASSOCFORMS_KERNELS", "").lower() == "python":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

mul_terms = _impl.mul_terms
rref_mod = _impl.rref_mod
det_mod = _impl.det_mod


def get_backend(name: str):
    """Return the kernel module for ``name`` ("python" or "cython")."""
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")
