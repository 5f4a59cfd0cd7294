"""Backend selection for the hot kernels.

The compiled extension is used when it imports; set ``LCISTRUCT_PURE=1`` to
force the pure-Python twin.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("LCISTRUCT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend or python_backend

BACKEND = _active.BACKEND
mul_terms = _active.mul_terms
normal_form = _active.normal_form
standard_monomials = _active.standard_monomials
count_standard = _active.count_standard
sparse_rank = _active.sparse_rank


def available_backends():
    """Mapping of backend name to kernel module for every importable backend."""
    out = {"python": python_backend}
    if compiled_backend is not None:
        out["cython"] = compiled_backend
    return out
