"""Kernel selector: the compiled extension when importable, else the pure-Python fallback.

Set ``WRTWIST_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

BACKEND = "python"

if os.environ.get("WRTWIST_PURE") != "1":
    try:
        from ._kernels import box_min_abs_form, good_basis_keys, reduce_points, sqrt_residues
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._kernels_py import box_min_abs_form, good_basis_keys, reduce_points, sqrt_residues

from ._kernels_py import reduce_point

__all__ = ["BACKEND", "box_min_abs_form", "good_basis_keys", "reduce_point", "reduce_points", "sqrt_residues"]
