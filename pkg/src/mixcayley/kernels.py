"""Kernel selection: the compiled Jacobi core when built, else the Python twin.

Set ``MIXCAYLEY_PURE_PYTHON=1`` to force the fallback.
"""
import os

from mixcayley import _jacobi_py as fallback

try:
    from mixcayley import _jacobi as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and not os.environ.get("MIXCAYLEY_PURE_PYTHON"):
    BACKEND = "cython"
    jacobi_sweeps = compiled.jacobi_sweeps
else:
    BACKEND = "python"
    jacobi_sweeps = fallback.jacobi_sweeps

__all__ = ["BACKEND", "compiled", "fallback", "jacobi_sweeps"]
