"""Search-kernel backend selection.

The environment variable RAINBOWPATH_BACKEND picks the implementation of
the hot search kernels:

  auto   (default) JIT kernels when numba is importable and the instance
         fits the packed-int64 representation, else the pure kernels
  numba  force the JIT kernels (error if numba is unavailable)
  pure   force the pure-Python kernels

The JIT path requires at most 63 vertices and, for color-aware searches,
at most 63 distinct colors.
"""

from __future__ import annotations

import os

from . import _kernels_jit

ENV_VAR = "RAINBOWPATH_BACKEND"
CHOICES = ("auto", "numba", "pure")


def backend_choice() -> str:
    choice = os.environ.get(ENV_VAR, "auto").lower()
    if choice not in CHOICES:
        raise ValueError(f"{ENV_VAR} must be one of {CHOICES}, got {choice!r}")
    return choice


def use_jit(n: int, palette: int = 0) -> bool:
    """Decide whether the JIT kernels handle an instance of this shape."""
    fits = n <= _kernels_jit.JIT_MAX_VERTICES and palette <= _kernels_jit.JIT_MAX_VERTICES
    choice = backend_choice()
    if choice == "pure":
        return False
    if choice == "numba":
        if not _kernels_jit.NUMBA_AVAILABLE:
            raise RuntimeError("RAINBOWPATH_BACKEND=numba but numba is not importable")
        if not fits:
            raise RuntimeError(
                f"instance too large for the JIT kernels (n={n}, palette={palette})"
            )
        return True
    return _kernels_jit.NUMBA_AVAILABLE and fits
