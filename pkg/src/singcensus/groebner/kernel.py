"""Kernel selection: compiled extension when available, pure Python otherwise.

SINGCENSUS_KERNEL=pure|fast|auto overrides the choice.  The compiled kernel
covers up to 8 variables with per-variable degrees below 64; anything larger
raises KernelCapacityError and the call is transparently retried in pure
Python.
"""

import os

from ..errors import KernelCapacityError
from . import kernel_pure

try:
    from . import _speedups
except ImportError:  # extension not built; pure fallback
    _speedups = None

_choice = os.environ.get("SINGCENSUS_KERNEL", "auto").lower()
if _choice not in ("auto", "fast", "pure"):
    raise RuntimeError(f"SINGCENSUS_KERNEL must be auto, fast or pure, not {_choice!r}")
if _choice == "fast" and _speedups is None:
    raise RuntimeError("SINGCENSUS_KERNEL=fast but the compiled kernel is not built")

_use_fast = _speedups is not None and _choice in ("auto", "fast")


def kernel_name() -> str:
    return "fast" if _use_fast else "pure"


def reduced_groebner(gens, nvars, p, order=0):
    if _use_fast:
        try:
            return _speedups.reduced_groebner(gens, nvars, p, order)
        except KernelCapacityError:
            pass
    return kernel_pure.reduced_groebner(gens, nvars, p, order)


def normal_form(f, basis, nvars, p, order=0):
    if _use_fast:
        try:
            return _speedups.normal_form(f, basis, nvars, p, order)
        except KernelCapacityError:
            pass
    return kernel_pure.normal_form(f, basis, nvars, p, order)
