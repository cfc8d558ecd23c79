"""Kernel selection: compiled extension when available, else pure Python.

Set ``QUANDLEKIT_PURE=1`` to force the fallback (used by the benchmark
and by tests that exercise both paths).
"""

import os

if os.environ.get("QUANDLEKIT_PURE") == "1":
    from . import _kernel_py as impl
else:
    try:
        from . import _speedups as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as impl

poly_mul = impl.poly_mul
poly_sub = impl.poly_sub
poly_divexact = impl.poly_divexact
bareiss_det = impl.bareiss_det


def backend() -> str:
    """Name of the active kernel implementation: 'c' or 'python'."""
    return "c" if impl.__name__.endswith("_speedups") else "python"
