"""Kernel backend selection.

The compiled kernels in ``_fastcore`` cover graphs with at most 64 vertices
through uint64 bitmasks, plus CSR-based routines for larger graphs.  When
the extension is missing (or NEARBIP_PURE is set) everything runs on the
pure-Python twins in ``_purecore``.
"""

import os

if os.environ.get("NEARBIP_PURE", "0") not in ("", "0"):
    fast = None
else:
    try:
        from . import _fastcore as fast
    except ImportError:
        fast = None

_forced_pure = False


def force_pure(flag):
    """Disable the compiled kernels at runtime (tests and benchmarks)."""
    global _forced_pure
    _forced_pure = bool(flag)


def compiled_available():
    return fast is not None


def active_backend():
    return "compiled" if fast is not None and not _forced_pure else "pure"


MASK_KERNEL_MAX_N = 63  # uint64 masks, with bit 63 reserved to avoid shifts by 64


def mask_kernels(n):
    """Compiled module when usable for an n-vertex bitmask graph, else None."""
    if fast is not None and not _forced_pure and n <= MASK_KERNEL_MAX_N:
        return fast
    return None


def csr_kernels():
    """Compiled module for CSR-based routines, else None."""
    if fast is not None and not _forced_pure:
        return fast
    return None
