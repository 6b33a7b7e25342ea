"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python implementation is used.  Set ``CITEWEIGHT_PURE=1`` to force the
fallback.
"""
import os

if os.environ.get("CITEWEIGHT_PURE"):
    from ._kernels_py import count_at_least, h_from_pairs, prefix_h

    BACKEND = "python"
else:
    try:
        from ._kernels import count_at_least, h_from_pairs, prefix_h

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import count_at_least, h_from_pairs, prefix_h

        BACKEND = "python"

__all__ = ["BACKEND", "count_at_least", "h_from_pairs", "prefix_h"]
