"""Backend selection for the regular-trace kernel.

The compiled extension is used when it was built and HECKECHAR_PURE is not
set; otherwise the numpy implementation is used.  Both return identical
integer coefficient lists.
"""
from __future__ import annotations

import os

from . import _kernel_py

try:
    if os.environ.get("HECKECHAR_PURE"):
        raise ImportError("pure backend requested")
    from . import _kernel as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "numpy"


def word_trace(word, lmul, ldesc, backend: str | None = None) -> list[int]:
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel not available")
        if _kernel_py.coeff_dtype(lmul.shape[1], len(word)) is object:
            return _kernel_py.word_trace(word, lmul, ldesc)
        return _compiled.word_trace(word, lmul, ldesc)
    return _kernel_py.word_trace(word, lmul, ldesc)


def available_backends() -> list[str]:
    return ["numpy"] + (["cython"] if _compiled is not None else [])
