"""Vectorised numpy implementation of the regular-representation trace kernel.

Used when the compiled ``_kernel`` extension is unavailable.  All starting
basis vectors are propagated at once as a sparse list of
(start, current, coefficient-polynomial) rows.
"""
from __future__ import annotations

import numpy as np

INT64_SAFE = 2 ** 62


def coeff_dtype(n_basis: int, word_len: int):
    # each generator multiplies the l1 norm of a coefficient row by at most 3
    return np.int64 if n_basis * 3 ** word_len < INT64_SAFE else object


def word_trace(word, lmul: np.ndarray, ldesc: np.ndarray) -> list[int]:
    """Coefficients (ascending powers of q) of the trace of left multiplication
    by g_{w_1} ... g_{w_k} on the permutation basis.

    ``lmul[i, x]`` is the index of s_{i+1} x and ``ldesc[i, x]`` says whether
    s_{i+1} is a left descent of x.
    """
    n_basis = lmul.shape[1]
    width = len(word) + 1
    dtype = coeff_dtype(n_basis, len(word))
    start = np.arange(n_basis, dtype=np.int64)
    cur = start.copy()
    coef = np.zeros((n_basis, width), dtype=dtype)
    coef[:, 0] = 1
    for g in reversed(word):
        row = g - 1
        nxt = lmul[row, cur]
        desc = ldesc[row, cur].astype(bool)
        shifted = np.zeros_like(coef)
        shifted[:, 1:] = coef[:, :-1]
        moved = np.where(desc[:, None], shifted, coef)
        stay = shifted[desc] - coef[desc]
        new_start = np.concatenate([start, start[desc]])
        new_cur = np.concatenate([nxt, cur[desc]])
        new_coef = np.concatenate([moved, stay])
        key = new_start * n_basis + new_cur
        order = np.argsort(key, kind="stable")
        key = key[order]
        bounds = np.flatnonzero(np.r_[True, key[1:] != key[:-1]])
        merged = np.add.reduceat(new_coef[order], bounds, axis=0)
        key = key[bounds]
        keep = np.any(merged != 0, axis=1)
        coef = merged[keep]
        key = key[keep]
        start = key // n_basis
        cur = key % n_basis
    diag = start == cur
    total = coef[diag].sum(axis=0) if diag.any() else np.zeros(width, dtype=dtype)
    return [int(c) for c in total]
