"""
Batch kernels for permutation and word statistics.

Rows of a 2-D int64 array are permutations (values ``1..n``) or words over
``[k+1]``.  Each kernel exists twice: a numba ``@njit`` loop and a vectorised
numpy version.  Set ``ZEROHECKE_DISABLE_NUMBA=1`` to force the numpy path
(numba is also skipped when it cannot be imported).
"""

from __future__ import annotations

import itertools
import os

import numpy as np

__all__ = [
    "BACKEND",
    "inversions",
    "descent_masks",
    "inverse_rows",
    "prime_counts",
    "perm_array",
    "word_array",
    "numba_kernels",
    "numpy_kernels",
]


def _numba_wanted() -> bool:
    flag = os.environ.get("ZEROHECKE_DISABLE_NUMBA", "").strip().lower()
    return flag in ("", "0", "false", "no")


# -- numpy reference path ----------------------------------------------------


def _inversions_np(rows: np.ndarray) -> np.ndarray:
    if rows.shape[1] < 2:
        return np.zeros(rows.shape[0], dtype=np.int64)
    gt = rows[:, :, None] > rows[:, None, :]
    return np.triu(gt, k=1).sum(axis=(1, 2)).astype(np.int64)


def _descent_masks_np(rows: np.ndarray) -> np.ndarray:
    if rows.shape[1] < 2:
        return np.zeros(rows.shape[0], dtype=np.int64)
    desc = rows[:, :-1] > rows[:, 1:]
    weights = np.left_shift(np.int64(1), np.arange(rows.shape[1] - 1, dtype=np.int64))
    return (desc * weights).sum(axis=1).astype(np.int64)


def _inverse_rows_np(rows: np.ndarray) -> np.ndarray:
    return (np.argsort(rows, axis=1) + 1).astype(np.int64)


def _prime_counts_np(rows: np.ndarray, k: int) -> np.ndarray:
    levels = np.arange(1, k + 1, dtype=np.int64)
    return (rows[:, :, None] <= levels[None, None, :]).sum(axis=1).astype(np.int64)


numpy_kernels = {
    "inversions": _inversions_np,
    "descent_masks": _descent_masks_np,
    "inverse_rows": _inverse_rows_np,
    "prime_counts": _prime_counts_np,
}

# -- numba path --------------------------------------------------------------

numba_kernels: dict | None = None

if _numba_wanted():
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        njit = None

    if njit is not None:

        @njit(cache=True)
        def _inversions_nb(rows):
            m, n = rows.shape
            out = np.zeros(m, dtype=np.int64)
            for r in range(m):
                c = 0
                for i in range(n):
                    v = rows[r, i]
                    for j in range(i + 1, n):
                        if v > rows[r, j]:
                            c += 1
                out[r] = c
            return out

        @njit(cache=True)
        def _descent_masks_nb(rows):
            m, n = rows.shape
            out = np.zeros(m, dtype=np.int64)
            for r in range(m):
                mask = 0
                for i in range(n - 1):
                    if rows[r, i] > rows[r, i + 1]:
                        mask |= 1 << i
                out[r] = mask
            return out

        @njit(cache=True)
        def _inverse_rows_nb(rows):
            m, n = rows.shape
            out = np.empty((m, n), dtype=np.int64)
            for r in range(m):
                for i in range(n):
                    out[r, rows[r, i] - 1] = i + 1
            return out

        @njit(cache=True)
        def _prime_counts_nb(rows, k):
            m, n = rows.shape
            out = np.zeros((m, k), dtype=np.int64)
            for r in range(m):
                for j in range(n):
                    for i in range(rows[r, j] - 1, k):
                        out[r, i] += 1
            return out

        numba_kernels = {
            "inversions": _inversions_nb,
            "descent_masks": _descent_masks_nb,
            "inverse_rows": _inverse_rows_nb,
            "prime_counts": _prime_counts_nb,
        }

BACKEND = "numba" if numba_kernels is not None else "numpy"
_active = numba_kernels if numba_kernels is not None else numpy_kernels


def _as_rows(rows) -> np.ndarray:
    arr = np.ascontiguousarray(rows, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D array of rows, got shape {arr.shape}")
    return arr


def inversions(rows) -> np.ndarray:
    """Number of pairs ``i < j`` with ``row[i] > row[j]``, per row."""
    return _active["inversions"](_as_rows(rows))


def descent_masks(rows) -> np.ndarray:
    """Descent set per row as a bitmask (bit ``i-1`` set iff ``row[i] > row[i+1]``)."""
    return _active["descent_masks"](_as_rows(rows))


def inverse_rows(rows) -> np.ndarray:
    return _active["inverse_rows"](_as_rows(rows))


def prime_counts(rows, k: int) -> np.ndarray:
    """``p'_i = #{j : p_j <= i}`` for ``i = 1..k``, per row."""
    return _active["prime_counts"](_as_rows(rows), int(k))


def perm_array(n: int) -> np.ndarray:
    """All of S_n as rows, in lexicographic order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)


def word_array(n: int, k: int) -> np.ndarray:
    """All words of ``[k+1]^n`` as rows, in lexicographic order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(1, k + 2), repeat=n)), dtype=np.int64)
