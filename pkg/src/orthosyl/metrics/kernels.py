"""Dynamic-programming string kernels: LCS length and edit distance.

These two O(m*n) table fills dominate corpus-scale metric runs (LCSR over
every sentence pair, edit distance over every candidate word pair inside
the fuzzy-match scorer), so both carry a numba @njit implementation with a
pure-numpy anti-diagonal fallback.

Backend selection: numba when importable, unless the environment variable
ORTHOSYL_KERNEL is set to "numpy". Both implementations of each kernel are
importable directly for cross-checking and benchmarking.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_BACKEND = os.environ.get("ORTHOSYL_KERNEL", "").strip().lower()

try:
    from numba import njit

    _HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAS_NUMBA = False


def encode(s: str) -> np.ndarray:
    """Code-point array for a string (int32, one element per code point)."""
    if not s:
        return np.empty(0, dtype=np.int32)
    return np.frombuffer(s.encode("utf-32-le"), dtype=np.int32)


def _lcs_len_py(a: np.ndarray, b: np.ndarray) -> int:
    m, n = a.shape[0], b.shape[0]
    prev = np.zeros(n + 1, dtype=np.int32)
    cur = np.zeros(n + 1, dtype=np.int32)
    for i in range(m):
        ai = a[i]
        for j in range(n):
            if ai == b[j]:
                cur[j + 1] = prev[j] + 1
            else:
                up = prev[j + 1]
                left = cur[j]
                cur[j + 1] = up if up >= left else left
        prev, cur = cur, prev
    return int(prev[n])


def _edit_distance_py(a: np.ndarray, b: np.ndarray) -> int:
    m, n = a.shape[0], b.shape[0]
    prev = np.arange(n + 1, dtype=np.int32)
    cur = np.zeros(n + 1, dtype=np.int32)
    for i in range(m):
        ai = a[i]
        cur[0] = i + 1
        for j in range(n):
            cost = 0 if ai == b[j] else 1
            best = prev[j] + cost
            if prev[j + 1] + 1 < best:
                best = prev[j + 1] + 1
            if cur[j] + 1 < best:
                best = cur[j] + 1
            cur[j + 1] = best
        prev, cur = cur, prev
    return int(prev[n])


def lcs_len_numpy(a: np.ndarray, b: np.ndarray) -> int:
    """LCS length via a vectorized anti-diagonal sweep of the DP table."""
    m, n = a.shape[0], b.shape[0]
    if m == 0 or n == 0:
        return 0
    eq = np.equal.outer(a, b)
    # d1/d2 hold diagonals k-1/k-2 of the padded table, indexed by row i
    d2 = np.zeros(m + 1, dtype=np.int32)
    d1 = np.zeros(m + 1, dtype=np.int32)
    for k in range(2, m + n + 1):
        lo = max(1, k - n)
        hi = min(m, k - 1)
        i = np.arange(lo, hi + 1)
        j = k - i
        vals = np.maximum(d1[i - 1], d1[i])
        match = eq[i - 1, j - 1]
        vals = np.where(match, np.maximum(vals, d2[i - 1] + 1), vals)
        cur = np.zeros(m + 1, dtype=np.int32)
        cur[lo:hi + 1] = vals
        d2, d1 = d1, cur
    return int(d1[m])


def edit_distance_numpy(a: np.ndarray, b: np.ndarray) -> int:
    """Levenshtein distance via a vectorized anti-diagonal sweep."""
    m, n = a.shape[0], b.shape[0]
    if m == 0:
        return n
    if n == 0:
        return m
    eq = np.equal.outer(a, b)
    d2 = np.zeros(m + 1, dtype=np.int32)  # diag k-2: only cell (0,0)=0 used
    d1 = np.zeros(m + 1, dtype=np.int32)  # diag k-1
    d1[0] = 1  # D[0,1]
    d1[1] = 1  # D[1,0]
    for k in range(2, m + n + 1):
        lo = max(1, k - n)
        hi = min(m, k - 1)
        i = np.arange(lo, hi + 1)
        j = k - i
        cost = np.where(eq[i - 1, j - 1], 0, 1)
        vals = np.minimum(d1[i - 1], d1[i]) + 1
        vals = np.minimum(vals, d2[i - 1] + cost)
        cur = np.zeros(m + 1, dtype=np.int32)
        cur[lo:hi + 1] = vals
        if k <= n:
            cur[0] = k  # boundary D[0,k]
        if k <= m:
            cur[k] = k  # boundary D[k,0]
        d2, d1 = d1, cur
    return int(d1[m])


if _HAS_NUMBA:
    _lcs_len_numba = njit(cache=True, nogil=True)(_lcs_len_py)
    _edit_distance_numba = njit(cache=True, nogil=True)(_edit_distance_py)
else:  # pragma: no cover
    _lcs_len_numba = None
    _edit_distance_numba = None

if _ENV_BACKEND == "numpy" or not _HAS_NUMBA:
    BACKEND = "numpy"
    _lcs_len_codes = lcs_len_numpy
    _edit_distance_codes = edit_distance_numpy
else:
    BACKEND = "numba"
    _lcs_len_codes = _lcs_len_numba
    _edit_distance_codes = _edit_distance_numba


def lcs_len_codes(a: np.ndarray, b: np.ndarray) -> int:
    """LCS length of two code-point arrays using the selected backend."""
    if a.shape[0] == 0 or b.shape[0] == 0:
        return 0
    return int(_lcs_len_codes(a, b))


def edit_distance_codes(a: np.ndarray, b: np.ndarray) -> int:
    """Edit distance of two code-point arrays using the selected backend."""
    if a.shape[0] == 0:
        return int(b.shape[0])
    if b.shape[0] == 0:
        return int(a.shape[0])
    return int(_edit_distance_codes(a, b))
