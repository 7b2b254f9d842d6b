"""Downset DP kernels for counting linear extensions of small posets.

Posets arrive as an int64 array ``pred`` where bit j of ``pred[i]`` means
element j must precede element i. Both kernels sweep downsets layer by layer
(layer k holds all order ideals of size k) and return the count as int64, or
-1 when the count would overflow; callers then fall back to exact Python ints.

Set SEVERI_NUMBA=0 to force the numpy kernel.
"""

from __future__ import annotations

import os

import numpy as np

MAX_ELEMENTS = 62
_LIMIT = np.int64(2 ** 62)

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False


def linext_numpy(pred: np.ndarray) -> int:
    n = len(pred)
    pred = np.asarray(pred, dtype=np.int64)
    bits = np.left_shift(np.int64(1), np.arange(n, dtype=np.int64))
    masks = np.zeros(1, dtype=np.int64)
    counts = np.ones(1, dtype=np.int64)
    for _ in range(n):
        # (downset, element) grid: element addable iff absent and all predecessors present
        ok = ((masks[:, None] & bits) == 0) & ((masks[:, None] & pred) == pred)
        rows, cols = np.nonzero(ok)
        cand = masks[rows] | bits[cols]
        masks, inv = np.unique(cand, return_inverse=True)
        # float shadow sum detects int64 overflow before it happens
        approx = np.zeros(len(masks))
        np.add.at(approx, inv, counts[rows].astype(np.float64))
        if approx.max() >= float(_LIMIT):
            return -1
        new_counts = np.zeros(len(masks), dtype=np.int64)
        np.add.at(new_counts, inv, counts[rows])
        counts = new_counts
    return int(counts[0])


def _linext_loops(pred):
    n = pred.shape[0]
    masks = np.zeros(1, dtype=np.int64)
    counts = np.ones(1, dtype=np.int64)
    one = np.int64(1)
    for _ in range(n):
        m = masks.shape[0]
        cand_m = np.empty(m * n, dtype=np.int64)
        cand_c = np.empty(m * n, dtype=np.int64)
        k = 0
        for j in range(m):
            mj = masks[j]
            for i in range(n):
                bit = one << i
                if (mj & bit) == 0 and (mj & pred[i]) == pred[i]:
                    cand_m[k] = mj | bit
                    cand_c[k] = counts[j]
                    k += 1
        cand_m = cand_m[:k]
        cand_c = cand_c[:k]
        order = np.argsort(cand_m)
        out_m = np.empty(k, dtype=np.int64)
        out_c = np.empty(k, dtype=np.int64)
        r = -1
        prev = np.int64(-1)
        for idx in range(k):
            mk = cand_m[order[idx]]
            c = cand_c[order[idx]]
            if mk != prev:
                r += 1
                out_m[r] = mk
                out_c[r] = c
                prev = mk
            else:
                if out_c[r] > _LIMIT - c:
                    return np.int64(-1)
                out_c[r] += c
        masks = out_m[:r + 1]
        counts = out_c[:r + 1]
    return counts[0]


if HAVE_NUMBA:
    _linext_jit = njit(cache=True)(_linext_loops)

    def linext_numba(pred: np.ndarray) -> int:
        return int(_linext_jit(np.asarray(pred, dtype=np.int64)))
else:  # pragma: no cover
    linext_numba = None


def _env_wants_numba() -> bool:
    return os.environ.get("SEVERI_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


_backend = "numba" if HAVE_NUMBA and _env_wants_numba() else "numpy"


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _backend = name


def count_masks(pred: np.ndarray) -> int:
    """Linear extensions via the selected kernel; -1 signals int64 overflow."""
    if len(pred) == 0:
        return 1
    if len(pred) > MAX_ELEMENTS:
        return -1
    if _backend == "numba":
        return linext_numba(pred)
    return linext_numpy(pred)
