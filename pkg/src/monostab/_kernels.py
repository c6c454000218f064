"""Vectorized divisibility kernels over exponent matrices.

Monomials are rows of an int64 matrix.  For divisibility tests the rows are
packed into uint64 words: each exponent gets a field of ``w`` bits whose top
bit is a guard.  With the guards of ``g`` forced on, ``(g | guard) - h`` never
borrows across fields, and a field keeps its guard bit exactly when
``g_i >= h_i``.  One subtraction per word therefore tests every coordinate.
"""

from __future__ import annotations

import numpy as np

MAX_EXPONENT = (1 << 62) - 1
_CHUNK = 2048
_SMALL = 48
_STRICT_UPPER = np.triu(np.ones((_SMALL, _SMALL), dtype=bool), 1)


def as_matrix(rows, n: int) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.size == 0:
        return np.zeros((0, n), dtype=np.int64)
    return a.reshape(-1, n)


def check_exponents(a: np.ndarray) -> None:
    if a.size and (a.min() < 0 or a.max() > MAX_EXPONENT):
        raise OverflowError("exponent outside the supported range [0, 2^62)")


class Packer:
    """Field layout for packing rows with entries in ``[0, maxval]``."""

    def __init__(self, n: int, maxval: int):
        self.n = n
        self.width = max(int(maxval).bit_length(), 1) + 1
        if self.width > 64:
            raise OverflowError("exponent too large to pack")
        self.per_word = 64 // self.width
        self.words = max(-(-n // self.per_word), 1)
        self.guard = np.zeros(self.words, dtype=np.uint64)
        self.shifts = []
        for i in range(n):
            word, slot = divmod(i, self.per_word)
            shift = slot * self.width
            self.shifts.append((word, np.uint64(shift)))
            self.guard[word] |= np.uint64(1) << np.uint64(shift + self.width - 1)
        self.value_mask = np.uint64((1 << (self.width - 1)) - 1)

    def pack(self, a: np.ndarray) -> np.ndarray:
        out = np.zeros((a.shape[0], self.words), dtype=np.uint64)
        for i, (word, shift) in enumerate(self.shifts):
            out[:, word] |= a[:, i].astype(np.uint64) << shift
        return out

    def unpack(self, p: np.ndarray) -> np.ndarray:
        out = np.empty((p.shape[0], self.n), dtype=np.int64)
        for i, (word, shift) in enumerate(self.shifts):
            out[:, i] = ((p[:, word] >> shift) & self.value_mask).astype(np.int64)
        return out

    def column(self, p: np.ndarray, i: int) -> np.ndarray:
        word, shift = self.shifts[i]
        return (p[:, word] >> shift) & self.value_mask

    def set_column(self, p: np.ndarray, i: int, value: int) -> np.ndarray:
        word, shift = self.shifts[i]
        out = p.copy()
        field = self.value_mask << shift
        out[:, word] = (out[:, word] & ~field) | (np.uint64(value) << shift)
        return out

    def le_table(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Boolean table t[i, j] = (x_i <= y_j componentwise)."""
        table = None
        for word in range(self.words):
            g = self.guard[word]
            t = ((y[None, :, word] | g) - x[:, word, None]) & g
            ok = t == g
            table = ok if table is None else table & ok
        return table

    def some_row_below(self, x: np.ndarray, ref: np.ndarray) -> np.ndarray:
        """For each row of ``x``: does some row of ``ref`` divide it?"""
        hit = np.zeros(x.shape[0], dtype=bool)
        if not len(ref) or not len(x):
            return hit
        for s in range(0, x.shape[0], _CHUNK):
            blk = x[s:s + _CHUNK]
            acc = np.zeros(blk.shape[0], dtype=bool)
            for t in range(0, ref.shape[0], _CHUNK):
                acc |= self.le_table(ref[t:t + _CHUNK], blk).any(axis=0)
            hit[s:s + _CHUNK] = acc
        return hit

    def some_row_above(self, x: np.ndarray, ref: np.ndarray) -> np.ndarray:
        """For each row of ``x``: does it divide some row of ``ref``?"""
        hit = np.zeros(x.shape[0], dtype=bool)
        if not len(ref) or not len(x):
            return hit
        for s in range(0, x.shape[0], _CHUNK):
            blk = x[s:s + _CHUNK]
            acc = np.zeros(blk.shape[0], dtype=bool)
            for t in range(0, ref.shape[0], _CHUNK):
                acc |= self.le_table(blk, ref[t:t + _CHUNK]).any(axis=1)
            hit[s:s + _CHUNK] = acc
        return hit


def unique_rows(a: np.ndarray) -> np.ndarray:
    if a.shape[0] < 2:
        return a.copy()
    if a.shape[1] == 0:
        return a[:1].copy()
    packer = Packer(a.shape[1], int(a.max()))
    keys = np.ascontiguousarray(packer.pack(a))
    view = keys.view(np.dtype((np.void, keys.dtype.itemsize * keys.shape[1])))
    _, idx = np.unique(view.ravel(), return_index=True)
    return a[np.sort(idx)]


def canonical_order(a: np.ndarray) -> np.ndarray:
    """Indices sorting rows ascending in graded lexicographic order."""
    if a.shape[0] < 2:
        return np.arange(a.shape[0])
    keys = [a[:, i] for i in range(a.shape[1] - 1, -1, -1)]
    keys.append(a.sum(axis=1))
    return np.lexsort(keys)


def minimal_rows(a: np.ndarray) -> np.ndarray:
    """Divisibility-minimal rows of ``a``, in canonical (graded-lex) order.

    Rows are processed one degree level at a time; a row can only be divided
    by a distinct row of strictly smaller degree, so each level is tested
    against the rows already kept and never against itself.
    """
    if a.shape[0] == 0:
        return a.copy()
    if a.shape[1] == 0:
        return a[:1].copy()
    if a.shape[0] <= _SMALL:
        return _minimal_rows_small(a)
    a = unique_rows(a)
    deg = a.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    a, deg = a[order], deg[order]
    if deg[0] == 0:
        return a[:1]
    packer = Packer(a.shape[1], int(a.max()))
    packed = packer.pack(a)
    cuts = np.flatnonzero(np.diff(deg)) + 1
    starts = np.concatenate(([0], cuts))
    ends = np.concatenate((cuts, [len(a)]))
    keep = np.ones(len(a), dtype=bool)
    kept = packed[:0]
    for s, e in zip(starts, ends):
        if len(kept):
            keep[s:e] = ~packer.some_row_below(packed[s:e], kept)
        kept = np.concatenate((kept, packed[s:e][keep[s:e]]))
    out = a[keep]
    return out[canonical_order(out)]


def _minimal_rows_small(a: np.ndarray) -> np.ndarray:
    # direct (m, m, n) comparison; cheaper than packing for a few rows
    le = (a[:, None, :] <= a[None, :, :]).all(axis=2)
    eq = le & le.T
    # among equal rows keep the first; otherwise drop anything strictly above
    m = len(a)
    dup = (eq & _STRICT_UPPER[:m, :m]).any(axis=0)
    above = (le & ~eq).any(axis=0)
    out = a[~(dup | above)]
    return out[canonical_order(out)]


def lcm_products(a: np.ndarray, b: np.ndarray, budget: int | None = None) -> np.ndarray:
    """Minimal generators of (a) ∩ (b), optionally only those of degree <= budget."""
    n = a.shape[1]
    if n == 0:
        return a[:1].copy() if len(a) and len(b) else a[:0].copy()
    parts = []
    for s in range(0, a.shape[0], 256):
        lcm = np.maximum(a[s:s + 256, None, :], b[None, :, :]).reshape(-1, n)
        if budget is not None:
            lcm = lcm[lcm.sum(axis=1) <= budget]
        parts.append(lcm)
    rows = np.concatenate(parts) if parts else np.zeros((0, n), dtype=np.int64)
    return minimal_rows(rows)


def sum_products(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Minimal generators of the product ideal (a)(b)."""
    n = a.shape[1]
    if not len(a) or not len(b):
        return np.zeros((0, n), dtype=np.int64)
    rows = (a[:, None, :] + b[None, :, :]).reshape(-1, n)
    return minimal_rows(rows)
