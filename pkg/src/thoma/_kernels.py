"""Compiled inner loops for the Monte Carlo paths."""
import numpy as np
from numba import njit


@njit(cache=True)
def _row_offsets(n):
    # λ_r <= n / r, so row r (1-based) never needs more than n // r slots
    off = np.zeros(n + 1, np.int64)
    for r in range(1, n + 1):
        off[r] = off[r - 1] + n // r
    return off


@njit(cache=True)
def rsk_shapes(words, width):
    """Final RSK shape of every row of ``words`` (row insertion, bump the first entry > a).

    Returns an (N, width) array of row lengths; raises if a shape has more
    than ``width`` rows.
    """
    N, n = words.shape
    off = _row_offsets(max(n, 1))
    buf = np.empty(max(off[-1], 1), words.dtype)
    lengths = np.zeros(n + 1, np.int64)
    out = np.zeros((N, width), np.int64)
    for s in range(N):
        nrows = 0
        for t in range(n):
            a = words[s, t]
            r = 0
            while True:
                if r == nrows:
                    buf[off[r]] = a
                    lengths[r] = 1
                    nrows += 1
                    break
                base = off[r]
                lo = 0
                hi = lengths[r]
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if buf[base + mid] > a:
                        hi = mid
                    else:
                        lo = mid + 1
                if lo == lengths[r]:
                    buf[base + lo] = a
                    lengths[r] += 1
                    break
                b = buf[base + lo]
                buf[base + lo] = a
                a = b
                r += 1
        if nrows > width:
            raise ValueError("shape has more rows than the output width")
        for r in range(nrows):
            out[s, r] = lengths[r]
    return out


@njit(cache=True)
def categorical_words(u, cum):
    """Map uniforms to letters 1..len(cum) via the cumulative weights ``cum``."""
    N, n = u.shape
    m = cum.shape[0]
    out = np.empty((N, n), np.int32)
    for s in range(N):
        for t in range(n):
            x = u[s, t]
            k = 0
            while k < m - 1 and x >= cum[k]:
                k += 1
            out[s, t] = k + 1
    return out


@njit(cache=True)
def word_shapes(words, d):
    """RSK shapes for words over letters 1..d, keeping each row as letter counts.

    Row r only ever holds letters >= r + 1, so at most d rows appear.
    """
    N, n = words.shape
    cnt = np.zeros((d, d + 1), np.int64)
    out = np.zeros((N, d), np.int64)
    for s in range(N):
        cnt[:, :] = 0
        for t in range(n):
            a = words[s, t]
            r = 0
            while True:
                b = a + 1
                while b <= d and cnt[r, b] == 0:
                    b += 1
                cnt[r, a] += 1
                if b > d:
                    break
                cnt[r, b] -= 1
                a = b
                r += 1
        for r in range(d):
            tot = 0
            for a in range(1, d + 1):
                tot += cnt[r, a]
            out[s, r] = tot
    return out
