"""Hot loops with two interchangeable backends.

The compiled backend uses numba @njit kernels; the fallback is pure numpy.
Selection happens at import time: set GRAPHCODES_NO_NUMBA=1 to force the
numpy path (BACKEND reports which one is live).  Both implementations are
importable under explicit names for cross-checks and benchmarking, and both
must produce identical results: scans return the lexicographically first
failing copy of their block, amalgamation emits a fixed injective raw
encoding which the caller relabels.

Property codes: PROP_UNIQUE fails on copies where no colour occurs exactly
once, PROP_ODD fails on copies where every colour count is even.
"""

import itertools
import os

import numpy as np

PROP_UNIQUE = 0
PROP_ODD = 1

_CHUNK = 1 << 14  # copies per vectorized numpy chunk

if os.environ.get("GRAPHCODES_NO_NUMBA", "") == "1":
    HAS_NUMBA = False
else:
    try:
        from numba import njit

        HAS_NUMBA = True
    except ImportError:
        HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy backend


def pair_colours(ec, n, copies):
    """Colour matrix of shape (B, t*(t-1)/2) for a batch of sorted t-subsets."""
    t = copies.shape[1]
    ii, jj = np.triu_indices(t, 1)
    a = copies[:, ii]
    b = copies[:, jj]
    return ec[a * n - a * (a + 1) // 2 + (b - a - 1)]


def _fail_mask(cols, prop):
    cnt = (cols[:, :, None] == cols[:, None, :]).sum(axis=2)
    if prop == PROP_UNIQUE:
        return ~(cnt == 1).any(axis=1)
    return (cnt % 2 == 0).all(axis=1)


def check_copies_numpy(ec, n, copies, prop):
    """Index of the first failing copy in the batch, or -1."""
    if copies.shape[0] == 0:
        return -1
    hits = np.flatnonzero(_fail_mask(pair_colours(ec, n, copies), prop))
    return int(hits[0]) if hits.size else -1


def _iter_block(n, t, v0):
    """Chunks of the lex-ordered t-subsets with minimum vertex v0."""
    rest = itertools.combinations(range(v0 + 1, n), t - 1)
    while True:
        chunk = list(itertools.islice(rest, _CHUNK))
        if not chunk:
            return
        copies = np.empty((len(chunk), t), dtype=np.int64)
        copies[:, 0] = v0
        copies[:, 1:] = chunk
        yield copies


def scan_block_numpy(ec, n, t, v0, prop):
    """First failing copy with minimum vertex v0, or an empty array."""
    for copies in _iter_block(n, t, v0):
        hit = check_copies_numpy(ec, n, copies, prop)
        if hit >= 0:
            return copies[hit].copy()
    return np.empty(0, dtype=np.int64)


def min_colours_block_numpy(ec, n, t, v0):
    """[min_distinct, v1..vt] over the block, lex-first argmin; empty if no copies."""
    best = None
    for copies in _iter_block(n, t, v0):
        cols = pair_colours(ec, n, copies)
        dup = np.tril(cols[:, :, None] == cols[:, None, :], -1).any(axis=2)
        distinct = cols.shape[1] - dup.sum(axis=1)
        pos = int(distinct.argmin())
        if best is None or int(distinct[pos]) < int(best[0]):
            best = np.concatenate(([distinct[pos]], copies[pos])).astype(np.int64)
    return np.empty(0, dtype=np.int64) if best is None else best


def amalgam_raw_numpy(cc, dc, n, m, kc, kd):
    """Raw injective colour ids of the amalgamation, canonical edge order.

    Encoding: ascending-slope pairs map to c*kd + d, descending to
    kc*kd + c*kd + d, flat to 2*kc*kd + c, and within-column pairs to
    2*kc*kd + kc + pair_index(u1, u2).
    """
    big = n * m
    out = np.empty(big * (big - 1) // 2, dtype=np.int64)
    base_inf = 2 * kc * kd + kc
    ids = np.arange(big, dtype=np.int64)
    vs, us = ids // m, ids % m
    pos = 0
    for a in range(big - 1):
        v1, u1 = int(vs[a]), int(us[a])
        bv = vs[a + 1 :]
        bu = us[a + 1 :]
        row = np.empty(bv.size, dtype=np.int64)
        same = bv == v1
        row[same] = base_inf + (u1 * m - u1 * (u1 + 1) // 2 + (bu[same] - u1 - 1))
        diff = ~same
        if diff.any():
            v2 = bv[diff]
            u2 = bu[diff]
            ccol = cc[v1 * n - v1 * (v1 + 1) // 2 + (v2 - v1 - 1)]
            sub = np.empty(v2.size, dtype=np.int64)
            up = u1 < u2
            down = u1 > u2
            flat = u1 == u2
            if up.any():
                sub[up] = ccol[up] * kd + dc[u1 * m - u1 * (u1 + 1) // 2 + (u2[up] - u1 - 1)]
            if down.any():
                ud = u2[down]
                sub[down] = kc * kd + ccol[down] * kd + dc[ud * m - ud * (ud + 1) // 2 + (u1 - ud - 1)]
            if flat.any():
                sub[flat] = 2 * kc * kd + ccol[flat]
            row[diff] = sub
        out[pos : pos + row.size] = row
        pos += row.size
    return out


# ---------------------------------------------------------------------------
# numba backend

if HAS_NUMBA:

    @njit(cache=True, nogil=True)
    def _gather_check(ec, n, verts, t, buf, prop):
        p = 0
        for a in range(t):
            va = verts[a]
            base = va * n - va * (va + 1) // 2 - va - 1
            for b in range(a + 1, t):
                buf[p] = ec[base + verts[b]]
                p += 1
        ne = p
        if prop == 0:
            for a in range(ne):
                cnt = 0
                for b in range(ne):
                    if buf[b] == buf[a]:
                        cnt += 1
                if cnt == 1:
                    return False
            return True
        for a in range(ne):
            cnt = 0
            for b in range(ne):
                if buf[b] == buf[a]:
                    cnt += 1
            if cnt % 2 == 1:
                return False
        return True

    @njit(cache=True, nogil=True)
    def scan_block_numba(ec, n, t, v0, prop):
        r = t - 1
        if n - v0 - 1 < r:
            return np.empty(0, dtype=np.int64)
        idx = np.empty(r, dtype=np.int64)
        for i in range(r):
            idx[i] = v0 + 1 + i
        verts = np.empty(t, dtype=np.int64)
        verts[0] = v0
        buf = np.empty(t * (t - 1) // 2, dtype=np.int64)
        while True:
            for i in range(r):
                verts[1 + i] = idx[i]
            if _gather_check(ec, n, verts, t, buf, prop):
                return verts.copy()
            pos = r - 1
            while pos >= 0 and idx[pos] == n - r + pos:
                pos -= 1
            if pos < 0:
                return np.empty(0, dtype=np.int64)
            idx[pos] += 1
            for q in range(pos + 1, r):
                idx[q] = idx[q - 1] + 1

    @njit(cache=True, nogil=True)
    def check_copies_numba(ec, n, copies, prop):
        rows, t = copies.shape
        buf = np.empty(t * (t - 1) // 2, dtype=np.int64)
        for row in range(rows):
            if _gather_check(ec, n, copies[row], t, buf, prop):
                return row
        return -1

    @njit(cache=True, nogil=True)
    def min_colours_block_numba(ec, n, t, v0):
        r = t - 1
        ne = t * (t - 1) // 2
        if n - v0 - 1 < r:
            return np.empty(0, dtype=np.int64)
        idx = np.empty(r, dtype=np.int64)
        for i in range(r):
            idx[i] = v0 + 1 + i
        verts = np.empty(t, dtype=np.int64)
        verts[0] = v0
        buf = np.empty(ne, dtype=np.int64)
        out = np.empty(t + 1, dtype=np.int64)
        out[0] = ne + 1
        while True:
            for i in range(r):
                verts[1 + i] = idx[i]
            p = 0
            for a in range(t):
                va = verts[a]
                base = va * n - va * (va + 1) // 2 - va - 1
                for b in range(a + 1, t):
                    buf[p] = ec[base + verts[b]]
                    p += 1
            distinct = 0
            for a in range(ne):
                fresh = True
                for b in range(a):
                    if buf[b] == buf[a]:
                        fresh = False
                        break
                if fresh:
                    distinct += 1
            if distinct < out[0]:
                out[0] = distinct
                for a in range(t):
                    out[1 + a] = verts[a]
            pos = r - 1
            while pos >= 0 and idx[pos] == n - r + pos:
                pos -= 1
            if pos < 0:
                return out
            idx[pos] += 1
            for q in range(pos + 1, r):
                idx[q] = idx[q - 1] + 1

    @njit(cache=True, nogil=True)
    def amalgam_raw_numba(cc, dc, n, m, kc, kd):
        big = n * m
        out = np.empty(big * (big - 1) // 2, dtype=np.int64)
        base_inf = 2 * kc * kd + kc
        p = 0
        for a in range(big):
            v1 = a // m
            u1 = a % m
            for b in range(a + 1, big):
                v2 = b // m
                u2 = b % m
                if v1 == v2:
                    out[p] = base_inf + (u1 * m - u1 * (u1 + 1) // 2 + (u2 - u1 - 1))
                else:
                    ccol = cc[v1 * n - v1 * (v1 + 1) // 2 + (v2 - v1 - 1)]
                    if u1 < u2:
                        out[p] = ccol * kd + dc[u1 * m - u1 * (u1 + 1) // 2 + (u2 - u1 - 1)]
                    elif u1 > u2:
                        out[p] = kc * kd + ccol * kd + dc[u2 * m - u2 * (u2 + 1) // 2 + (u1 - u2 - 1)]
                    else:
                        out[p] = 2 * kc * kd + ccol
                p += 1
        return out

else:
    scan_block_numba = None
    check_copies_numba = None
    min_colours_block_numba = None
    amalgam_raw_numba = None


if HAS_NUMBA:
    scan_block = scan_block_numba
    check_copies = check_copies_numba
    min_colours_block = min_colours_block_numba
    amalgam_raw = amalgam_raw_numba
else:
    scan_block = scan_block_numpy
    check_copies = check_copies_numpy
    min_colours_block = min_colours_block_numpy
    amalgam_raw = amalgam_raw_numpy
