"""Array kernels with a numba path and a pure-numpy fallback.

The backend is chosen once at import time. Set ``CATNERVE_DISABLE_NUMBA=1``
to force the numpy code (useful for debugging and for the benchmark).
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

USE_NUMBA = numba is not None and os.environ.get("CATNERVE_DISABLE_NUMBA", "") in ("", "0")


def njit(func):
    if numba is None:  # pragma: no cover
        return func
    return numba.njit(cache=True)(func)


def edge_order(n):
    """Pairs (p, q) of [n] ordered by (q - p, p)."""
    return [(p, p + d) for d in range(1, n + 1) for p in range(n + 1 - d)]


def zero_requirements(n):
    """For each edge column, the columns that must already be 0 before it may be 0.

    Returns a padded int array of shape (E, width) and a count per row.
    """
    pairs = edge_order(n)
    col = {pq: j for j, pq in enumerate(pairs)}
    width = max(1, 2 * (n - 1))
    req = np.full((len(pairs), width), -1, dtype=np.int64)
    cnt = np.zeros(len(pairs), dtype=np.int64)
    for j, (p, q) in enumerate(pairs):
        k = 0
        for r in range(p + 1, q):
            req[j, k] = col[(p, r)]
            req[j, k + 1] = col[(r, q)]
            k += 2
        cnt[j] = k
    return req, cnt


def catalan_number(k):
    c = [1]
    for m in range(1, k + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[k]


@njit
def _catalan_rows_numba(n_edges, req, cnt, total):
    out = np.zeros((total, n_edges), dtype=np.uint8)
    bits = np.zeros(n_edges, dtype=np.uint8)
    state = np.zeros(n_edges + 1, dtype=np.int64)
    row = 0
    j = 0
    while j >= 0:
        if j == n_edges:
            for c in range(n_edges):
                out[row, c] = bits[c]
            row += 1
            j -= 1
            continue
        v = state[j]
        if v == 0:
            state[j] = 1
            ok = True
            for k in range(cnt[j]):
                if bits[req[j, k]] != 0:
                    ok = False
                    break
            if ok:
                bits[j] = 0
                j += 1
                state[j] = 0
        elif v == 1:
            state[j] = 2
            bits[j] = 1
            j += 1
            state[j] = 0
        else:
            j -= 1
    return out


def _catalan_rows_numpy(n_edges, req, cnt, total):
    rows = np.zeros((1, 0), dtype=np.uint8)
    for j in range(n_edges):
        cols = req[j, : cnt[j]]
        can_zero = ~rows[:, cols].any(axis=1) if len(cols) else np.ones(len(rows), dtype=bool)
        with_one = np.hstack([rows, np.ones((len(rows), 1), dtype=np.uint8)])
        with_zero = np.hstack([rows[can_zero], np.zeros((int(can_zero.sum()), 1), dtype=np.uint8)])
        rows = np.vstack([with_zero, with_one])
    if n_edges:
        rows = rows[np.lexsort(rows.T[::-1])]
    assert len(rows) == total
    return rows


def catalan_rows(n, use_numba=None):
    """All edge assignments of dimension-n Catalan simplices, sorted lexicographically.

    Columns follow ``edge_order(n)``.
    """
    if use_numba is None:
        use_numba = USE_NUMBA
    req, cnt = zero_requirements(n)
    n_edges = n * (n + 1) // 2
    total = catalan_number(n + 1)
    if use_numba:
        return _catalan_rows_numba(n_edges, req, cnt, total)
    return _catalan_rows_numpy(n_edges, req, cnt, total)


@njit
def _assoc_numba(comp):
    m = comp.shape[0]
    found = []
    for g in range(m):
        for f in range(m):
            gf = comp[g, f]
            if gf < 0:
                continue
            for h in range(m):
                hg = comp[h, g]
                if hg < 0:
                    continue
                if comp[h, gf] != comp[hg, f]:
                    found.append((h, g, f))
    out = np.empty((len(found), 3), dtype=np.int64)
    for i in range(len(found)):
        out[i, 0] = found[i][0]
        out[i, 1] = found[i][1]
        out[i, 2] = found[i][2]
    return out


def _assoc_numpy(comp):
    m = comp.shape[0]
    found = []
    for g in range(m):
        fs = np.nonzero(comp[g] >= 0)[0]
        hs = np.nonzero(comp[:, g] >= 0)[0]
        if not len(fs) or not len(hs):
            continue
        gf = comp[g, fs]
        hg = comp[hs, g]
        lhs = comp[hs[:, None], gf[None, :]]
        rhs = comp[hg[:, None], fs[None, :]]
        bad_h, bad_f = np.nonzero(lhs != rhs)
        for a, b in zip(bad_h, bad_f):
            found.append((hs[a], g, fs[b]))
    out = np.array(found, dtype=np.int64).reshape(-1, 3)
    # same (g, f, h) loop order as the compiled kernel
    return out[np.lexsort((out[:, 0], out[:, 2], out[:, 1]))] if len(out) else out


def associativity_violations(comp, use_numba=None):
    """Triples (h, g, f) with h(gf) != (hg)f in a composition table (-1 = undefined)."""
    if use_numba is None:
        use_numba = USE_NUMBA
    comp = np.ascontiguousarray(comp, dtype=np.int64)
    if use_numba:
        return _assoc_numba(comp)
    return _assoc_numpy(comp)


def backend():
    return "numba" if USE_NUMBA else "numpy"
