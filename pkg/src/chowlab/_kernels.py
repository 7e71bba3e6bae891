"""Numeric kernels with a numba path and a pure-numpy path.

The numba path is used when numba imports and ``CHOWLAB_NO_NUMBA`` is unset
(or ``0``).  Both paths are always importable so they can be compared
against each other; see ``benchmarks/bench_kernels.py``.

Kernels work on dense integer indices only.  Chow coefficient arrays are
int64; callers must check the returned float mass against
``INT64_SAFE`` and fall back to exact object arithmetic above it.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

# all chain-sum coefficients are nonnegative and bounded by the total mass
INT64_SAFE = float(2**60)


def use_numba() -> bool:
    flag = os.environ.get("CHOWLAB_NO_NUMBA", "").strip().lower()
    return HAVE_NUMBA and flag in ("", "0", "false", "no")


def _njit(fn):
    if HAVE_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn


# -- chain-sum dynamic program -------------------------------------------------
#
# F[x] = sum over chains bottom = p_0 < ... < p_s = x of the product of
# (t + ... + t^(d_i - 1)); H = sum_x F[x].  preds/gaps list, per element in
# CSR form, the strictly smaller elements with rank gap >= 2.


def _chain_sum_py(order, indptr, preds, gaps, n):
    N = order.shape[0]
    F = np.zeros((N, n), dtype=np.int64)
    mass = np.zeros(N, dtype=np.float64)
    b = order[0]
    F[b, 0] = 1
    mass[b] = 1.0
    for t in range(1, N):
        x = order[t]
        for k in range(indptr[x], indptr[x + 1]):
            y = preds[k]
            d = gaps[k]
            mass[x] += mass[y] * (d - 1)
            for i in range(n):
                v = F[y, i]
                if v != 0:
                    hi = min(n, i + d)
                    for j in range(i + 1, hi):
                        F[x, j] += v
    total = np.zeros(n, dtype=np.int64)
    m = 0.0
    for x in range(N):
        m += mass[x]
        for i in range(n):
            total[i] += F[x, i]
    return total, m


chain_sum_numba = _njit(_chain_sum_py)


def chain_sum_numpy(order, indptr, preds, gaps, n, exact=False):
    """Vectorised per element; ``exact=True`` uses Python ints (object dtype)."""
    N = order.shape[0]
    dtype = object if exact else np.int64
    F = np.zeros((N, n), dtype=dtype)
    mass = np.zeros(N, dtype=np.float64)
    F[order[0], 0] = 1
    mass[order[0]] = 1.0
    idx = np.arange(n)
    for x in order[1:]:
        lo, hi = indptr[x], indptr[x + 1]
        if lo == hi:
            continue
        ys = preds[lo:hi]
        ds = gaps[lo:hi]
        mass[x] = float(np.dot(mass[ys], ds - 1))
        acc = np.zeros(n, dtype=dtype)
        for d in np.unique(ds):
            S = F[ys[ds == d]].sum(axis=0)
            # out[i] = S[i-1] + ... + S[i-d+1]
            c = np.concatenate([np.zeros(1, dtype=dtype), np.cumsum(S)])
            acc = acc + (c[idx] - c[np.maximum(idx - int(d) + 1, 0)])
        F[x] = acc
    return F.sum(axis=0), float(mass.sum())


def chain_sum(order, indptr, preds, gaps, n):
    if use_numba():
        return chain_sum_numba(order, indptr, preds, gaps, n)
    return chain_sum_numpy(order, indptr, preds, gaps, n)


# -- symmetric chain decomposition of a product of chains ------------------------
#
# Points of C_{r_0} x ... x C_{r_{k-1}} are mixed-radix integers with the first
# coordinate least significant.  A decomposition is (order, offsets): chain c
# is order[offsets[c]:offsets[c+1]], listed bottom-up; chains sorted by start.


def strides_of(bounds):
    bounds = np.asarray(bounds, dtype=np.int64)
    strides = np.ones(len(bounds), dtype=np.int64)
    for k in range(1, len(bounds)):
        strides[k] = strides[k - 1] * (bounds[k - 1] + 1)
    return strides


def _scd_build_py(bounds, strides):
    k = bounds.shape[0]
    N = 1
    for r in bounds:
        N *= r + 1
    order = np.empty(N, dtype=np.int64)
    offsets = np.empty(N + 1, dtype=np.int64)
    # base case: the last factor on its own is one chain
    last = k - 1
    size = bounds[last] + 1
    for a in range(size):
        order[a] = a * strides[last]
    offsets[0] = 0
    offsets[1] = size
    nchains = 1
    new_order = np.empty(N, dtype=np.int64)
    new_offsets = np.empty(N + 1, dtype=np.int64)
    for f in range(k - 2, -1, -1):
        r = bounds[f]
        s = strides[f]
        pos = 0
        nc = 0
        new_offsets[0] = 0
        for c in range(nchains):
            lo = offsets[c]
            L = offsets[c + 1] - lo - 1
            for j in range(min(r, L) + 1):
                # column j up to row L - j, then along row L - j to the right
                for t in range(L - j + 1):
                    new_order[pos] = j * s + order[lo + t]
                    pos += 1
                corner = order[lo + L - j]
                for x in range(j + 1, r + 1):
                    new_order[pos] = x * s + corner
                    pos += 1
                nc += 1
                new_offsets[nc] = pos
        nchains = nc
        for i in range(pos):
            order[i] = new_order[i]
        for i in range(nc + 1):
            offsets[i] = new_offsets[i]
    # canonical chain order: by start point
    starts = np.empty(nchains, dtype=np.int64)
    for c in range(nchains):
        starts[c] = order[offsets[c]]
    perm = np.argsort(starts)
    out_order = np.empty(N, dtype=np.int64)
    out_offsets = np.empty(nchains + 1, dtype=np.int64)
    out_offsets[0] = 0
    pos = 0
    for ci in range(nchains):
        c = perm[ci]
        for i in range(offsets[c], offsets[c + 1]):
            out_order[pos] = order[i]
            pos += 1
        out_offsets[ci + 1] = pos
    return out_order, out_offsets


scd_build_numba = _njit(_scd_build_py)


def scd_build_numpy(bounds, strides):
    """Closed form of the same construction, vectorised over all points.

    Folding factors from the last to the first, a point with coordinate
    ``x`` in the new factor and position ``y`` on a sub-chain of length
    ``L`` lands on the L-shaped chain ``j = min(x, L - y)``, at position
    ``x + y - j`` of a chain of length ``r + L - 2j``.
    """
    bounds = np.asarray(bounds, dtype=np.int64)
    N = int(np.prod(bounds + 1))
    pts = np.arange(N, dtype=np.int64)
    digits = (pts[:, None] // strides[None, :]) % (bounds + 1)[None, :]
    k = len(bounds)
    start = np.zeros(N, dtype=np.int64)
    y = digits[:, k - 1].copy()
    L = np.full(N, bounds[k - 1], dtype=np.int64)
    for f in range(k - 2, -1, -1):
        x = digits[:, f]
        j = np.minimum(x, L - y)
        start += j * strides[f]
        y = x + y - j
        L = bounds[f] + L - 2 * j
    perm = np.lexsort((y, start))
    order = pts[perm]
    s_sorted = start[perm]
    breaks = np.flatnonzero(np.diff(s_sorted)) + 1
    offsets = np.concatenate([[0], breaks, [N]]).astype(np.int64)
    return order, offsets


def scd_build(bounds):
    bounds = np.asarray(bounds, dtype=np.int64)
    strides = strides_of(bounds)
    if use_numba():
        return scd_build_numba(bounds, strides)
    return scd_build_numpy(bounds, strides)


# verdict slots returned by the verifiers
V_PARTITION, V_SATURATED, V_SYMMETRIC, V_FORMULA, V_WHITNEY = range(5)


def _scd_verify_py(bounds, strides, order, offsets):
    k = bounds.shape[0]
    N = 1
    R = 0
    for r in bounds:
        N *= r + 1
        R += r
    ok = np.ones(5, dtype=np.bool_)
    rank = np.zeros(N, dtype=np.int64)
    in_formula = np.zeros(N, dtype=np.bool_)
    digits = np.zeros(k, dtype=np.int64)
    tot = 0
    for p in range(N):
        suffix = 0
        good = True
        for f in range(k - 1, -1, -1):
            a = digits[f]
            if a > suffix:
                good = False
            suffix += bounds[f] - 2 * a
        rank[p] = tot
        in_formula[p] = good
        # odometer step, first coordinate least significant
        f = 0
        while f < k and digits[f] == bounds[f]:
            tot -= digits[f]
            digits[f] = 0
            f += 1
        if f < k:
            digits[f] += 1
            tot += 1
    seen = np.zeros(N, dtype=np.int64)
    if order.shape[0] != N:
        ok[V_PARTITION] = False
    for i in range(order.shape[0]):
        p = order[i]
        if p < 0 or p >= N:
            ok[V_PARTITION] = False
        else:
            seen[p] += 1
    for p in range(N):
        if seen[p] != 1:
            ok[V_PARTITION] = False
    nch = offsets.shape[0] - 1
    half = R // 2
    W = np.zeros(R + 1, dtype=np.int64)
    for p in range(N):
        W[rank[p]] += 1
    Winit = np.zeros(R + 1, dtype=np.int64)
    n_formula = 0
    for p in range(N):
        if in_formula[p]:
            n_formula += 1
    for c in range(nch):
        lo = offsets[c]
        hi = offsets[c + 1]
        if hi <= lo:
            ok[V_PARTITION] = False
            continue
        a = order[lo]
        b = order[hi - 1]
        if rank[a] + rank[b] != R:
            ok[V_SYMMETRIC] = False
        if not in_formula[a]:
            ok[V_FORMULA] = False
        Winit[rank[a]] += 1
        for i in range(lo, hi - 1):
            u = order[i]
            v = order[i + 1]
            if rank[v] != rank[u] + 1:
                ok[V_SATURATED] = False
            else:
                diff = v - u
                hit = False
                for f in range(k):
                    if diff == strides[f]:
                        hit = True
                if not hit:
                    ok[V_SATURATED] = False
    if nch != n_formula:
        ok[V_FORMULA] = False
    # W(starts) must equal (W_0, W_1 - W_0, ..., W_half - W_half-1, 0, ...)
    for i in range(R + 1):
        if i == 0:
            want = W[0]
        elif i <= half:
            want = W[i] - W[i - 1]
        else:
            want = 0
        if Winit[i] != want:
            ok[V_WHITNEY] = False
    return ok


scd_verify_numba = _njit(_scd_verify_py)


def formula_mask_numpy(bounds, strides):
    bounds = np.asarray(bounds, dtype=np.int64)
    N = int(np.prod(bounds + 1))
    pts = np.arange(N, dtype=np.int64)
    digits = (pts[:, None] // strides[None, :]) % (bounds + 1)[None, :]
    # suffix[s] = sum_{i > s} (r_i - 2 a_i)
    terms = bounds[None, :] - 2 * digits
    suffix = np.cumsum(terms[:, ::-1], axis=1)[:, ::-1] - terms
    mask = np.all(digits <= suffix, axis=1)
    return mask, digits.sum(axis=1)


def scd_verify_numpy(bounds, strides, order, offsets):
    bounds = np.asarray(bounds, dtype=np.int64)
    N = int(np.prod(bounds + 1))
    R = int(bounds.sum())
    ok = np.ones(5, dtype=bool)
    mask, rank = formula_mask_numpy(bounds, strides)
    ok[V_PARTITION] = (
        order.shape[0] == N
        and order.min(initial=0) >= 0
        and order.max(initial=0) < N
        and bool(np.all(np.bincount(order, minlength=N) == 1))
        and bool(np.all(np.diff(offsets) > 0))
    )
    if not ok[V_PARTITION]:
        ok[:] = False
        return ok
    first = order[offsets[:-1]]
    last = order[offsets[1:] - 1]
    ok[V_SYMMETRIC] = bool(np.all(rank[first] + rank[last] == R))
    inner = np.ones(N, dtype=bool)
    inner[offsets[1:] - 1] = False
    u = order[:-1][inner[:-1]]
    v = order[1:][inner[:-1]]
    ok[V_SATURATED] = bool(np.all(rank[v] == rank[u] + 1) and np.all(np.isin(v - u, strides)))
    ok[V_FORMULA] = bool(np.array_equal(np.sort(first), np.flatnonzero(mask)))
    W = np.bincount(rank, minlength=R + 1)
    dW = np.zeros(R + 1, dtype=np.int64)
    half = R // 2
    dW[0] = W[0]
    dW[1 : half + 1] = W[1 : half + 1] - W[:half]
    ok[V_WHITNEY] = bool(np.array_equal(np.bincount(rank[first], minlength=R + 1), dW))
    return ok


def scd_verify(bounds, order, offsets):
    bounds = np.asarray(bounds, dtype=np.int64)
    strides = strides_of(bounds)
    if use_numba():
        return scd_verify_numba(bounds, strides, order, offsets)
    return scd_verify_numpy(bounds, strides, order, offsets)
