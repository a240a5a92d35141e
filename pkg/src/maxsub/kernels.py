"""Hot inner loops, each with a numba kernel and a vectorised numpy twin.

The public functions dispatch on :func:`maxsub._accel.backend`.  Both paths
return identical results; ``tests/test_kernels.py`` holds them to that.

Conventions shared by every kernel: a permutation is a row ``p`` of images,
``p[x]`` is the image of point ``x``, and products act left to right, so the
row of ``p * q`` is ``q[p]``.
"""

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ._accel import backend, njit

# ---------------------------------------------------------------------------
# subgroup closure inside an element table


@njit
def _closure_nb(elems, keys, base, weights, gens, start, cap):
    n_el = elems.shape[0]
    k = base.shape[0]
    seen = np.zeros(n_el, np.bool_)
    queue = np.empty(n_el, np.int64)
    tail = 0
    for s in start:
        if not seen[s]:
            seen[s] = True
            queue[tail] = s
            tail += 1
    head = 0
    while head < tail:
        e = queue[head]
        head += 1
        for j in range(gens.shape[0]):
            key = 0
            for t in range(k):
                key += gens[j, elems[e, base[t]]] * weights[t]
            pos = np.searchsorted(keys, key)
            if not seen[pos]:
                seen[pos] = True
                queue[tail] = pos
                tail += 1
                if tail > cap:
                    return queue[:0], False
    return np.sort(queue[:tail]), True


def _closure_np(elems, keys, base, weights, gens, start, cap):
    seen = np.zeros(elems.shape[0], dtype=bool)
    frontier = np.unique(start)
    seen[frontier] = True
    total = frontier.size
    while frontier.size:
        imgs = elems[frontier][:, base]
        found = [np.searchsorted(keys, g[imgs] @ weights) for g in gens]
        cand = np.unique(np.concatenate(found))
        cand = cand[~seen[cand]]
        seen[cand] = True
        total += cand.size
        if total > cap:
            return None
        frontier = cand
    return np.flatnonzero(seen)


def closure(elems, keys, base, weights, gens, start, cap=None):
    """Indices of the subgroup generated by ``gens`` (and ``start``).

    ``elems`` is a key-sorted element table, ``gens`` full permutation rows of
    members of that table.  Returns ``None`` once more than ``cap`` elements
    have been reached.
    """
    gens = np.ascontiguousarray(np.atleast_2d(gens), dtype=np.int64)
    start = np.ascontiguousarray(np.atleast_1d(start), dtype=np.int64)
    if cap is None:
        cap = elems.shape[0]
    if backend() == "numba":
        out, ok = _closure_nb(elems, keys, base, weights, gens, start, int(cap))
        return out if ok else None
    return _closure_np(elems, keys, base, weights, gens, start, cap)


# ---------------------------------------------------------------------------
# canonical right-coset representatives


@njit
def _canon_nb(batch, pts, ptr, trans):
    m, n = batch.shape
    out = np.empty_like(batch)
    tmp = np.empty(n, batch.dtype)
    for r in range(m):
        g = batch[r].copy()
        for lvl in range(ptr.shape[0] - 1):
            best = n + 1
            bi = -1
            for t in range(ptr[lvl], ptr[lvl + 1]):
                v = g[pts[t]]
                if v < best:
                    best = v
                    bi = t
            for x in range(n):
                tmp[x] = g[trans[bi, x]]
            g[:] = tmp
        out[r] = g
    return out


def _canon_np(batch, pts, ptr, trans):
    g = batch
    for lvl in range(len(ptr) - 1):
        a, b = ptr[lvl], ptr[lvl + 1]
        pick = np.argmin(g[:, pts[a:b]], axis=1) + a
        g = np.take_along_axis(g, trans[pick], axis=1)
    return g


def canonical_coset_reps(batch, pts, ptr, trans):
    """Lexicographically least element of each right coset ``H g``.

    ``pts[ptr[i]:ptr[i+1]]`` is the orbit of the i-th base point under the
    i-th stabiliser of ``H`` and ``trans`` the matching transversal rows; the
    base must be a base of the ambient group.
    """
    batch = np.ascontiguousarray(batch, dtype=np.int64)
    if backend() == "numba":
        return _canon_nb(batch, pts, ptr, trans)
    return _canon_np(batch, pts, ptr, trans)


# ---------------------------------------------------------------------------
# minimal block containing a pair of points


@njit
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit
def _block_nb(gens, a, b):
    d = gens.shape[1]
    parent = np.arange(d)
    qa = np.empty(d, np.int64)
    qb = np.empty(d, np.int64)
    lo, hi = min(a, b), max(a, b)
    parent[hi] = lo
    qa[0], qb[0] = lo, hi
    head, tail = 0, 1
    while head < tail:
        x, y = qa[head], qb[head]
        head += 1
        for j in range(gens.shape[0]):
            u = _find(parent, gens[j, x])
            v = _find(parent, gens[j, y])
            if u != v:
                if u > v:
                    u, v = v, u
                parent[v] = u
                qa[tail], qb[tail] = u, v
                tail += 1
    labels = np.empty(d, np.int64)
    for i in range(d):
        labels[i] = _find(parent, i)
    return labels


def _block_np(gens, a, b):
    d = gens.shape[1]
    pts = np.arange(d)
    labels = pts.copy()
    labels[max(a, b)] = min(a, b)
    count = d - 1
    while True:
        rows = np.concatenate([pts] + [g for g in gens])
        cols = np.concatenate([labels] + [g[labels] for g in gens])
        graph = coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(d, d))
        ncomp, comp = connected_components(graph, directed=False)
        rep = np.full(ncomp, d, dtype=np.int64)
        np.minimum.at(rep, comp, pts)
        labels = rep[comp]
        if ncomp == count:
            return labels
        count = ncomp


def minimal_block(gens, a, b):
    """Labels of the finest invariant partition joining points ``a`` and ``b``.

    Each point is labelled by the least point of its block.
    """
    gens = np.ascontiguousarray(np.atleast_2d(gens), dtype=np.int64)
    if backend() == "numba":
        return _block_nb(gens, int(a), int(b))
    return _block_np(gens, int(a), int(b))


# ---------------------------------------------------------------------------
# element orders


@njit
def _orders_nb(elems):
    m, n = elems.shape
    out = np.empty(m, np.int64)
    seen = np.zeros(n, np.bool_)
    for r in range(m):
        seen[:] = False
        acc = 1
        for x in range(n):
            if seen[x]:
                continue
            length = 0
            y = x
            while not seen[y]:
                seen[y] = True
                y = elems[r, y]
                length += 1
            a, b = acc, length
            while b:
                a, b = b, a % b
            acc = acc // a * length
        out[r] = acc
    return out


def _orders_np(elems):
    m, n = elems.shape
    ident = np.arange(n)
    out = np.zeros(m, dtype=np.int64)
    live = np.arange(m)
    power = elems[live].astype(np.int64)
    k = 1
    while live.size:
        done = (power == ident).all(axis=1)
        out[live[done]] = k
        live, power = live[~done], power[~done]
        base = elems[live].astype(np.int64)
        power = np.take_along_axis(base, power, axis=1)
        k += 1
    return out


def element_orders(elems):
    """Order of every row of ``elems``."""
    elems = np.ascontiguousarray(np.atleast_2d(elems))
    if backend() == "numba":
        return _orders_nb(elems)
    return _orders_np(elems)
