"""Explicit element tables for groups of up to ~10^6 elements.

Every element is identified by the images of the base points of its group's
stabiliser chain.  Packing those images in radix ``degree`` gives an integer
key; the table is sorted by key, so the rank of any member is one
``searchsorted`` away and whole batches of products are looked up at once.
Subgroups of the tabled group are handled as sorted index arrays or boolean
masks over the table.
"""

from functools import cached_property

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import kernels

TABLE_BOUND = 10**6


class ElementTable:
    def __init__(self, chain):
        n = chain.degree
        base = np.array(chain.base, dtype=np.intp)
        if base.size and (n ** base.size).bit_length() > 62:
            raise ValueError(f"base of length {base.size} on {n} points overflows 64-bit keys")
        self.degree = n
        self.base = base
        self.weights = n ** np.arange(base.size, dtype=np.int64)
        raw = chain.enumerate()
        keys = raw[:, base].astype(np.int64) @ self.weights
        order = np.argsort(keys, kind="stable")
        dtype = np.uint8 if n <= 256 else np.uint16
        self.elems = np.ascontiguousarray(raw[order], dtype=dtype)
        self.keys = np.ascontiguousarray(keys[order])
        self.size = len(self.keys)
        self.identity = int(self.index(np.arange(n)[None, :])[0])

    def __len__(self):
        return self.size

    # -- lookup ------------------------------------------------------------

    def _keys_of(self, base_images):
        return np.asarray(base_images, dtype=np.int64) @ self.weights

    def index(self, rows):
        """Indices of member rows (membership is not verified)."""
        rows = np.atleast_2d(rows)
        return np.searchsorted(self.keys, self._keys_of(rows[:, self.base]))

    def index_checked(self, rows):
        """Indices of ``rows``, with -1 for non-members."""
        rows = np.atleast_2d(np.asarray(rows))
        pos = np.minimum(np.searchsorted(self.keys, self._keys_of(rows[:, self.base])), self.size - 1)
        ok = (self.elems[pos].astype(np.intp) == rows).all(axis=1)
        return np.where(ok, pos, -1)

    def row(self, i):
        return self.elems[i].astype(np.intp)

    def rows(self, idx):
        return self.elems[np.asarray(idx)].astype(np.intp)

    # -- arithmetic on indices ---------------------------------------------

    @cached_property
    def inv(self):
        """Index of the inverse of every element."""
        inv_rows = np.argsort(self.elems, axis=1)
        return self.index(inv_rows)

    @cached_property
    def _inv_base(self):
        return np.argsort(self.elems, axis=1)[:, self.base]

    def mul(self, a, b):
        """Index array of ``elems[a] * elems[b]`` (elementwise, broadcast)."""
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        imgs = np.take_along_axis(self.elems[b.ravel()], self.elems[a.ravel()][:, self.base].astype(np.intp), axis=1)
        return np.searchsorted(self.keys, self._keys_of(imgs)).reshape(a.shape)

    def right_map(self, g):
        """``i -> index(e_i * g)`` over the whole table."""
        g = np.asarray(g, dtype=np.intp)
        return np.searchsorted(self.keys, self._keys_of(g[self.elems[:, self.base]]))

    def conj_map(self, g):
        """``i -> index(g^-1 e_i g)`` over the whole table."""
        g = np.asarray(g, dtype=np.intp)
        ginv = np.argsort(g)
        return np.searchsorted(self.keys, self._keys_of(g[self.elems[:, ginv[self.base]]]))

    def conjugates_of(self, x):
        """``i -> index(e_i^-1 x e_i)``: the conjugate of ``x`` by every element."""
        x = np.asarray(x, dtype=np.intp)
        inner = x[self._inv_base]
        imgs = np.take_along_axis(self.elems, inner, axis=1)
        return np.searchsorted(self.keys, self._keys_of(imgs))

    def power(self, idx, k):
        """Indices of ``e_i ** k`` for an index array."""
        idx = np.asarray(idx)
        out = np.full(idx.shape, self.identity)
        base, k = idx, int(k)
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    @cached_property
    def orders(self):
        return kernels.element_orders(self.elems)

    # -- subgroups ---------------------------------------------------------

    def closure(self, gens, cap=None, start=None):
        """Sorted indices of the subgroup generated by index array ``gens``."""
        gens = np.atleast_1d(np.asarray(gens, dtype=np.intp))
        if start is None:
            start = [self.identity]
        if gens.size == 0:
            return np.array([self.identity], dtype=np.int64)
        return kernels.closure(self.elems, self.keys, self.base, self.weights, self.elems[gens].astype(np.int64), start, cap)

    def generators_of(self, idx):
        """A short generating list (indices) for the subgroup with index set ``idx``.

        Elements of large order are tried first; the choice is deterministic.
        """
        idx = np.asarray(idx)
        target = idx.size
        inside = np.zeros(self.size, dtype=bool)
        inside[self.identity] = True
        gens = []
        order = idx[np.lexsort((idx, -self.orders[idx]))]
        cur = 1
        while cur < target:
            pick = order[~inside[order]][0]
            gens.append(int(pick))
            members = self.closure(gens)
            inside[:] = False
            inside[members] = True
            cur = members.size
        return gens

    def mask(self, idx):
        m = np.zeros(self.size, dtype=bool)
        m[idx] = True
        return m

    def normal_closure(self, seed, gens_g):
        """Smallest subgroup containing index set ``seed`` normalised by ``gens_g``.

        ``gens_g`` are permutation rows of elements of the tabled group.
        """
        maps = [self.conj_map(g) for g in gens_g]
        gens = list(np.unique(np.asarray(seed, dtype=np.int64)))
        members = self.closure(gens)
        while True:
            inside = self.mask(members)
            missing = []
            for cm in maps:
                out = cm[members][~inside[cm[members]]]
                if out.size:
                    missing.append(int(out[0]))
            if not missing:
                return members
            gens.extend(missing)
            members = self.closure(gens)

    def classes(self, gens_g):
        """Conjugacy-class label of each element (label = least index in class)."""
        rows, cols = [], []
        for g in gens_g:
            cm = self.conj_map(g)
            rows.append(np.arange(self.size))
            cols.append(cm)
        if not rows:
            return np.arange(self.size)
        rows, cols = np.concatenate(rows), np.concatenate(cols)
        graph = coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(self.size, self.size))
        ncomp, comp = connected_components(graph, directed=False)
        rep = np.full(ncomp, self.size, dtype=np.int64)
        np.minimum.at(rep, comp, np.arange(self.size))
        return rep[comp]

    def orbits_of_action(self, maps):
        """Labels of orbits of the permutation action given by index maps."""
        if not maps:
            return np.arange(self.size)
        rows = np.concatenate([np.arange(self.size)] * len(maps))
        cols = np.concatenate(maps)
        graph = coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(self.size, self.size))
        ncomp, comp = connected_components(graph, directed=False)
        rep = np.full(ncomp, self.size, dtype=np.int64)
        np.minimum.at(rep, comp, np.arange(self.size))
        return rep[comp]
