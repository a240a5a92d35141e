"""Deterministic Schreier-Sims stabiliser chains.

Permutations here are bare ``numpy`` rows (``p[x]`` is the image of ``x``),
multiplied left to right: the row of ``p * q`` is ``q[p]``.
"""

import numpy as np

DENSE_LIMIT = 1024


def _moved_point(g):
    moved = np.flatnonzero(g != np.arange(g.size))
    return int(moved[0]) if moved.size else None


class _Level:
    __slots__ = ("point", "gens", "orbit", "u", "uinv", "done", "_dense")

    def __init__(self, point, n):
        self.point = point
        self.gens = []
        self.orbit = [point]
        ident = np.arange(n)
        self.u = {point: ident}
        self.uinv = {point: ident}
        self.done = [0]
        self._dense = None

    def add_generator(self, g):
        self.gens.append(g)
        self._dense = None
        orbit, u, uinv = self.orbit, self.u, self.uinv
        i = 0
        while i < len(orbit):
            beta = orbit[i]
            for s in self.gens:
                gamma = int(s[beta])
                if gamma not in u:
                    row = s[u[beta]]
                    inv = np.empty_like(row)
                    inv[row] = np.arange(row.size)
                    u[gamma] = row
                    uinv[gamma] = inv
                    orbit.append(gamma)
                    self.done.append(0)
            i += 1

    def dense(self, n):
        if self._dense is None:
            mask = np.zeros(n, dtype=bool)
            mask[self.orbit] = True
            table = np.tile(np.arange(n), (n, 1))
            for beta, inv in self.uinv.items():
                table[beta] = inv
            self._dense = (mask, table)
        return self._dense


class StabilizerChain:
    """Base, strong generators and transversals for a permutation group.

    ``base_prefix`` forces the first base points (redundant levels allowed),
    which is how subgroups get a chain compatible with their ambient group.
    """

    def __init__(self, degree, gens=(), base_prefix=()):
        self.degree = n = int(degree)
        self.identity = np.arange(n)
        gens = [np.asarray(g, dtype=np.intp) for g in gens]
        gens = [g for g in gens if _moved_point(g) is not None]
        self.levels = [_Level(int(b), n) for b in base_prefix]
        for g in gens:
            if all(g[lv.point] == lv.point for lv in self.levels):
                self.levels.append(_Level(_moved_point(g), n))
        for g in gens:
            for lv in self.levels:
                lv.add_generator(g)
                if g[lv.point] != lv.point:
                    break
        self._run(len(self.levels) - 1)

    # -- construction ------------------------------------------------------

    def _run(self, i):
        levels = self.levels
        while i >= 0:
            lv = levels[i]
            restart = None
            k = 0
            while k < len(lv.orbit) and restart is None:
                beta = lv.orbit[k]
                while lv.done[k] < len(lv.gens):
                    s = lv.gens[lv.done[k]]
                    lv.done[k] += 1
                    gamma = int(s[beta])
                    h = lv.uinv[gamma][s[lv.u[beta]]]
                    h, j = self._sift(h, i + 1)
                    if _moved_point(h) is not None:
                        if j == len(levels):
                            levels.append(_Level(_moved_point(h), self.degree))
                        for lv2 in levels[i + 1 : j + 1]:
                            lv2.add_generator(h)
                        restart = j
                        break
                k += 1
            i = restart if restart is not None else i - 1

    def _sift(self, g, start=0):
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            beta = int(g[lv.point])
            if beta == lv.point:
                continue
            inv = lv.uinv.get(beta)
            if inv is None:
                return g, i
            g = inv[g]
        return g, len(self.levels)

    def extend(self, g):
        """Add ``g`` to the group; returns False if it was already a member."""
        g = np.asarray(g, dtype=np.intp)
        h, j = self._sift(g)
        if _moved_point(h) is None:
            return False
        # the residue fixes base[:j], so it belongs to every stabiliser up to j
        if j == len(self.levels):
            self.levels.append(_Level(_moved_point(h), self.degree))
        for lv in self.levels[: j + 1]:
            lv.add_generator(h)
        self._run(j)
        return True

    # -- queries -----------------------------------------------------------

    @property
    def base(self):
        return [lv.point for lv in self.levels]

    def order(self):
        out = 1
        for lv in self.levels:
            out *= len(lv.orbit)
        return out

    def strong_generators(self):
        seen, out = set(), []
        for lv in self.levels:
            for g in lv.gens:
                key = g.tobytes()
                if key not in seen:
                    seen.add(key)
                    out.append(g)
        return out

    def contains(self, g):
        h, _ = self._sift(np.asarray(g, dtype=np.intp))
        return _moved_point(h) is None

    def contains_many(self, rows):
        """Vectorised membership test for a stack of permutation rows."""
        rows = np.asarray(rows, dtype=np.intp)
        n = self.degree
        if n > DENSE_LIMIT:
            return np.array([self.contains(r) for r in rows], dtype=bool)
        ok = np.ones(len(rows), dtype=bool)
        for lv in self.levels:
            mask, table = lv.dense(n)
            beta = rows[:, lv.point]
            ok &= mask[beta]
            rows = table[beta[:, None], rows]
        return ok & (rows == self.identity).all(axis=1)

    def orbit_transversal(self, i):
        lv = self.levels[i]
        return lv.orbit, lv.u

    def enumerate(self):
        """Every element as a row of an ``(order, degree)`` array."""
        elems = self.identity[None, :]
        for lv in reversed(self.levels):
            trans = np.stack([lv.u[b] for b in lv.orbit])
            elems = trans[:, elems].reshape(-1, self.degree)
        return elems

    def random_element(self, rng):
        g = self.identity
        for lv in reversed(self.levels):
            beta = lv.orbit[rng.integers(len(lv.orbit))]
            g = lv.u[beta][g]
        return g
