"""Permutations of ``{0, ..., n-1}`` and the generators file format."""

from functools import reduce
from math import gcd
from pathlib import Path

import numpy as np


class Permutation:
    """An immutable bijection of ``range(degree)``.

    ``p(x)`` is the image of ``x``.  Multiplication is left to right:
    ``(p * q)(x) == q(p(x))``, so ``x ** (p * q)`` reads "apply p, then q".
    """

    __slots__ = ("_a", "_key")

    def __init__(self, images, _check=True):
        a = np.array(images, dtype=np.intp)
        if a.ndim != 1 or a.size == 0:
            raise ValueError("a permutation needs a non-empty image list")
        if _check and not np.array_equal(np.sort(a), np.arange(a.size)):
            raise ValueError(f"not a bijection of range({a.size}): {list(images)}")
        a.flags.writeable = False
        self._a = a
        self._key = None

    @classmethod
    def identity(cls, n):
        return cls(np.arange(n), _check=False)

    @classmethod
    def from_cycles(cls, n, cycles):
        a = np.arange(n)
        for cyc in cycles:
            cyc = list(cyc)
            for i, x in enumerate(cyc):
                a[x] = cyc[(i + 1) % len(cyc)]
        return cls(a)

    @classmethod
    def _wrap(cls, arr):
        p = cls.__new__(cls)
        arr = np.asarray(arr, dtype=np.intp)
        arr.flags.writeable = False
        p._a = arr
        p._key = None
        return p

    @property
    def degree(self):
        return self._a.size

    @property
    def array(self):
        return self._a

    @property
    def images(self):
        return tuple(int(x) for x in self._a)

    def __call__(self, x):
        return int(self._a[x])

    def __len__(self):
        return self._a.size

    def _same_degree(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __mul__(self, other):
        if self._same_degree(other) is NotImplemented:
            return NotImplemented
        return Permutation._wrap(other._a[self._a])

    def __invert__(self):
        inv = np.empty_like(self._a)
        inv[self._a] = np.arange(self._a.size)
        return Permutation._wrap(inv)

    def inverse(self):
        return ~self

    def __pow__(self, k):
        if k < 0:
            return (~self) ** (-k)
        out = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self, g):
        """``g^-1 * self * g``."""
        return ~g * self * g

    def __eq__(self, other):
        return isinstance(other, Permutation) and np.array_equal(self._a, other._a)

    def __hash__(self):
        if self._key is None:
            self._key = hash(self._a.tobytes())
        return self._key

    def __lt__(self, other):
        return self.images < other.images

    def is_identity(self):
        return bool((self._a == np.arange(self._a.size)).all())

    def cycles(self, trivial=False):
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for x in range(self.degree):
            if seen[x]:
                continue
            cyc = [x]
            seen[x] = True
            y = int(self._a[x])
            while y != x:
                cyc.append(y)
                seen[y] = True
                y = int(self._a[y])
            if trivial or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self):
        return reduce(lambda a, b: a * b // gcd(a, b), (len(c) for c in self.cycles()), 1)

    def support(self):
        return [int(x) for x in np.flatnonzero(self._a != np.arange(self.degree))]

    def sign(self):
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __repr__(self):
        cyc = "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation<{self.degree}>{cyc or '()'}"


def compose(p, q):
    return p * q


def inverse(p):
    return ~p


def identity(n):
    return Permutation.identity(n)


def element_order(p):
    return p.order()


def read_generators(source):
    """Parse the generators file format.

    Line one is ``degree <n>``; every later line is ``perm i0 ... i(n-1)``
    with 0-based images.  ``#`` starts a comment line.  Returns
    ``(degree, [Permutation, ...])``.
    """
    text = Path(source).read_text() if not hasattr(source, "read") else source.read()
    degree = None
    perms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        if degree is None:
            if head != "degree" or len(rest) != 1:
                raise ValueError(f"line {lineno}: expected 'degree <n>'")
            degree = int(rest[0])
            if degree < 1:
                raise ValueError(f"line {lineno}: degree must be positive")
            continue
        if head != "perm":
            raise ValueError(f"line {lineno}: expected 'perm ...', got {head!r}")
        if len(rest) != degree:
            raise ValueError(f"line {lineno}: expected {degree} images, got {len(rest)}")
        try:
            perms.append(Permutation([int(x) for x in rest]))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise ValueError("missing 'degree <n>' header")
    return degree, perms


def write_generators(degree, perms):
    lines = [f"degree {degree}"]
    lines += ["perm " + " ".join(map(str, p.images)) for p in perms]
    return "\n".join(lines) + "\n"
