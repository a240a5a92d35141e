"""Arithmetic in GF(p^f) and the labelled projective line.

Elements are coefficient vectors ``(c0, ..., c_{f-1})`` over GF(p).  The
enumeration index of an element is ``sum(c_i * p**i)``; projective-line
labels and every "first hit" scan use that order.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import InputError

TABLE_LIMIT = 4096


class FieldZeroDivision(InputError, ZeroDivisionError):
    """Inversion of zero."""


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q):
    """``(p, f)`` with ``q == p**f``, or None."""
    if q < 2:
        return None
    p = prime_factors(q)
    if len(p) != 1:
        return None
    p, f = p[0], 0
    while q % p == 0:
        q //= p
        f += 1
    return p, f


# polynomials over GF(p): coefficient lists, low degree first


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, m, p):
    a = _trim([x % p for x in a])
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _is_irreducible(coeffs, p):
    """Irreducibility by scanning monic divisors up to half the degree."""
    f = len(coeffs) - 1
    if f == 1:
        return True
    if coeffs[0] % p == 0:
        return False
    if any(sum(c * pow(r, i, p) for i, c in enumerate(coeffs)) % p == 0 for r in range(p)):
        return False
    for d in range(2, f // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _polymod(list(coeffs), list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^f) presented as GF(p)[x] / (modulus)."""

    p: int
    f: int
    modulus: tuple

    @property
    def q(self):
        return self.p**self.f

    @property
    def d(self):
        """``gcd(2, q + 1)``."""
        return 1 if self.p == 2 else 2

    def __repr__(self):
        return f"GF({self.p}^{self.f}) mod {self.modulus_str()}"

    def modulus_str(self):
        terms = []
        for i in range(self.f, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if c == 1 and i else f"{c}" + ("" if i == 0 else "*" + mono))
        return "+".join(terms)

    # -- element construction ---------------------------------------------

    def element(self, index):
        if not 0 <= index < self.q:
            raise InputError(f"index {index} outside GF({self.q})")
        coeffs = []
        for _ in range(self.f):
            coeffs.append(index % self.p)
            index //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        return [self.element(i) for i in range(self.q)]

    @property
    def zero(self):
        return FieldElement(self, (0,) * self.f)

    @property
    def one(self):
        return FieldElement(self, (1,) + (0,) * (self.f - 1))

    # -- raw coefficient arithmetic ----------------------------------------

    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x % self.p for x in a)

    def _mul(self, a, b):
        prod = [0] * (2 * self.f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        red = _polymod(prod, list(self.modulus), self.p)
        return tuple(red + [0] * (self.f - len(red)))

    # -- index-coded tables for small fields -------------------------------

    @cached_property
    def tables(self):
        """``(add, mul, neg, inv)`` lookup tables on enumeration indices."""
        q = self.q
        if q > TABLE_LIMIT:
            raise ValueError(f"GF({q}) is too large for lookup tables")
        els = self.elements()
        add = [[(a + b).index for b in els] for a in els]
        mul = [[(a * b).index for b in els] for a in els]
        neg = [(-a).index for a in els]
        inv = [0] + [a.inv().index for a in els[1:]]
        return add, mul, neg, inv

    def primitive_element(self):
        """First element in enumeration order of multiplicative order q-1."""
        ps = prime_factors(self.q - 1)
        for i in range(1, self.q):
            x = self.element(i)
            if all(x ** ((self.q - 1) // r) != self.one for r in ps):
                return x
        raise AssertionError("no primitive element")  # unreachable for a field

    def frobenius(self, x):
        return x**self.p


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple

    @property
    def index(self):
        return sum(c * self.spec.p**i for i, c in enumerate(self.coeffs))

    def _lift(self, other):
        if isinstance(other, int):
            return FieldElement(self.spec, ((other % self.spec.p),) + (0,) * (self.spec.f - 1))
        if other.spec != self.spec:
            raise InputError("elements of different fields")
        return other

    def __add__(self, other):
        other = self._lift(other)
        return FieldElement(self.spec, self.spec._add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, self.spec._neg(self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return FieldElement(self.spec, self.spec._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out, base = self.spec.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self):
        return not any(self.coeffs)

    def inv(self):
        if self.is_zero():
            raise FieldZeroDivision("inverse of zero in a finite field")
        return self ** (self.spec.q - 2)

    def __truediv__(self, other):
        return self * self._lift(other).inv()

    def order(self):
        if self.is_zero():
            raise InputError("zero has no multiplicative order")
        k, x = 1, self
        while x != self.spec.one:
            x = x * self
            k += 1
        return k

    def __repr__(self):
        return f"F{self.spec.q}[{self.index}]"


def field_make(p, f=1):
    """GF(p^f) with the least monic irreducible modulus.

    Candidates ``x^f + c_{f-1} x^{f-1} + ... + c_0`` are scanned in increasing
    order of ``sum(c_i p^i)``, so GF(8) gets ``x^3+x+1`` and GF(9) ``x^2+1``.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise InputError(f"{p!r} is not a prime")
    if not isinstance(f, int) or f < 1:
        raise InputError(f"degree must be a positive integer, got {f!r}")
    if p**f > 2**32:
        raise InputError(f"GF({p}^{f}) exceeds 2^32 elements")
    if f == 1:
        return FieldSpec(p, 1, (0, 1))
    for idx in range(p**f):
        low = [(idx // p**i) % p for i in range(f)]
        coeffs = low + [1]
        if _is_irreducible(coeffs, p):
            return FieldSpec(p, f, tuple(coeffs))
    raise AssertionError("no irreducible polynomial found")  # unreachable


def field_of_order(q):
    pf = prime_power(q)
    if pf is None:
        raise InputError(f"{q} is not a prime power")
    return field_make(*pf)


INFINITY = "inf"


def projective_line(spec):
    """Points ``0..q``: affine element with that index, then ``q`` for infinity."""
    return spec.elements() + [INFINITY]
