"""Brute-force reference implementations, independent of the package.

Everything here works on plain tuples and Python sets: no stabiliser chains,
no element tables, no numpy.  Slow, but small enough to trust.
"""

from itertools import product


def mul(p, q):
    """Left-to-right product: apply p, then q."""
    return tuple(q[i] for i in p)


def inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def elements(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def closure(gens, degree):
    return frozenset(elements(gens, degree))


def order_of(p):
    ident = tuple(range(len(p)))
    k, x = 1, p
    while x != ident:
        x = mul(x, p)
        k += 1
    return k


def all_subgroups(G, degree):
    """Every subgroup of ``G`` (a set of tuples), as frozensets."""
    ident = tuple(range(degree))
    subs = {frozenset([ident])}
    frontier = list(subs)
    elems = sorted(G)
    while frontier:
        nxt = []
        for H in frontier:
            for g in elems:
                if g in H:
                    continue
                K = closure(list(H) + [g], degree) if len(H) < 64 else closure(_gens(H, degree) + [g], degree)
                if K not in subs:
                    subs.add(K)
                    nxt.append(K)
        frontier = nxt
    return subs


def _gens(H, degree):
    gens, cur = [], frozenset([tuple(range(degree))])
    for h in sorted(H):
        if h not in cur:
            gens.append(h)
            cur = closure(gens, degree)
    return gens


def maximal_subgroups(G, degree):
    """All maximal subgroups (not up to conjugacy)."""
    subs = [H for H in all_subgroups(G, degree) if len(H) < len(G)]
    return [H for H in subs if not any(len(K) > len(H) and H < K for K in subs)]


def conjugacy_classes_of_subgroups(subs, G):
    classes = []
    seen = set()
    for H in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if H in seen:
            continue
        cls = {frozenset(mul(mul(inv(g), h), g) for h in H) for g in G}
        seen |= cls
        classes.append(H)
    return classes


def is_normal(N, G):
    return all(mul(mul(inv(g), n), g) in N for g in G for n in N)


def normal_subgroups(G, degree):
    return [H for H in all_subgroups(G, degree) if is_normal(H, G)]


def chief_factor_orders(G, degree):
    """Orders of the factors of one chief series, built from minimal normal steps."""
    normals = sorted(normal_subgroups(G, degree), key=len)
    series = [normals[0]]
    while len(series[-1]) < len(G):
        cur = series[-1]
        above = [N for N in normals if cur < N]
        series.append(min(above, key=len))
    return [len(b) // len(a) for a, b in zip(series, series[1:])]


def is_supersolvable(G, degree):
    from math import isqrt

    def prime(n):
        return n > 1 and all(n % d for d in range(2, isqrt(n) + 1))

    return all(prime(f) for f in chief_factor_orders(G, degree))


# -- polynomials over GF(p) ------------------------------------------------


def has_root_or_factor(coeffs, p):
    """True if the monic polynomial (low degree first) factors over GF(p).

    Tries every monic divisor of degree 1..deg/2 by long division.
    """
    f = len(coeffs) - 1
    for d in range(1, f // 2 + 1):
        for low in product(range(p), repeat=d):
            div = list(low) + [1]
            rem = list(coeffs)
            for shift in range(f - d, -1, -1):
                c = rem[shift + d] % p
                if c:
                    for i, a in enumerate(div):
                        rem[shift + i] = (rem[shift + i] - c * a) % p
            if not any(x % p for x in rem[:d]):
                return True
    return False


def irreducible_monics(p, f):
    out = []
    for low in product(range(p), repeat=f):
        coeffs = list(low) + [1]
        if not has_root_or_factor(coeffs, p):
            out.append(tuple(coeffs))
    return out
