"""Named groups as permutation groups.

Matrix and field constructions are turned into point actions when the group
is built; nothing here keeps a matrix carrier around.  The sporadic-sized
groups (M11, PSU3(3)) ship as generator data guarded by self-checks.
"""

import itertools
import re
from dataclasses import dataclass
from math import factorial
from pathlib import Path

import numpy as np

from .errors import ConsistencyError, InputError, ResourceBoundError
from .field import field_make, prime_power
from .group import PermGroup, SubgroupRef
from .perm import Permutation, read_generators

MAX_SYM_DEGREE = 16
MAX_WREATH_DEGREE = 64


def _perm(images):
    return Permutation(list(images))


def _check_n(n, lo, what):
    if not isinstance(n, (int, np.integer)) or not lo <= n <= MAX_SYM_DEGREE:
        raise InputError(f"{what} needs {lo} <= n <= {MAX_SYM_DEGREE}, got {n!r}")
    return int(n)


# ---------------------------------------------------------------------------
# elementary groups


def sym(n):
    n = _check_n(n, 1, "sym")
    if n == 1:
        return PermGroup((), degree=1, name="Sym(1)")
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [range(n)]))
    return PermGroup(gens, name=f"Sym({n})")


def alt(n):
    n = _check_n(n, 3, "alt")
    gens = [Permutation.from_cycles(n, [(0, 1, 2)])]
    if n > 3:
        long = range(n) if n % 2 else range(1, n)
        gens.append(Permutation.from_cycles(n, [long]))
    return PermGroup(gens, name=f"Alt({n})")


def cyclic(n):
    n = _check_n(n, 1, "cyclic")
    if n == 1:
        return PermGroup((), degree=1, name="C1")
    return PermGroup([Permutation.from_cycles(n, [range(n)])], name=f"C{n}")


def dihedral(n):
    """Symmetries of the regular ``n``-gon: order ``2n`` on ``n`` points."""
    if not isinstance(n, (int, np.integer)) or not 3 <= n <= MAX_WREATH_DEGREE:
        raise InputError(f"dihedral needs 3 <= n <= {MAX_WREATH_DEGREE}, got {n!r}")
    n = int(n)
    rot = _perm((i + 1) % n for i in range(n))
    ref = _perm((-i) % n for i in range(n))
    return PermGroup([rot, ref], name=f"D{2 * n}")


def quaternion():
    """Q8 in its regular representation (elements ±1, ±i, ±j, ±k)."""
    # element e = (s, u): sign s in {0,1}, unit u in {1,i,j,k} -> index 4*s + u
    table = {  # unit products u*v -> (sign, unit)
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def right_mult(v):
        out = []
        for e in range(8):
            s, u = divmod(e, 4)
            t, w = table[(u, v)]
            out.append(4 * ((s + t) % 2) + w)
        return _perm(out)

    return PermGroup([right_mult(1), right_mult(2)], name="Q8")


def affine_group(q, mult_order=None):
    """``x -> a x + b`` on GF(q) with ``a`` in the subgroup of order ``mult_order``.

    ``affine_group(5, 4)`` is F20, ``affine_group(7, 6)`` is C7:C6 and
    ``affine_group(8, 7)`` is 2^3:7.
    """
    pf = prime_power(q)
    if pf is None:
        raise InputError(f"{q} is not a prime power")
    F = field_make(*pf)
    add, mul, _, _ = F.tables
    m = q - 1 if mult_order is None else mult_order
    if (q - 1) % m:
        raise InputError(f"{m} does not divide {q - 1}")
    lam = F.primitive_element().index
    a = 1
    for _ in range((q - 1) // m):
        a = mul[a][lam]
    gens = [_perm(add[x][F.p**i] for x in range(q)) for i in range(F.f)]
    if m > 1:
        gens.append(_perm(mul[x][a] for x in range(q)))
    return PermGroup(gens, name=f"AGL1({q})" if m == q - 1 else f"{q}:{m}")


# ---------------------------------------------------------------------------
# projective lines


def _projective_field(q):
    if not isinstance(q, (int, np.integer)) or not 4 <= q <= 128:
        raise InputError(f"projective groups need 4 <= q <= 128, got {q!r}")
    pf = prime_power(int(q))
    if pf is None:
        raise InputError(f"{q} is not a prime power")
    return field_make(*pf)


def _mobius(F, fn):
    """Permutation of the ``q+1`` points induced by a map on GF(q) ∪ {∞}."""
    q = F.q
    return _perm(fn(x) for x in range(q + 1))


def _line_generators(F):
    add, mul, neg, inv = F.tables
    q, inf = F.q, F.q
    lam = F.primitive_element().index
    lam2 = mul[lam][lam]
    translate = _mobius(F, lambda x: x if x == inf else add[x][1])
    square_scale = _mobius(F, lambda x: x if x == inf else mul[x][lam2])
    invert = _mobius(F, lambda x: 0 if x == inf else (inf if x == 0 else neg[inv[x]]))
    scale = _mobius(F, lambda x: x if x == inf else mul[x][lam])
    frob = None
    if F.f > 1:
        powp = [(F.element(x) ** F.p).index for x in range(q)]
        frob = _mobius(F, lambda x: x if x == inf else powp[x])
    return translate, square_scale, invert, scale, frob


def psl2(q):
    """PSL2(q) on the projective line: ``x+1``, ``λ²x`` and ``-1/x``."""
    F = _projective_field(q)
    t, s2, w, _, _ = _line_generators(F)
    return PermGroup([t, s2, w], name=f"PSL2({q})")


def pgl2(q):
    F = _projective_field(q)
    t, _, w, s, _ = _line_generators(F)
    return PermGroup([t, s, w], name=f"PGL2({q})")


def pgammal2(q):
    F = _projective_field(q)
    t, _, w, s, frob = _line_generators(F)
    gens = [t, s, w] + ([frob] if frob is not None else [])
    return PermGroup(gens, name=f"PGammaL2({q})")


# ---------------------------------------------------------------------------
# PSL3(3) and its extension by the graph automorphism


def _pg2_3():
    """Points of PG(2,3): vectors with first nonzero entry 1, in index order."""
    pts = [v for v in itertools.product(range(3), repeat=3) if any(v)]
    pts = [v for v in pts if v[next(i for i in range(3) if v[i])] == 1]
    pts.sort(key=lambda v: v[0] + 3 * v[1] + 9 * v[2])
    return pts


def _normalize3(v):
    lead = next(c for c in v if c)
    inv = 1 if lead == 1 else 2
    return tuple(c * inv % 3 for c in v)


def _sl3_3_matrices():
    t = np.eye(3, dtype=int)
    t[0, 1] = 1
    c = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    return [t, c]


def _inv_mod3(m):
    """Inverse over GF(3) by the adjugate formula."""
    adj = np.empty((3, 3), dtype=int)
    for i in range(3):
        for j in range(3):
            minor = np.delete(np.delete(m, j, axis=0), i, axis=1)
            adj[i, j] = (-1) ** (i + j) * (minor[0, 0] * minor[1, 1] - minor[0, 1] * minor[1, 0])
    det = int(m[0] @ adj[:, 0]) % 3
    if det == 0:
        raise InputError("singular matrix")
    return adj * (1 if det == 1 else 2) % 3


def _matrix_on_points(m, pts, idx):
    return [idx[_normalize3(tuple(np.array(v) @ m % 3))] for v in pts]


def psl3_3():
    """PSL3(3) on the 13 points of PG(2,3) (row vectors, ``v -> vM``)."""
    pts = _pg2_3()
    idx = {v: i for i, v in enumerate(pts)}
    gens = [_perm(_matrix_on_points(m, pts, idx)) for m in _sl3_3_matrices()]
    return PermGroup(gens, name="PSL3(3)")


def sl3_3_point_line_perm(m):
    """The permutation of the 13 points and 13 lines induced by ``m`` in SL3(3)."""
    pts = _pg2_3()
    idx = {v: i for i, v in enumerate(pts)}
    m = np.asarray(m, dtype=int) % 3
    on_pts = _matrix_on_points(m, pts, idx)
    on_lines = _matrix_on_points(_inv_mod3(m).T % 3, pts, idx)
    return _perm(on_pts + [13 + j for j in on_lines])


def duality_26():
    """Point ``i`` <-> line ``13 + i``: the inverse-transpose graph automorphism."""
    return _perm(list(range(13, 26)) + list(range(13)))


def aut_psl3_3():
    """PSL3(3) extended by the inverse-transpose duality, on points + lines.

    Points are 0..12 and the line with dual coordinates ``u`` is ``13 + i``
    where ``i`` is the label of ``u`` as a point.  A matrix acts on lines by
    ``u -> u M^{-T}``; the duality swaps point ``i`` with line ``13 + i``.
    """
    gens = [sl3_3_point_line_perm(m) for m in _sl3_3_matrices()]
    return PermGroup(gens + [duality_26()], name="Aut(PSL3(3))")


def psl3_3_on_26():
    """The index-2 subgroup of ``aut_psl3_3()`` preserving points and lines."""
    A = aut_psl3_3()
    return PermGroup(A.generators[:2], name="PSL3(3) on 26")


# ---------------------------------------------------------------------------
# embedded generator data

# M11 on 11 points: an 11-cycle and an element of order 4
_M11_GENERATORS = [
    [list(range(11))],
    [(2, 6, 10, 7), (3, 9, 4, 5)],
]

# PSU3(3) on the 28 isotropic points of the Hermitian unital over GF(9);
# two elements of order 7
_PSU33_GENERATORS = [
    [(0, 27, 25, 2, 18, 20, 16), (1, 21, 3, 4, 14, 15, 8), (5, 19, 6, 11, 17, 9, 12), (7, 24, 26, 10, 23, 13, 22)],
    [(0, 24, 14, 26, 1, 25, 17), (2, 10, 21, 20, 6, 3, 15), (4, 19, 7, 22, 11, 27, 9), (5, 12, 23, 13, 8, 18, 16)],
]


def _self_checked(name, degree, cycles, order):
    G = PermGroup([Permutation.from_cycles(degree, c) for c in cycles], name=name)
    if G.order() != order:
        raise ConsistencyError(f"embedded {name} data has order {G.order()}, expected {order}")
    from .group import normal_closure

    g = G.generators[0]
    if normal_closure(G, [g]).sub.order() != order:
        raise ConsistencyError(f"embedded {name} data does not generate a simple group")
    return G


def m11():
    return _self_checked("M11", 11, _M11_GENERATORS, 7920)


def psu3_3():
    return _self_checked("PSU3(3)", 28, _PSU33_GENERATORS, 6048)


# ---------------------------------------------------------------------------
# products


def direct_product(A, B):
    da, db = A.degree, B.degree
    gens = [_perm(list(g.array) + list(range(da, da + db))) for g in A.generators]
    gens += [_perm(list(range(da)) + [da + x for x in g.array]) for g in B.generators]
    name = f"{A.name}x{B.name}" if A.name and B.name else None
    return PermGroup(gens, degree=da + db, name=name)


def wreath_product(A, B):
    """``A ≀ B`` in its imprimitive action: point ``j*deg(A) + i`` is ``i`` in copy ``j``."""
    da, db = A.degree, B.degree
    if da * db > MAX_WREATH_DEGREE:
        raise ResourceBoundError("wreath product degree", da * db, MAX_WREATH_DEGREE)
    n = da * db
    gens = []
    for orb in B.orbits():  # one copy per orbit of the top group suffices
        j = orb[0]
        for g in A.generators:
            img = np.arange(n)
            img[j * da : (j + 1) * da] = j * da + g.array
            gens.append(_perm(img))
    for b in B.generators:
        gens.append(_perm(b.array[k // da] * da + k % da for k in range(n)))
    name = f"{A.name} wr {B.name}" if A.name and B.name else None
    return PermGroup(gens, degree=n, name=name)


def diagonal_subgroup(G):
    """``{(g, g)}`` inside ``direct_product(G, G)``."""
    P = direct_product(G, G)
    d = G.degree
    gens = [_perm(list(g.array) + [d + x for x in g.array]) for g in G.generators]
    return SubgroupRef(P, PermGroup(gens, degree=2 * d, name=f"diag({G.name})"))


def swap_copies(degree, copies=2):
    """The top generator permuting ``copies`` blocks of size ``degree`` cyclically."""
    n = degree * copies
    return _perm((k + degree) % n for k in range(n))


def nla_like(S, X):
    """``G = <N, L, A>`` inside ``X ≀ C2``.

    ``N = S x S``, ``L`` is the diagonal of ``X x X`` and ``A`` swaps the two
    copies.  ``S`` must have index 2 in ``X``.  If ``S`` is given on fewer
    points than ``X`` (as for ``psl3_3`` inside ``aut_psl3_3``), the derived
    subgroup of ``X`` is used in its place after checking its order.
    """
    if S.degree != X.degree:
        from .structure import derived_subgroup

        D = derived_subgroup(X).sub
        if D.order() != S.order():
            raise InputError("cannot identify S inside X: orders of S and X' differ")
        S = D
    if not S.is_subgroup_of(X) or X.order() != 2 * S.order():
        raise InputError(f"S must have index 2 in X (|S| = {S.order()}, |X| = {X.order()})")
    d = X.degree
    gens = [_perm(list(s.array) + list(range(d, 2 * d))) for s in S.generators]
    gens += [_perm(list(range(d)) + [d + y for y in s.array]) for s in S.generators]
    gens += [_perm(list(x.array) + [d + y for y in x.array]) for x in X.generators]
    gens.append(swap_copies(d))
    return PermGroup(gens, degree=2 * d, name=f"NLA({S.name},{X.name})")


def nla_group():
    return nla_like(alt(5), sym(5))


# ---------------------------------------------------------------------------
# group expressions

_INT_CTORS = {"sym": sym, "alt": alt, "cyclic": cyclic, "psl2": psl2, "pgl2": pgl2, "pgammal2": pgammal2}
_NULLARY = {"psl3_3": psl3_3, "aut_psl3_3": aut_psl3_3, "m11": m11, "psu3_3": psu3_3}
_UNARY = {"diag": lambda G: diagonal_subgroup(G).sub}
_BINARY = {"dp": direct_product, "wr": wreath_product, "nla": nla_like}


class GroupExprError(InputError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


@dataclass(frozen=True)
class GroupExpr:
    """A parsed expression: constructor name plus integer or sub-expression args."""

    name: str
    args: tuple = ()

    def build(self):
        if self.name == "file":
            degree, perms = read_generators(self.args[0])
            return PermGroup(perms, degree=degree, name=f"file:{self.args[0]}")
        if self.name in _INT_CTORS:
            return _INT_CTORS[self.name](self.args[0])
        if self.name in _NULLARY:
            return _NULLARY[self.name]()
        built = [a.build() for a in self.args]
        if self.name in _UNARY:
            return _UNARY[self.name](*built)
        return _BINARY[self.name](*built)

    def __str__(self):
        if self.name == "file":
            return f"file:{self.args[0]}"
        if not self.args:
            return self.name
        return f"{self.name}({','.join(str(a) for a in self.args)})"


_FILE_PATH = re.compile(r"[^\s,()]*")
_TOKEN = re.compile(r"\s*(?:(?P<name>[a-z_][a-z0-9_]*)|(?P<int>\d+)|(?P<punct>[(),]))")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def fail(self, message, pos=None):
        raise GroupExprError(message, self.text, self.pos if pos is None else pos)

    def peek(self):
        return _TOKEN.match(self.text, self.pos)

    def _skip_ws(self):
        rest = self.text[self.pos :]
        return self.pos + len(rest) - len(rest.lstrip())

    def expect(self, kind, value=None):
        m = self.peek()
        if not m or m.group(kind) is None or (value is not None and m.group(kind) != value):
            self.fail(f"expected {value or kind!r}", self._skip_ws())
        self.pos = m.end()
        return m.group(kind)

    def expr(self):
        start = self._skip_ws()
        name = self.expect("name")
        if name == "file":
            if not self.text.startswith(":", self.pos):
                self.fail("expected ':' after file")
            # the path runs to the next ',', ')' or whitespace
            m = _FILE_PATH.match(self.text, self.pos + 1)
            if not m.group(0):
                self.fail("empty file path", self.pos + 1)
            self.pos = m.end()
            return GroupExpr("file", (m.group(0),))
        if name in _NULLARY:
            return GroupExpr(name)
        if name in _INT_CTORS:
            self.expect("punct", "(")
            value = int(self.expect("int"))
            self.expect("punct", ")")
            return GroupExpr(name, (value,))
        if name in _UNARY or name in _BINARY:
            arity = 1 if name in _UNARY else 2
            self.expect("punct", "(")
            args = [self.expr()]
            for _ in range(arity - 1):
                self.expect("punct", ",")
                args.append(self.expr())
            self.expect("punct", ")")
            return GroupExpr(name, tuple(args))
        self.fail(f"unknown group constructor {name!r}", start)

    def parse(self):
        e = self.expr()
        if self.text[self.pos :].strip():
            self.fail("trailing input", self._skip_ws())
        return e


def parse_expr(text):
    """Parse a group expression into a :class:`GroupExpr` (nothing is built)."""
    return _Parser(text).parse()


def parse_group_expr(text):
    """Build the group described by ``text``, e.g. ``"wr(sym(5),cyclic(2))"``."""
    expr = parse_expr(text)
    G = expr.build()
    if G.name is None:
        G.name = str(expr)
    return G


# ---------------------------------------------------------------------------
# simple groups of order at most 10^4


@dataclass(frozen=True)
class SimpleCatalogEntry:
    name: str
    order: int
    expr: str
    expected_satisfied: bool
    expected_witness: tuple = None  # (order, index) of a violating maximal subgroup

    def construct(self):
        G = parse_group_expr(self.expr)
        G.name = self.name
        return G


SIMPLE_CATALOG = (
    SimpleCatalogEntry("Alt(5)", 60, "alt(5)", True),
    SimpleCatalogEntry("PSL2(7)", 168, "psl2(7)", True),
    SimpleCatalogEntry("Alt(6)", 360, "alt(6)", False, (60, 6)),
    SimpleCatalogEntry("PSL2(8)", 504, "psl2(8)", True),
    SimpleCatalogEntry("PSL2(11)", 660, "psl2(11)", True),
    SimpleCatalogEntry("PSL2(13)", 1092, "psl2(13)", False, (12, 91)),
    SimpleCatalogEntry("PSL2(17)", 2448, "psl2(17)", False, (24, 102)),
    SimpleCatalogEntry("Alt(7)", 2520, "alt(7)", False, (168, 15)),
    SimpleCatalogEntry("PSL2(19)", 3420, "psl2(19)", False, (60, 57)),
    SimpleCatalogEntry("PSL2(16)", 4080, "psl2(16)", False, (60, 68)),
    SimpleCatalogEntry("PSL3(3)", 5616, "psl3_3", False, (24, 234)),
    SimpleCatalogEntry("PSU3(3)", 6048, "psu3_3", False, (168, 36)),
    SimpleCatalogEntry("PSL2(23)", 6072, "psl2(23)", False, (24, 253)),
    SimpleCatalogEntry("PSL2(25)", 7800, "psl2(25)", False, (300, 26)),
    SimpleCatalogEntry("M11", 7920, "m11", False, (660, 12)),
    SimpleCatalogEntry("PSL2(27)", 9828, "psl2(27)", False, (351, 28)),
)


def simple_catalog(max_order=10_000):
    return [e for e in SIMPLE_CATALOG if e.order <= max_order]


def order_formula_psl2(q):
    d = 1 if q % 2 == 0 else 2
    return q * (q * q - 1) // d


def order_formula_sym(n):
    return factorial(n)
