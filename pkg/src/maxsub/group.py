"""Permutation groups, subgroups, block systems and coset actions."""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .chain import StabilizerChain
from .elements import TABLE_BOUND, ElementTable
from .errors import InputError, ResourceBoundError
from .perm import Permutation

COSET_DEGREE_BOUND = 200_000


class PermGroup:
    """A finitely generated group of permutations of ``range(degree)``.

    The stabiliser chain and the element table are built on first use and
    cached; a group is immutable once constructed.
    """

    def __init__(self, generators=(), degree=None, name=None):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise InputError("a group without generators needs an explicit degree")
            degree = gens[0].degree
        if degree < 1:
            raise InputError("degree must be positive")
        for g in gens:
            if g.degree != degree:
                raise InputError(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = int(degree)
        self.generators = tuple(gens)
        self.name = name

    def __repr__(self):
        label = self.name or f"<{len(self.generators)} generators>"
        return f"PermGroup({label}, degree={self.degree})"

    # -- chain-backed queries ----------------------------------------------

    @cached_property
    def chain(self):
        return StabilizerChain(self.degree, [g.array for g in self.generators])

    def chain_with_base(self, prefix):
        return StabilizerChain(self.degree, [g.array for g in self.generators], base_prefix=prefix)

    def order(self):
        return self.chain.order()

    def __len__(self):
        return self.order()

    def is_trivial(self):
        return self.order() == 1

    def contains(self, p):
        if isinstance(p, Permutation):
            if p.degree != self.degree:
                raise InputError(f"degree mismatch: {p.degree} vs {self.degree}")
            p = p.array
        return self.chain.contains(p)

    __contains__ = contains
    is_member = contains

    def is_subgroup_of(self, other):
        return all(other.contains(g) for g in self.generators)

    def same_as(self, other):
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def identity(self):
        return Permutation.identity(self.degree)

    def random_element(self, rng):
        return Permutation._wrap(self.chain.random_element(rng))

    def strong_generators(self):
        return [Permutation._wrap(g) for g in self.chain.strong_generators()]

    # -- orbits --------------------------------------------------------------

    def orbit(self, point):
        if not 0 <= point < self.degree:
            raise InputError(f"point {point} outside range({self.degree})")
        seen = {int(point)}
        frontier = [int(point)]
        arrays = [g.array for g in self.generators]
        while frontier:
            nxt = []
            for x in frontier:
                for a in arrays:
                    y = int(a[x])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def orbits(self):
        left = set(range(self.degree))
        out = []
        while left:
            orb = self.orbit(min(left))
            out.append(orb)
            left -= set(orb)
        return out

    def is_transitive(self):
        return len(self.orbit(0)) == self.degree

    # -- element table -------------------------------------------------------

    def table(self, bound=TABLE_BOUND):
        if self.order() > bound:
            raise ResourceBoundError("group order", self.order(), bound)
        if "_table" not in self.__dict__:
            self.__dict__["_table"] = ElementTable(self.chain)
        return self.__dict__["_table"]

    def elements(self):
        t = self.table()
        return [Permutation._wrap(t.row(i)) for i in range(t.size)]

    def subgroup_from_indices(self, idx, name=None):
        t = self.table()
        gens = t.generators_of(idx)
        return PermGroup([Permutation._wrap(t.row(i)) for i in gens], degree=self.degree, name=name)

    def indices_of(self, sub):
        """Sorted table indices of the elements of a subgroup."""
        t = self.table()
        if not sub.generators:
            return np.array([t.identity])
        idx = t.index_checked(np.stack([g.array for g in sub.generators]))
        if (idx < 0).any():
            raise InputError("not a subgroup of the ambient group")
        return t.closure(idx)


def group_from_generators(gens, degree=None):
    return PermGroup(gens, degree=degree)


def trivial_group(degree):
    return PermGroup((), degree=degree)


def group_order(G):
    return G.order()


def is_member(G, p):
    return G.contains(p)


def orbit(G, point):
    return G.orbit(point)


def is_transitive(G):
    return G.is_transitive()


def group_from_rows(rows, degree):
    """Group generated by an explicit list of member rows, with few generators."""
    rows = np.asarray(rows, dtype=np.intp)
    ident = np.arange(degree)
    chain = StabilizerChain(degree)
    gens = []
    remaining = rows[~(rows == ident).all(axis=1)]
    while remaining.size:
        g = remaining[0]
        chain.extend(g)
        gens.append(Permutation._wrap(g.copy()))
        remaining = remaining[~chain.contains_many(remaining)]
    return PermGroup(gens, degree=degree)


# ---------------------------------------------------------------------------
# subgroups


@dataclass(frozen=True)
class SubgroupRef:
    ambient: PermGroup
    sub: PermGroup

    def __post_init__(self):
        if self.sub.degree != self.ambient.degree:
            raise InputError("subgroup and ambient group have different degrees")

    @property
    def index(self):
        return self.ambient.order() // self.sub.order()

    def order(self):
        return self.sub.order()

    def check(self):
        """Assert membership of every generator and Lagrange."""
        if not self.sub.is_subgroup_of(self.ambient):
            raise InputError("subgroup generator outside the ambient group")
        assert self.ambient.order() % self.sub.order() == 0


def subgroup(G, gens, name=None):
    ref = SubgroupRef(G, PermGroup(gens, degree=G.degree, name=name))
    ref.check()
    return ref


def _as_group(H):
    return H.sub if isinstance(H, SubgroupRef) else H


def normal_closure(G, S):
    """Smallest normal subgroup of ``G`` containing the permutations ``S``."""
    S = list(S.generators) if isinstance(S, PermGroup) else list(S)
    chain = StabilizerChain(G.degree)
    gens = []
    queue = []
    for s in S:
        if chain.extend(s.array):
            gens.append(s)
            queue.append(s)
    i = 0
    while i < len(queue):
        x = queue[i]
        for g in G.generators:
            c = x.conj(g)
            if chain.extend(c.array):
                gens.append(c)
                queue.append(c)
        i += 1
    return SubgroupRef(G, PermGroup(gens, degree=G.degree))


def subgroup_join(G, H, K):
    H, K = _as_group(H), _as_group(K)
    return SubgroupRef(G, PermGroup(H.generators + K.generators, degree=G.degree))


def intersection(H, K, bound=TABLE_BOUND):
    """``H ∩ K`` by enumerating the smaller group and sifting through the other."""
    H, K = _as_group(H), _as_group(K)
    if H.order() > K.order():
        H, K = K, H
    if H.order() > bound:
        raise ResourceBoundError("group order", H.order(), bound)
    rows = H.table().rows(np.arange(H.order()))
    members = rows[K.chain.contains_many(rows)]
    return SubgroupRef(H, group_from_rows(members, H.degree))


def centralizer(G, H, bound=TABLE_BOUND):
    """``C_G(H)`` by brute force over the elements of ``G``."""
    H = _as_group(H)
    t = G.table(bound)
    keep = np.ones(t.size, dtype=bool)
    for h in H.generators:
        hi = t.index_checked(h.array[None, :])[0]
        if hi < 0:
            rows = t.rows(np.arange(t.size))
            keep &= (h.array[rows] == rows[:, h.array]).all(axis=1)
        else:
            keep &= t.conjugates_of(h.array) == hi
    return SubgroupRef(G, G.subgroup_from_indices(np.flatnonzero(keep)))


def normalizer(G, H, bound=TABLE_BOUND):
    """``N_G(H) = {g : H^g = H}`` for a subgroup ``H`` of ``G``."""
    H = _as_group(H)
    t = G.table(bound)
    inside = t.mask(G.indices_of(H))
    keep = np.ones(t.size, dtype=bool)
    for h in H.generators:
        keep &= inside[t.conjugates_of(h.array)]
    return SubgroupRef(G, G.subgroup_from_indices(np.flatnonzero(keep)))


def is_normal(G, H):
    H = _as_group(H)
    return all(H.contains(h.conj(g)) for h in H.generators for g in G.generators)


# ---------------------------------------------------------------------------
# block systems


@dataclass(frozen=True)
class BlockSystem:
    degree: int
    block_of: tuple
    block_count: int

    @classmethod
    def from_labels(cls, labels):
        labels = [int(x) for x in labels]
        ids = {}
        block_of = tuple(ids.setdefault(x, len(ids)) for x in labels)
        return cls(len(labels), block_of, len(ids))

    @property
    def block_size(self):
        return self.degree // self.block_count

    def is_trivial(self):
        return self.block_count in (1, self.degree)

    def blocks(self):
        out = [[] for _ in range(self.block_count)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return out


def _gen_rows(G):
    if not G.generators:
        return np.arange(G.degree)[None, :]
    return np.stack([g.array for g in G.generators])


def _suborbit_reps(degree, stab_gens):
    seen = np.zeros(degree, dtype=bool)
    seen[0] = True
    reps = []
    rows = [g.array if isinstance(g, Permutation) else np.asarray(g) for g in stab_gens]
    for x in range(1, degree):
        if seen[x]:
            continue
        reps.append(x)
        seen[x] = True
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for r in rows:
                    z = int(r[y])
                    if not seen[z]:
                        seen[z] = True
                        nxt.append(z)
            frontier = nxt
    return reps


def _point_stabilizer_gens(G):
    chain = G.chain_with_base([0])
    return [g for lv in chain.levels[1:] for g in lv.gens]


def minimal_block_systems(G, stab_gens=None, stop_at_nontrivial=False):
    """Block systems generated by the pairs ``{0, x}``.

    One representative ``x`` per orbit of the stabiliser of 0 suffices, since
    the stabiliser maps the system for ``x`` onto the system for any other
    point of the same suborbit.
    """
    if not G.is_transitive():
        raise InputError("block systems need a transitive group")
    if G.degree == 1:
        return []
    if stab_gens is None:
        stab_gens = _point_stabilizer_gens(G)
    gens = _gen_rows(G)
    out, seen = [], set()
    for x in _suborbit_reps(G.degree, stab_gens):
        labels = kernels.minimal_block(gens, 0, x)
        system = BlockSystem.from_labels(labels)
        if system.block_of not in seen:
            seen.add(system.block_of)
            out.append(system)
            if stop_at_nontrivial and not system.is_trivial():
                break
    return out


def is_primitive(G, stab_gens=None):
    if not G.is_transitive():
        raise InputError("primitivity is defined for transitive groups")
    systems = minimal_block_systems(G, stab_gens, stop_at_nontrivial=True)
    return all(s.is_trivial() for s in systems)


# ---------------------------------------------------------------------------
# coset actions and quotients


def _row_keys(rows, base, degree):
    imgs = rows[:, base].astype(np.int64)
    if (degree ** len(base)).bit_length() <= 62:
        return imgs @ (degree ** np.arange(len(base), dtype=np.int64))
    return [r.tobytes() for r in imgs]


@dataclass
class CosetActionMap:
    """Action of ``ambient`` on the right cosets of ``point_stabilizer``.

    ``reps[c]`` is the canonical representative of coset ``c``; coset 0 is
    the subgroup itself.
    """

    ambient: PermGroup
    point_stabilizer: PermGroup
    action_degree: int
    generator_images: list
    reps: np.ndarray = field(repr=False)
    _keys: dict = field(repr=False, default_factory=dict)
    _canon: tuple = field(repr=False, default=None)

    @cached_property
    def image(self):
        return PermGroup(self.generator_images, degree=self.action_degree)

    def coset_of(self, rows):
        """Coset numbers of ``H g`` for a stack of member rows ``g``."""
        rows = np.atleast_2d(np.asarray(rows, dtype=np.intp))
        canon = kernels.canonical_coset_reps(rows, *self._canon)
        keys = _row_keys(canon, self.ambient.chain.base, self.ambient.degree)
        return np.array([self._keys[k if isinstance(k, bytes) else int(k)] for k in keys])

    def act(self, g):
        """Image of a single element as a permutation of the cosets."""
        g = g.array if isinstance(g, Permutation) else np.asarray(g)
        return Permutation._wrap(self.coset_of(g[self.reps]))

    def stabilizer_generators(self):
        """Images of the point stabiliser's generators (they fix coset 0)."""
        return [self.act(h) for h in self.point_stabilizer.generators]

    def kernel(self):
        """Core of the point stabiliser: elements fixing every coset."""
        G = self.ambient
        t = G.table()
        keep = np.ones(t.size, dtype=bool)
        all_rows = t.rows(np.arange(t.size))
        for c in range(self.action_degree):
            # g fixes coset c  <=>  rep_c g rep_c^-1 lies in H
            r = self.reps[c]
            rinv = np.argsort(r)
            conj = rinv[all_rows[:, r]]
            keep &= self.point_stabilizer.chain.contains_many(conj)
        return SubgroupRef(G, G.subgroup_from_indices(np.flatnonzero(keep)))


def _coset_canon_data(G, H):
    hchain = StabilizerChain(G.degree, [g.array for g in H.generators], base_prefix=G.chain.base)
    pts, ptr, trans = [], [0], []
    for lv in hchain.levels[: len(G.chain.base)]:
        if len(lv.orbit) == 1:
            continue
        for b in lv.orbit:
            pts.append(b)
            trans.append(lv.u[b])
        ptr.append(len(pts))
    if not pts:
        return np.zeros(0, np.int64), np.zeros(1, np.int64), np.zeros((0, G.degree), np.int64)
    return np.array(pts, dtype=np.int64), np.array(ptr, dtype=np.int64), np.stack(trans).astype(np.int64)


def coset_action(G, H, bound=COSET_DEGREE_BOUND):
    """Permutation action of ``G`` on the right cosets of ``H``."""
    H = _as_group(H)
    if not H.is_subgroup_of(G):
        raise InputError("not a subgroup of the ambient group")
    d = G.order() // H.order()
    if d > bound:
        raise ResourceBoundError("coset action degree", d, bound)
    canon = _coset_canon_data(G, H)
    base = G.chain.base
    n = G.degree
    gens = _gen_rows(G)
    reps = np.empty((d, n), dtype=np.int64)
    reps[0] = kernels.canonical_coset_reps(np.arange(n)[None, :], *canon)[0]
    keymap = {}
    k0 = _row_keys(reps[:1], base, n)[0]
    keymap[k0 if isinstance(k0, bytes) else int(k0)] = 0
    images = np.full((len(gens), d), -1, dtype=np.int64)
    count = 1
    frontier = np.array([0])
    while frontier.size:
        nxt = []
        for j, s in enumerate(gens):
            prod = s[reps[frontier]]
            canon_rows = kernels.canonical_coset_reps(prod, *canon)
            keys = _row_keys(canon_rows, base, n)
            for r, key in enumerate(keys):
                key = key if isinstance(key, bytes) else int(key)
                c = keymap.get(key)
                if c is None:
                    if count >= d:
                        raise AssertionError("coset enumeration overflow")
                    c = keymap[key] = count
                    reps[count] = canon_rows[r]
                    nxt.append(count)
                    count += 1
                images[j, frontier[r]] = c
        frontier = np.array(nxt, dtype=np.int64)
    if count != d:
        raise AssertionError(f"found {count} cosets, expected {d}")
    if not G.generators:
        images = np.zeros((0, d), dtype=np.int64)
    gen_images = [Permutation._wrap(row) for row in images]
    return CosetActionMap(G, H, d, gen_images, reps, keymap, canon)


def is_maximal(G, H, bound=COSET_DEGREE_BOUND):
    """Maximality of ``H`` in ``G`` via primitivity of the coset action."""
    H = _as_group(H)
    if H.order() == G.order():
        raise InputError("H equals G; maximality needs a proper subgroup")
    act = coset_action(G, H, bound)
    return is_primitive(act.image, act.stabilizer_generators())


def quotient_group(G, N, bound=COSET_DEGREE_BOUND):
    """``G/N`` realised as the action on the cosets of a normal ``N``."""
    N = _as_group(N)
    if not is_normal(G, N):
        raise InputError("quotient by a subgroup that is not normal")
    act = coset_action(G, N, bound)
    return act.image, act


def preimage(projection, S):
    """Full inverse image in the ambient group of a subgroup of the quotient."""
    S = _as_group(S)
    lifts = [Permutation._wrap(projection.reps[s(0)]) for s in S.generators]
    gens = list(projection.point_stabilizer.generators) + lifts
    return SubgroupRef(projection.ambient, PermGroup(gens, degree=projection.ambient.degree))
