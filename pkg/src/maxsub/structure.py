"""Series, Sylow machinery, radicals, maximal subgroups and fingerprints.

Everything below the derived series works on the element table of the
ambient group: subgroups are sorted index arrays (or boolean masks) over it,
and conjugation, normalisers and closures are vectorised table lookups.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .elements import TABLE_BOUND
from .errors import ConsistencyError, InputError, ResourceBoundError
from .field import prime_factors
from .group import (
    PermGroup,
    SubgroupRef,
    coset_action,
    is_normal,
    minimal_block_systems,
    normal_closure,
    quotient_group,
)
from .perm import Permutation

LATTICE_BOUND = 2_000
TWO_GEN_BOUND = 12_000


def _ref(G, H):
    return SubgroupRef(G, H)


def _sub_from_idx(G, idx, name=None):
    return SubgroupRef(G, G.subgroup_from_indices(idx, name=name))


def _gen_rows(G):
    return [g.array for g in G.generators]


def p_part(n, p):
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def index_class(n):
    """``"prime"``, ``"prime_squared"`` or ``"other"`` for an index ``n``."""
    ps = prime_factors(n) if n > 1 else []
    if len(ps) == 1:
        if n == ps[0]:
            return "prime"
        if n == ps[0] ** 2:
            return "prime_squared"
    return "other"


# ---------------------------------------------------------------------------
# derived series


def commutator(a, b):
    return ~a * ~b * a * b


def derived_subgroup(G):
    """``G'``: normal closure of the commutators of generator pairs."""
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1 :]]
    comms = [c for c in comms if not c.is_identity()]
    if not comms:
        return _ref(G, PermGroup((), degree=G.degree))
    return normal_closure(G, comms)


def derived_series(G):
    """``[G, G', G'', ...]`` down to the first perfect term."""
    series = [_ref(G, G)]
    H = G
    while True:
        D = derived_subgroup(H).sub
        if D.order() == H.order():
            return series
        series.append(_ref(G, D))
        if D.order() == 1:
            return series
        H = D


def is_solvable(G):
    return derived_series(G)[-1].order() == 1


def is_perfect(G):
    return derived_subgroup(G).order() == G.order()


def derived_length(G):
    """Length of the derived series, or None for a non-solvable group."""
    s = derived_series(G)
    return len(s) - 1 if s[-1].order() == 1 else None


def is_abelian(G):
    gens = G.generators
    return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :])


# ---------------------------------------------------------------------------
# table helpers


def _members(G, H):
    return G.indices_of(H.sub if isinstance(H, SubgroupRef) else H)


def _normalizer_mask(t, gen_idx, inside):
    keep = np.ones(t.size, dtype=bool)
    for h in gen_idx:
        keep &= inside[t.conjugates_of(t.row(h))]
    return keep


def _core_mask(t, inside, gens_g):
    """Largest subgroup normalised by ``gens_g`` inside the subgroup ``inside``."""
    maps = [t.conj_map(g) for g in gens_g]
    core = inside.copy()
    while True:
        before = int(core.sum())
        for cm in maps:
            image = np.zeros(t.size, dtype=bool)
            image[cm[core]] = True
            core &= image
        if int(core.sum()) == before:
            return core


def _class_reps(G):
    t = G.table()
    labels = t.classes(_gen_rows(G))
    return np.unique(labels)


# ---------------------------------------------------------------------------
# Sylow subgroups, p-cores, radicals, residuals


def _sylow_indices(G, p, seed=0):
    t = G.table()
    n = t.size
    target = p_part(n, p)
    if target == 1:
        raise InputError(f"{p} does not divide |G| = {n}")
    orders = t.orders
    rng = np.random.default_rng(seed)
    x = None
    for _ in range(64):
        i = int(rng.integers(n))
        if orders[i] % p == 0:
            x = i
            break
    if x is None:
        x = int(np.flatnonzero(orders % p == 0)[0])
    o = int(orders[x])
    gens = [int(t.power(np.array([x]), o // p_part(o, p))[0])]
    P = t.closure(gens)
    while P.size < target:
        inside = t.mask(P)
        cand = np.flatnonzero(_normalizer_mask(t, gens, inside) & ~inside)
        found = None
        ords = orders[cand]
        for k in np.unique(ords // np.array([p_part(int(o), p) for o in ords])):
            sel = cand[ords // np.array([p_part(int(o), p) for o in ords]) == k]
            ys = t.power(sel, int(k))
            ys = ys[~inside[ys]]
            if ys.size:
                y = int(ys.min())
                found = y if found is None else min(found, y)
        if found is None:  # impossible by Sylow's theorem
            raise ConsistencyError("no p-element in N(P) outside P before reaching the Sylow order")
        gens.append(found)
        P = t.closure(gens)
    if P.size != target:
        raise ConsistencyError(f"p-subgroup of order {P.size} overshoots {target}")
    return P, gens


def sylow_subgroup(G, p, seed=0):
    """A Sylow ``p``-subgroup, grown from a random ``p``-element inside normalisers."""
    P, gens = _sylow_indices(G, p, seed)
    t = G.table()
    H = PermGroup([Permutation._wrap(t.row(i)) for i in gens], degree=G.degree, name=f"Syl{p}")
    return _ref(G, H)


def p_core(G, p, seed=0):
    """``O_p(G)``: the core of a Sylow ``p``-subgroup."""
    t = G.table()
    if G.order() % p:
        return _ref(G, PermGroup((), degree=G.degree))
    P, _ = _sylow_indices(G, p, seed)
    core = _core_mask(t, t.mask(P), _gen_rows(G))
    return _sub_from_idx(G, np.flatnonzero(core))


def solvable_radical(G, seed=0):
    """Largest solvable normal subgroup.

    Climbs ``1 = S_0 < S_1 < ...`` where ``S_{i+1}/S_i = O_p(G/S_i)`` for the
    first prime with a nontrivial p-core; ``O_p(G/S)`` is the core of ``PS/S``
    for a Sylow ``P`` of ``G``, so no quotient group is ever built.
    """
    t = G.table()
    rows = _gen_rows(G)
    S = np.array([t.identity])
    s_gens = []
    primes = prime_factors(G.order()) if G.order() > 1 else []
    changed = True
    while changed:
        changed = False
        for p in primes:
            if (t.size // S.size) % p:
                continue
            _, pgens = _sylow_indices(G, p, seed)
            PS = t.closure(pgens + s_gens)
            K = np.flatnonzero(_core_mask(t, t.mask(PS), rows))
            if K.size > S.size:
                S = K
                s_gens = t.generators_of(S)
                changed = True
                break
    return _sub_from_idx(G, S)


def o_p_residual(G, p):
    """``O^p(G)``: the normal subgroup generated by the ``p'``-elements.

    This is the normal closure of the Sylow ``q``-subgroups for ``q != p``;
    seeding with one ``p'``-element per conjugacy class gives the same group
    without choosing Sylow subgroups.
    """
    t = G.table()
    reps = _class_reps(G)
    seeds = [int(r) for r in reps if t.orders[r] % p and r != t.identity]
    if not seeds:
        return _ref(G, PermGroup((), degree=G.degree))
    return _sub_from_idx(G, t.normal_closure(seeds, _gen_rows(G)))


def is_nilpotent(G, seed=0):
    n = G.order()
    if n == 1:
        return True
    return all(p_core(G, p, seed).order() == p_part(n, p) for p in prime_factors(n))


# ---------------------------------------------------------------------------
# chief series


@dataclass(frozen=True)
class ChiefFactor:
    order: int
    kind: str  # "prime-cyclic" | "elementary-abelian" | "nonabelian"


@dataclass
class ChiefSeries:
    terms: list  # SubgroupRef, ascending from 1 to G
    factors: list  # ChiefFactor per consecutive pair

    def factor_orders(self):
        return [f.order for f in self.factors]


def _factor_kind(order):
    ps = prime_factors(order)
    if len(ps) == 1:
        return "prime-cyclic" if order == ps[0] else "elementary-abelian"
    return "nonabelian"


def _chief_indices(G):
    """Ascending list of index arrays of a chief series of ``G``."""
    t = G.table()
    rows = _gen_rows(G)
    reps = [int(r) for r in _class_reps(G) if r != t.identity]
    N = np.array([t.identity])
    n_gens = []
    terms = [N]
    while N.size < t.size:
        inside = t.mask(N)
        best = None
        for r in reps:
            if inside[r]:
                continue
            M = t.normal_closure(n_gens + [r], rows)
            if best is None or M.size < best.size:
                best = M
        # minimality over N: every class of best \ N must regenerate best
        in_best = t.mask(best)
        for r in reps:
            if in_best[r] and not inside[r]:
                if t.normal_closure(n_gens + [r], rows).size != best.size:
                    raise ConsistencyError("least normal closure is not minimal normal")
        N = best
        n_gens = t.generators_of(N)
        terms.append(N)
    return terms


def chief_series(G):
    t = G.table()
    terms = _chief_indices(G)
    factors = []
    for lo, hi in zip(terms, terms[1:]):
        order = hi.size // lo.size
        kind = _factor_kind(order)
        # abelian factors have [M, M] inside N; nonabelian ones do not
        hi_gens = t.generators_of(hi)
        comms = t.mul(t.mul(t.inv[hi_gens][:, None], t.inv[hi_gens][None, :]), t.mul(np.asarray(hi_gens)[:, None], np.asarray(hi_gens)[None, :]))
        abelian = bool(t.mask(lo)[comms].all())
        if abelian != (kind != "nonabelian"):
            raise ConsistencyError(f"chief factor of order {order} has inconsistent commutator structure")
        factors.append(ChiefFactor(order, kind))
    refs = [_sub_from_idx(G, idx) for idx in terms]
    return ChiefSeries(refs, factors)


def minimal_normal_subgroups(G):
    """All minimal normal subgroups (one per least normal closure)."""
    t = G.table()
    rows = _gen_rows(G)
    reps = [int(r) for r in _class_reps(G) if r != t.identity]
    closures = {}
    for r in reps:
        M = t.normal_closure([r], rows)
        closures.setdefault(M.tobytes(), M)
    cands = sorted(closures.values(), key=lambda M: (M.size, M.tolist()))
    out = []
    for M in cands:
        m = t.mask(M)
        # minimal iff it contains no smaller closure
        if not any(K.size < M.size and m[K].all() for K in cands):
            out.append(_sub_from_idx(G, M))
    return out


def _is_supersolvable_chief(G):
    if G.order() == 1:
        return True
    if not is_solvable(G):
        return False
    return all(f.kind == "prime-cyclic" for f in chief_series(G).factors)


def is_supersolvable(G, cross_check=False):
    """Every chief factor has prime order.

    With ``cross_check`` (and ``|G| <= 2000``) Huppert's criterion - every
    maximal subgroup has prime index - is evaluated as well and must agree.
    """
    ans = _is_supersolvable_chief(G)
    if cross_check and 1 < G.order() <= LATTICE_BOUND:
        huppert = all(index_class(r.index) == "prime" for r in maximal_subgroups(G, mode="lattice", with_fingerprints=False))
        if huppert != ans:
            raise ConsistencyError(f"chief-series and Huppert tests disagree on {G!r}")
    return ans


# ---------------------------------------------------------------------------
# subgroup classes


def _order_histogram(t, idx):
    vals, counts = np.unique(t.orders[idx], return_counts=True)
    return tuple(zip(vals.tolist(), counts.tolist()))


def _contains_conjugate(t, small_gens, big_mask):
    """Is some conjugate of ``<small_gens>`` contained in ``big_mask``?"""
    keep = np.ones(t.size, dtype=bool)
    for h in small_gens:
        keep &= big_mask[t.conjugates_of(t.row(h))]
        if not keep.any():
            return False
    return bool(keep.any())


class _ClassStore:
    """Conjugacy classes of subgroups, keyed by order and order histogram."""

    def __init__(self, t):
        self.t = t
        self.reps = []  # (idx, gens, mask)
        self.by_key = {}
        self.exact = {}

    def lookup(self, idx):
        """Class id of the subgroup ``idx``; registers a new class if needed."""
        key = idx.tobytes()
        if key in self.exact:
            return self.exact[key], False
        t = self.t
        inv = (idx.size, _order_histogram(t, idx))
        gens = t.generators_of(idx)
        for cid in self.by_key.get(inv, []):
            if _contains_conjugate(t, gens, self.reps[cid][2]):
                self.exact[key] = cid
                return cid, False
        cid = len(self.reps)
        self.reps.append((idx, gens, t.mask(idx)))
        self.by_key.setdefault(inv, []).append(cid)
        self.exact[key] = cid
        return cid, True


def _cyclic_subgroups(t):
    """Sorted index arrays of all cyclic subgroups, deduplicated."""
    n = t.size
    maxo = int(t.orders.max())
    powers = np.empty((n, maxo), dtype=np.int64)
    powers[:, 0] = t.identity
    cur = np.full(n, t.identity)
    allidx = np.arange(n)
    for k in range(1, maxo):
        cur = t.mul(cur, allidx)
        powers[:, k] = cur
    out = {}
    for i in range(n):
        s = np.unique(powers[i, : t.orders[i]])
        out.setdefault(s.tobytes(), s)
    return sorted(out.values(), key=lambda s: (s.size, s.tolist()))


def _lattice(G):
    """Subgroup classes by join-closure from all cyclic subgroups."""
    if G.order() > LATTICE_BOUND:
        raise ResourceBoundError("lattice-mode group order", G.order(), LATTICE_BOUND)
    t = G.table()
    store = _ClassStore(t)
    queue = []
    for C in _cyclic_subgroups(t):
        cid, new = store.lookup(C)
        if new:
            queue.append(cid)
    qi = 0
    while qi < len(queue):
        idx, gens, mask = store.reps[queue[qi]]
        qi += 1
        if idx.size == t.size:
            continue
        norm = _normalizer_mask(t, gens, mask)
        ngens = t.generators_of(np.flatnonzero(norm))
        labels = t.orbits_of_action([t.conj_map(t.row(g)) for g in ngens])
        for x in np.unique(labels[~mask]):
            K = t.closure(list(gens) + [int(x)])
            cid, new = store.lookup(K)
            if new:
                queue.append(cid)
    return store


def all_subgroups(G):
    """One representative per conjugacy class of subgroups (``|G| <= 2000``)."""
    store = _lattice(G)
    reps = sorted(store.reps, key=lambda r: (r[0].size, r[0].tolist()))
    t = G.table()
    return [_ref(G, PermGroup([Permutation._wrap(t.row(i)) for i in gens], degree=G.degree)) for _, gens, _ in reps]


def _lattice_maximal_classes(G):
    t = G.table()
    store = _lattice(G)
    proper = [r for r in store.reps if r[0].size < t.size]
    out = []
    for idx, gens, mask in proper:
        contained = any(
            big.size > idx.size and big.size % idx.size == 0 and _contains_conjugate(t, gens, bmask)
            for big, _, bmask in proper
        )
        if not contained:
            out.append((idx, gens))
    return out


# -- two-generated candidates ------------------------------------------------


def _overgroup_via_blocks(G, K_idx):
    """``None`` if ``K`` is maximal, else a strictly larger proper subgroup."""
    t = G.table()
    K = G.subgroup_from_indices(K_idx)
    act = coset_action(G, K)
    systems = minimal_block_systems(act.image, act.stabilizer_generators(), stop_at_nontrivial=True)
    for s in systems:
        if not s.is_trivial():
            block = [c for c in range(act.action_degree) if s.block_of[c] == s.block_of[0]]
            extra = t.index(act.reps[block])
            return t.closure(t.generators_of(K_idx) + [int(e) for e in extra])
    return None


def _mark_conjugates_containing(t, x, M_idx, M_norm, skip):
    """Mark the elements of every conjugate of ``M`` that contains ``x``."""
    in_m = t.mask(M_idx)
    es = np.flatnonzero(in_m[t.conjugates_of(t.row(x))])  # e^-1 x e in M  <=>  x in e M e^-1
    done = np.zeros(t.size, dtype=bool)
    for e in es:
        if done[e]:
            continue
        done[t.mul(np.full(M_norm.size, e), M_norm)] = True
        conj = t.conj_map(t.row(t.inv[e]))  # i -> e e_i e^-1
        skip[conj[M_idx]] = True


def _two_generated_maximal_classes(G):
    """Maximal classes among the subgroups ``<x, y>``.

    ``x`` runs over class representatives and ``y`` over representatives of
    the orbits of ``C_G(x)`` acting by conjugation.  A pair is skipped when
    some conjugate of ``y`` under ``C_G(x)`` already lies in a known proper
    subgroup containing ``x``.  A proper non-maximal candidate is enlarged
    along block stabilisers of its coset action until it becomes maximal.
    """
    if G.order() > TWO_GEN_BOUND:
        raise ResourceBoundError("two-generated-mode group order (use witness mode)", G.order(), TWO_GEN_BOUND)
    t = G.table()
    n = t.size
    store = _ClassStore(t)
    entries = {}  # class id -> (idx, gens, normaliser idx)
    cap = n // 2
    class_reps = [int(r) for r in _class_reps(G) if r != t.identity]
    class_reps.sort(key=lambda r: (-int(t.orders[r]), r))

    def register(idx):
        cid, new = store.lookup(idx)
        if new:
            rep, gens, mask = store.reps[cid]
            entries[cid] = (rep, gens, np.flatnonzero(_normalizer_mask(t, gens, mask)))
        return entries[cid]

    for x in class_reps:
        skip = np.zeros(n, dtype=bool)
        for rep, _, norm in list(entries.values()):
            _mark_conjugates_containing(t, x, rep, norm, skip)
        X = t.closure([x])
        if not skip[x] and X.size < n:
            # x lies in no known maximal class: the overgroups of <x> itself
            # include any cyclic maximal subgroup, which no pair <x, y> reaches
            M = X
            while (bigger := _overgroup_via_blocks(G, M)) is not None:
                M = bigger
            rep, _, norm = register(M)
            _mark_conjugates_containing(t, x, rep, norm, skip)
        skip[X] = True
        cent = np.flatnonzero(t.conjugates_of(t.row(x)) == x)
        labels = t.orbits_of_action([t.conj_map(t.row(c)) for c in t.generators_of(cent)])
        for y in np.unique(labels):
            if skip[labels == y].any():
                continue
            K = t.closure([x, int(y)], cap=cap)
            if K is None:  # more than |G|/2 elements: K = G
                continue
            M = K
            while (bigger := _overgroup_via_blocks(G, M)) is not None:
                M = bigger
            rep, _, norm = register(M)
            skip[K] = True
            _mark_conjugates_containing(t, x, rep, norm, skip)
    return [(rep, gens) for rep, gens, _ in entries.values()]


# -- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    order: int
    histogram: tuple  # ((element order, count), ...)
    center_order: int
    derived_length: object  # int, or None for "infinite" (non-solvable)
    is_supersolvable: bool
    abelian_invariants: tuple

    def histogram_dict(self):
        return dict(self.histogram)


@dataclass
class MaximalSubgroupReport:
    subgroup: SubgroupRef
    index: int
    index_class: str
    is_supersolvable: bool
    fingerprint: Fingerprint = field(default=None, repr=False)

    @property
    def order(self):
        return self.subgroup.order()

    @property
    def violates(self):
        """Neither supersolvable nor of prime or prime-squared index."""
        return not self.is_supersolvable and self.index_class == "other"


def maximal_subgroups(G, mode="auto", with_fingerprints=True):
    """One report per conjugacy class of maximal subgroups.

    ``mode="lattice"`` reads maximal classes off the full subgroup lattice
    (``|G| <= 2000``); ``mode="two-generated"`` certifies candidates
    ``<x, y>`` by primitivity of the coset action (``|G| <= 12000``).  "auto"
    picks the lattice when it is in range.
    """
    if G.order() == 1:
        return []
    if mode == "auto":
        mode = "lattice" if G.order() <= LATTICE_BOUND else "two-generated"
    if mode == "lattice":
        classes = _lattice_maximal_classes(G)
    elif mode == "two-generated":
        classes = _two_generated_maximal_classes(G)
    else:
        raise InputError(f"unknown mode {mode!r}")
    t = G.table()
    reports = []
    for idx, gens in classes:
        H = PermGroup([Permutation._wrap(t.row(i)) for i in gens], degree=G.degree)
        index = t.size // idx.size
        if with_fingerprints:
            fp = fingerprint(H)
            ss = fp.is_supersolvable
        else:
            fp, ss = None, _is_supersolvable_chief(H)
        reports.append(MaximalSubgroupReport(_ref(G, H), index, index_class(index), ss, fp))
    reports.sort(key=lambda r: (r.index, -int(r.is_supersolvable), r.fingerprint.histogram if r.fingerprint else ()))
    return reports


def is_maximal(G, H):
    from .group import is_maximal as _is_max

    return _is_max(G, H)


# ---------------------------------------------------------------------------
# fingerprints


def _abelian_invariants_of_abelian(A):
    """Invariant factors ``d1 | d2 | ...`` of an abelian permutation group."""
    n = A.order()
    if n == 1:
        return ()
    orders = A.table().orders
    per_prime = []
    for p in prime_factors(n):
        # c_k = #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i)), so
        # log_p(c_k / c_(k-1)) counts the cyclic factors of order >= p^k
        full = _log(p_part(n, p), p)
        logs = [0]
        while logs[-1] < full:
            logs.append(_log(int(np.sum((p ** len(logs)) % orders == 0)), p))
        at_least = [b - a for a, b in zip(logs, logs[1:])] + [0]
        exps = []
        for k in range(len(at_least) - 1):
            exps += [k + 1] * (at_least[k] - at_least[k + 1])
        per_prime.append((p, sorted(exps, reverse=True)))
    width = max(len(e) for _, e in per_prime)
    factors = []
    for j in range(width):
        d = 1
        for p, e in per_prime:
            if j < len(e):
                d *= p ** e[j]
        factors.append(d)
    return tuple(sorted(factors))


def _log(n, p):
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


def abelian_invariants(G):
    """Invariant factors of ``G / G'``."""
    D = derived_subgroup(G).sub
    if D.order() == G.order():
        return ()
    if D.order() == 1:
        return _abelian_invariants_of_abelian(G)
    Q, _ = quotient_group(G, D)
    return _abelian_invariants_of_abelian(Q)


def center(G):
    t = G.table()
    keep = np.ones(t.size, dtype=bool)
    for g in G.generators:
        gi = t.index(g.array[None, :])[0]
        keep &= t.conjugates_of(g.array) == gi
    return _sub_from_idx(G, np.flatnonzero(keep))


def fingerprint(G):
    if G.order() > TABLE_BOUND:
        raise ResourceBoundError("fingerprint group order", G.order(), TABLE_BOUND)
    t = G.table()
    hist = _order_histogram(t, np.arange(t.size))
    return Fingerprint(
        order=G.order(),
        histogram=hist,
        center_order=center(G).order(),
        derived_length=derived_length(G),
        is_supersolvable=_is_supersolvable_chief(G),
        abelian_invariants=abelian_invariants(G),
    )


def _reference_groups():
    from . import atlas

    refs = [
        ("Sym(4)", lambda: atlas.sym(4)),
        ("Sym(4)xC2", lambda: atlas.direct_product(atlas.sym(4), atlas.cyclic(2))),
        ("Alt(4)", lambda: atlas.alt(4)),
        ("C7:C6", lambda: atlas.affine_group(7, 6)),
        ("F20", lambda: atlas.affine_group(5, 4)),
        ("F56", lambda: atlas.affine_group(8, 7)),
        ("Sym(3)xSym(2)", lambda: atlas.direct_product(atlas.sym(3), atlas.sym(2))),
        ("Alt(5)", lambda: atlas.alt(5)),
        ("Sym(5)", lambda: atlas.sym(5)),
        ("PSL2(7)", lambda: atlas.psl2(7)),
        ("PGL2(7)", lambda: atlas.pgl2(7)),
        ("PSL2(8)", lambda: atlas.psl2(8)),
        ("PGammaL2(8)", lambda: atlas.pgammal2(8)),
        ("PSL2(11)", lambda: atlas.psl2(11)),
    ]
    refs += [(f"D{2 * n}", (lambda n=n: atlas.dihedral(n))) for n in range(3, 19)]
    return refs


# isomorphic reference groups listed under several names
_ALIASES = {"Sym(3)xSym(2)": "D12", "Alt(5)": "Alt(5)"}


@lru_cache(maxsize=1)
def reference_fingerprints():
    """``{fingerprint: [names]}`` over the embedded reference groups."""
    table = {}
    for name, make in _reference_groups():
        table.setdefault(fingerprint(make()), []).append(name)
    return table


def fingerprint_name(fp):
    """Name of the reference group with this fingerprint, or None.

    None is returned both for unknown fingerprints and for fingerprints
    shared by non-isomorphic references; known isomorphic aliases (D12 and
    Sym(3)xSym(2)) are reported together.
    """
    names = reference_fingerprints().get(fp)
    if not names:
        return None
    canon = {_ALIASES.get(n, n) for n in names}
    if len(canon) > 1:
        return None
    return " = ".join(sorted(names)) if len(names) > 1 else names[0]
