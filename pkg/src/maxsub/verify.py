"""Verification harness: one check per claim, each returning a CheckResult.

Expected values that the harness compares against (catalog verdicts,
witness shapes, indices) are embedded constants; a disagreement is a
failure, never a silent update.
"""

import time
from dataclasses import dataclass, field

import numpy as np

from . import atlas
from .errors import ConsistencyError, InputError, ResourceBoundError
from .field import is_prime, prime_factors
from .group import PermGroup, SubgroupRef, is_normal, normalizer, quotient_group
from .perm import Permutation
from .structure import (
    LATTICE_BOUND,
    TWO_GEN_BOUND,
    MaximalSubgroupReport,
    _is_supersolvable_chief,
    chief_series,
    fingerprint,
    fingerprint_name,
    index_class,
    is_maximal,
    is_nilpotent,
    is_solvable,
    is_supersolvable,
    maximal_subgroups,
    o_p_residual,
    p_part,
    solvable_radical,
    sylow_subgroup,
)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Witness:
    description: str
    order: int = 0
    index: int = 0
    index_class: str = "other"
    supersolvable: bool = False
    generators: list = field(default_factory=list)

    @classmethod
    def from_report(cls, description, report):
        return cls(
            description=description,
            order=report.order,
            index=report.index,
            index_class=report.index_class,
            supersolvable=bool(report.is_supersolvable),
            generators=[g.array.tolist() for g in report.subgroup.sub.generators],
        )

    @classmethod
    def subgroup(cls, description, G, H, supersolvable):
        index = G.order() // H.order()
        return cls(description, H.order(), index, index_class(index), bool(supersolvable), [g.array.tolist() for g in H.generators])

    def as_dict(self):
        return {
            "description": self.description,
            "order": int(self.order),
            "index": int(self.index),
            "index_class": self.index_class,
            "supersolvable": bool(self.supersolvable),
            "generators": [[int(x) for x in g] for g in self.generators],
        }


@dataclass
class CheckResult:
    check_id: str
    status: str
    witnesses: list = field(default_factory=list)
    elapsed_ms: int = 0
    notes: list = field(default_factory=list)
    data: dict = field(default_factory=dict)  # structured details for tests; not serialised

    def __post_init__(self):
        if self.status == FAIL and not self.witnesses:
            raise ValueError(f"{self.check_id}: a failing check must carry a witness")
        if self.status == SKIPPED and not self.notes:
            raise ValueError(f"{self.check_id}: a skipped check must say which bound was hit")

    @property
    def passed(self):
        return self.status == PASS

    def as_dict(self):
        return {
            "id": self.check_id,
            "status": self.status,
            "elapsed_ms": int(self.elapsed_ms),
            "notes": list(self.notes),
            "witnesses": [w.as_dict() for w in self.witnesses],
        }


class _Check:
    """Collects findings while a check runs, then freezes them into a result."""

    def __init__(self, check_id):
        self.check_id = check_id
        self.t0 = time.perf_counter()
        self.notes = []
        self.witnesses = []
        self.failures = []
        self.data = {}

    def note(self, text):
        self.notes.append(text)

    def require(self, ok, text, witness=None):
        """Record a sub-assertion; a failed one becomes a failure witness."""
        if not ok:
            self.failures.append(text)
            self.witnesses.append(witness or Witness(f"FAILED: {text}"))
        return ok

    def result(self, skipped=None):
        ms = int((time.perf_counter() - self.t0) * 1000)
        if skipped:
            return CheckResult(self.check_id, SKIPPED, self.witnesses, ms, self.notes + [skipped], self.data)
        status = FAIL if self.failures else PASS
        return CheckResult(self.check_id, status, self.witnesses, ms, self.notes, self.data)


# ---------------------------------------------------------------------------
# hypothesis


@dataclass
class HypothesisVerdict:
    group_id: str
    satisfied: bool
    reports: list
    violating: list

    def __post_init__(self):
        assert self.satisfied == (not self.violating)


def hypothesis_check(G, group_id=None, mode="auto", candidates=None):
    """Is every maximal subgroup supersolvable or of prime / prime-squared index?

    With ``candidates`` (witness mode) only the supplied subgroups are
    classified; each must be certified maximal first.
    """
    gid = group_id or G.name or repr(G)
    if candidates is not None:
        reports = []
        for H in candidates:
            H = H.sub if isinstance(H, SubgroupRef) else H
            if not is_maximal(G, H):
                raise InputError("witness-mode candidate is not maximal")
            index = G.order() // H.order()
            ss = _is_supersolvable_chief(H)
            reports.append(MaximalSubgroupReport(SubgroupRef(G, H), index, index_class(index), ss, fingerprint(H)))
    else:
        reports = maximal_subgroups(G, mode=mode)
    violating = [r for r in reports if r.violates]
    return HypothesisVerdict(gid, not violating, reports, violating)


def _describe(r):
    name = fingerprint_name(r.fingerprint) if r.fingerprint else None
    shape = f" ({name})" if name else ""
    ss = "supersolvable" if r.is_supersolvable else "non-supersolvable"
    return f"order {r.order}{shape}, index {r.index} [{r.index_class}], {ss}"


# ---------------------------------------------------------------------------
# simple groups


SATISFIED_ORDERS = frozenset({60, 168, 504, 660})


def theorem_b_scan(max_order=10_000, mode="two-generated"):
    """Hypothesis check over every catalog simple group of order <= ``max_order``."""
    c = _Check("theorem-b")
    if max_order > 10_000:
        return c.result(skipped=f"max_order {max_order} exceeds the catalog completeness bound 10000")
    entries = atlas.simple_catalog(max_order)
    satisfied = []
    for e in entries:
        G = e.construct()
        c.require(G.order() == e.order, f"{e.name}: constructed order {G.order()} != {e.order}")
        try:
            v = hypothesis_check(G, e.name, mode=mode)
        except ResourceBoundError as err:
            c.require(False, f"{e.name}: {err}")
            continue
        if v.satisfied:
            satisfied.append(e.name)
            c.note(f"{e.name} (order {e.order}): satisfied; {len(v.reports)} maximal classes")
        else:
            shapes = sorted({(r.order, r.index) for r in v.violating}, key=lambda s: (s[1], -s[0]))
            c.note(f"{e.name} (order {e.order}): violated; violating (order, index) = {shapes}")
        c.require(v.satisfied == e.expected_satisfied, f"{e.name}: verdict {v.satisfied} != expected {e.expected_satisfied}")
        if e.expected_witness is not None:
            match = [r for r in v.violating if (r.order, r.index) == e.expected_witness]
            if c.require(bool(match), f"{e.name}: expected witness {e.expected_witness} not among violators"):
                c.witnesses.append(Witness.from_report(f"{e.name}: {_describe(match[0])}", match[0]))
    expected = sorted(e.name for e in entries if e.order in SATISFIED_ORDERS)
    c.require(sorted(satisfied) == expected, f"satisfied set {sorted(satisfied)} != {expected}")
    c.data["satisfied"] = satisfied
    return c.result()


# ---------------------------------------------------------------------------
# branch identification for non-solvable groups


def _psl2_order(q):
    return q * (q * q - 1) // (1 if q % 2 == 0 else 2)


def _branch_iii_orders():
    """``|PSL2(p^(2^a))|`` for odd p <= 127, a <= 3, with the mod-8 condition at a = 0."""
    out = {}
    for p in range(3, 128, 2):
        if not is_prime(p):
            continue
        for a in range(4):
            if a == 0 and p % 8 not in (1, 7):
                continue
            q = p ** (2**a)
            out[_psl2_order(q)] = (p, a)
    return out


def is_simple(G):
    if G.order() == 1:
        return False
    t = G.table()
    from .structure import _class_reps

    rows = [g.array for g in G.generators]
    return all(t.normal_closure([int(r)], rows).size == t.size for r in _class_reps(G) if r != t.identity)


BRANCH_II = {"Sym(5)": 120, "PGL2(7)": 336, "PGammaL2(8)": 1512}


def theorem_a_branch(G, seed=0, mode="auto"):
    """``(branch, verdict, detail)`` with branch in ``i, ii, iii, not-applicable, fail``."""
    if is_solvable(G):
        return "not-applicable", None, "solvable"
    v = hypothesis_check(G, mode=mode)
    if not v.satisfied:
        return "not-applicable", v, "hypothesis violated: " + "; ".join(_describe(r) for r in v.violating)
    S = solvable_radical(G, seed).sub
    if not _is_supersolvable_chief(S):
        return "fail", v, f"solvable radical of order {S.order()} is not supersolvable"
    Q = G if S.order() == 1 else quotient_group(G, S)[0]
    if Q.order() in SATISFIED_ORDERS and is_simple(Q):
        return "i", v, f"G/S(G) simple of order {Q.order()}"
    name = fingerprint_name(fingerprint(Q)) if Q.order() in BRANCH_II.values() else None
    if name in BRANCH_II:
        return "ii", v, f"G/S(G) has the fingerprint of {name}"
    O2 = o_p_residual(G, 2).sub
    if S.order() < O2.order() < G.order():
        table = _branch_iii_orders()
        nonab = [f.order for f in chief_series(G).factors if f.kind == "nonabelian"]
        if nonab and all(o in table for o in nonab):
            pa = ", ".join(f"{o} = |PSL2({table[o][0]}^{2 ** table[o][1]})|" for o in nonab)
            return "iii", v, f"S(G) < O^2(G) < G; nonabelian chief factors {pa}"
    return "fail", v, "no branch matches"


THEOREM_A_CORPUS = (
    ("sym(5)", "ii"),
    ("pgl2(7)", "ii"),
    ("pgammal2(8)", "ii"),
    ("alt(5)", "i"),
    ("psl2(7)", "i"),
    ("psl2(8)", "i"),
    ("psl2(11)", "i"),
    ("dp(sym(3),alt(5))", "i"),
    ("dp(cyclic(2),sym(5))", "ii"),
    ("pgl2(17)", "iii"),
    ("pgl2(9)", "not-applicable"),
    ("pgl2(11)", "not-applicable"),
    ("sym(4)", "not-applicable"),
)


def theorem_a_check(G, expected=None, group_id=None, seed=0):
    gid = group_id or G.name
    c = _Check(f"theorem-a:{gid}")
    if G.order() > TWO_GEN_BOUND:
        return c.result(skipped=f"|G| = {G.order()} exceeds the maximal-subgroup bound {TWO_GEN_BOUND}")
    branch, v, detail = theorem_a_branch(G, seed)
    c.note(f"branch: {branch} ({detail})")
    c.data["branch"] = branch
    c.require(branch != "fail", f"{gid}: {detail}")
    if expected is not None:
        c.require(branch == expected, f"{gid}: branch {branch} != expected {expected}")
    if v is not None:
        for r in v.violating[:1]:
            c.witnesses.append(Witness.from_report(f"{gid}: {_describe(r)}", r))
    return c.result()


def theorem_a_corpus_check(groups=None, seed=0):
    """Branch identification over the corpus (or the given expressions)."""
    c = _Check("theorem-a")
    items = [(g, None) for g in groups] if groups else THEOREM_A_CORPUS
    for expr, expected in items:
        r = theorem_a_check(atlas.parse_group_expr(expr), expected, expr, seed)
        c.notes.extend(f"{expr}: {n}" for n in r.notes)
        c.witnesses.extend(r.witnesses if r.status == FAIL else [])
        if r.status == FAIL:
            c.failures.append(expr)
        c.data[expr] = r.data.get("branch")
    return c.result()


# ---------------------------------------------------------------------------
# Sylow normalisers of PSL2(q)

DEFAULT_Q = (5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27)


def _cyclic_quotient_order(N, R):
    """Order of ``N/R`` if it is cyclic, else None."""
    if N.order() == R.order():
        return 1
    Q, _ = quotient_group(N, R)
    m = Q.order()
    return m if int(Q.table().orders.max()) == m else None


def _normal_cyclic_of_order(N, m):
    t = N.table()
    rows = [g.array for g in N.generators]
    for i in np.flatnonzero(t.orders == m):
        C = t.closure([int(i)])
        inside = t.mask(C)
        if all(inside[t.conj_map(g)[C]].all() for g in rows):
            return True
    return False


def sylow_normalizer_case(q, r):
    p = prime_factors(q)[0]
    d = 2 if q % 2 else 1
    if r == p:
        return "1"
    if r == 2:
        return "4.1" if q % 8 in (1, 7) else "4.2"
    if ((q + 1) // d) % r == 0:
        return "2"
    return "3"


def sylow_normalizer_profile(q_list=DEFAULT_Q, seed=0):
    c = _Check("lemma-sylow")
    for q in q_list:
        G = atlas.psl2(q)
        d = 2 if q % 2 else 1
        for r in prime_factors(G.order()):
            R = sylow_subgroup(G, r, seed).sub
            N = normalizer(G, R).sub
            case = sylow_normalizer_case(q, r)
            tag = f"q={q}, r={r}"
            desc = f"{tag}: case {case}, |R| = {R.order()}, |N| = {N.order()}"
            wit = Witness.subgroup(f"N(R) for {tag}", G, N, _is_supersolvable_chief(N))
            if case == "1":
                m = (q - 1) // d
                ok = N.order() == q * m and is_normal(N, R) and _cyclic_quotient_order(N, R) == m
                c.require(ok, f"{desc}: expected R:C{m} of order {q * m}", wit)
            elif case in ("2", "3"):
                m = (q + 1) // d if case == "2" else (q - 1) // d
                ok = N.order() == 2 * m and _normal_cyclic_of_order(N, m)
                c.require(ok, f"{desc}: expected C{m}:C2", wit)
            elif case == "4.1":
                c.require(N.order() == R.order(), f"{desc}: expected N = R", wit)
            else:
                name = fingerprint_name(fingerprint(N))
                desc += f", N = {name}"
                c.require(name == "Alt(4)", f"{desc}: expected Alt(4)", wit)
            c.note(desc)
            c.data[(q, r)] = (case, N.order())
    return c.result()


def case22_sylow_facts(seed=0):
    c = _Check("case22")
    for p in (2, 3):
        G = atlas.psl2(2**p)
        N = normalizer(G, sylow_subgroup(G, 2, seed)).sub
        want = 2**p * (2**p - 1)
        ss = _is_supersolvable_chief(N)
        c.require(N.order() == want and not ss, f"PSL2({2 ** p}): |N| = {N.order()} (want {want}), supersolvable={ss}")
        c.note(f"PSL2({2 ** p}): Sylow-2 normaliser of order {N.order()}, non-supersolvable={not ss}")
    for q, want_alt4 in [(27, True), (5, True), (11, True), (13, True), (19, True), (7, False), (9, False), (17, False), (23, False), (25, False)]:
        G = atlas.psl2(q)
        N = normalizer(G, sylow_subgroup(G, 2, seed)).sub
        name = fingerprint_name(fingerprint(N))
        ss = _is_supersolvable_chief(N)
        if want_alt4:
            c.require(name == "Alt(4)" and not ss, f"PSL2({q}): Sylow-2 normaliser {name}, supersolvable={ss}")
        else:
            c.require(ss, f"PSL2({q}): Sylow-2 normaliser of order {N.order()} is not supersolvable")
        c.note(f"PSL2({q}): Sylow-2 normaliser order {N.order()} ({name or 'unnamed'}), supersolvable={ss}")
    c.note("informational: 27 = 3^3 is congruent to 3 mod 8, so the Alt(4) normaliser comes from the "
           "q = ±3 (mod 8) case of the PSL2 Sylow-normaliser table, not the q = ±1 (mod 8) case")
    return c.result()


# ---------------------------------------------------------------------------
# wreath-product witnesses


def _copy_gens(H, copy, width):
    """Generators of ``H`` (degree ``width``) acting on block ``copy``."""
    out = []
    for h in H.generators:
        img = np.arange(2 * width)
        img[copy * width : (copy + 1) * width] = copy * width + h.array
        out.append(Permutation(img))
    return out


def _diag_gens(X, width):
    return [Permutation(np.concatenate([x.array, width + x.array])) for x in X.generators]


def _d_times_a(S):
    G = atlas.wreath_product(S, atlas.cyclic(2))
    W = PermGroup(_diag_gens(S, S.degree) + [atlas.swap_copies(S.degree)], degree=2 * S.degree)
    return G, W


def _h_wr_a(X, H):
    G = atlas.wreath_product(X, atlas.cyclic(2))
    W = PermGroup(_copy_gens(H, 0, X.degree) + [atlas.swap_copies(X.degree)], degree=2 * X.degree)
    return G, W


def _dihedral_24_in_pgl2_11():
    X = atlas.pgl2(11)
    t = X.table()
    x = int(np.flatnonzero(t.orders == 12)[0])
    C = X.subgroup_from_indices(t.closure([x]))
    return X, normalizer(X, C).sub


def _borel_pgl2_7():
    X = atlas.pgl2(7)
    return X, PermGroup(X.generators[:2], degree=X.degree)  # x+1 and λx fix ∞


def _s4_normaliser_in_aut_psl3_3():
    """Normaliser in Aut(PSL3(3)) of the monomial Sym(4) of SL3(3)."""
    X = atlas.aut_psl3_3()
    mats = [
        [[2, 0, 0], [0, 2, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[0, 2, 0], [2, 0, 0], [0, 0, 2]],
    ]
    S4 = PermGroup([atlas.sl3_3_point_line_perm(m) for m in mats], degree=26)
    return X, S4, normalizer(X, S4).sub


def wreath_constructions():
    """``(label, ambient, witness, expected index)`` for every witness construction."""
    out = []
    G, W = _d_times_a(atlas.alt(5))
    out.append(("DxA in Alt(5) wr C2", G, W, 60))
    X = atlas.sym(5)
    H = PermGroup([Permutation.from_cycles(5, c) for c in ([(0, 1)], [(0, 1, 2)], [(3, 4)])], degree=5)
    G, W = _h_wr_a(X, H)
    out.append(("(Sym(3)xSym(2)) wr A in Sym(5) wr C2", G, W, 100))
    S, X = atlas.alt(5), atlas.sym(5)
    G = atlas.nla_like(S, X)
    W = PermGroup(_diag_gens(X, 5) + [atlas.swap_copies(5)], degree=10)
    out.append(("LA in NLA(Alt(5), Sym(5))", G, W, 60))
    G, W = _d_times_a(atlas.psl2(11))
    out.append(("DxA in PSL2(11) wr C2", G, W, 660))
    X, D24 = _dihedral_24_in_pgl2_11()
    G, W = _h_wr_a(X, D24)
    out.append(("D24 wr A in PGL2(11) wr C2", G, W, 3025))
    G, W = _d_times_a(atlas.psl2(7))
    out.append(("DxA in PSL2(7) wr C2", G, W, 168))
    X, B = _borel_pgl2_7()
    G, W = _h_wr_a(X, B)
    out.append(("(C7:C6) wr A in PGL2(7) wr C2", G, W, 64))
    G, W = _d_times_a(atlas.psl3_3())
    out.append(("DxA in PSL3(3) wr C2", G, W, 5616))
    X, _, H48 = _s4_normaliser_in_aut_psl3_3()
    G, W = _h_wr_a(X, H48)
    out.append(("H wr A in Aut(PSL3(3)) wr C2, |H| = 48", G, W, 234**2))
    return out


def wreath_witness_checks():
    c = _Check("wreath-witnesses")
    for label, G, W, want in wreath_constructions():
        index = G.order() // W.order()
        maximal = is_maximal(G, W)
        ss = _is_supersolvable_chief(W)
        cls = index_class(index)
        wit = Witness.subgroup(label, G, W, ss)
        ok = maximal and not ss and cls == "other" and index == want
        c.require(ok, f"{label}: index {index} (want {want}), maximal={maximal}, supersolvable={ss}, class={cls}", wit)
        c.note(f"{label}: |G| = {G.order()}, |W| = {W.order()}, index {index} [{cls}], maximal={maximal}, supersolvable={ss}")
        c.data[label] = (index, maximal, ss)
    X, S4, H = _s4_normaliser_in_aut_psl3_3()
    name = fingerprint_name(fingerprint(H))
    c.require(is_maximal(atlas.psl3_3_on_26(), S4), "monomial Sym(4) is not maximal in PSL3(3)")
    c.require(is_maximal(X, H), "order-48 normaliser is not maximal in Aut(PSL3(3))")
    c.note(f"order-48 witness in Aut(PSL3(3)) has the fingerprint of {name}; as a split extension "
           f"Sym(4):C2 it is the direct product (the C2 centralises Sym(4))" if name == "Sym(4)xC2"
           else f"order-48 witness in Aut(PSL3(3)) fingerprint: {name}; neither Sym(4)xC2 nor a named split extension")
    c.note("index of H wr A for |H| = 48 is 234^2 = 54756; 117^2 = 13689 would require |H| = 96")
    return c.result()


# ---------------------------------------------------------------------------
# wreath-product supersolvability criterion


def exponent_mod(B, Q):
    """Exponent of ``B/Q`` for a normal subgroup ``Q``."""
    if Q.order() == B.order():
        return 1
    from math import lcm

    if Q.order() == 1:
        return lcm(*[int(o) for o in np.unique(B.table().orders)])
    Qg, _ = quotient_group(B, Q)
    return lcm(*[int(o) for o in np.unique(Qg.table().orders)])


def durbin_criterion(A, B, sign):
    """Predicted supersolvability of ``A ≀ B`` with congruence sign ``±1``."""
    if sign not in (1, -1):
        raise InputError("sign must be +1 or -1")
    if A.order() == 1:
        return _is_supersolvable_chief(B)
    if not is_nilpotent(A):
        return False
    from .structure import derived_subgroup, is_abelian

    if not is_abelian(B):
        Bd = derived_subgroup(B).sub
        ps = prime_factors(Bd.order())
        pa = prime_factors(A.order())
        if not (len(ps) == 1 and pa == ps):
            return False
    for qd in prime_factors(A.order()):
        Q = sylow_subgroup(B, qd).sub if B.order() % qd == 0 else PermGroup((), degree=B.degree)
        m = exponent_mod(B, Q)
        if (qd - sign) % m:
            return False
    return True


def _durbin_factors():
    A = [(f"C{k}", lambda k=k: atlas.cyclic(k)) for k in range(2, 9)]
    A += [("Sym(3)", lambda: atlas.sym(3)), ("D8", lambda: atlas.dihedral(4)), ("Alt(4)", lambda: atlas.alt(4)), ("Q8", atlas.quaternion)]
    B = [(f"C{k}", lambda k=k: atlas.cyclic(k)) for k in range(2, 9)]
    B += [("Sym(3)", lambda: atlas.sym(3)), ("D8", lambda: atlas.dihedral(4)), ("Alt(4)", lambda: atlas.alt(4))]
    return A, B


def durbin_corpus(max_order=5000):
    out = []
    As, Bs = _durbin_factors()
    for an, af in As:
        A = af()
        for bn, bf in Bs:
            B = bf()
            if A.order() ** B.degree * B.order() <= max_order and A.degree * B.degree <= atlas.MAX_WREATH_DEGREE:
                out.append((f"{an} wr {bn}", A, B))
    return out


def durbin_crosscheck(max_order=5000):
    c = _Check("durbin")
    corpus = durbin_corpus(max_order)
    direct = {}
    disagree = {1: [], -1: []}
    for label, A, B in corpus:
        W = atlas.wreath_product(A, B)
        ss = _is_supersolvable_chief(W)
        direct[label] = ss
        for sign in (1, -1):
            if durbin_criterion(A, B, sign) != ss:
                disagree[sign].append(label)
    consistent = [s for s in (1, -1) if not disagree[s]]
    c.note(f"corpus: {len(corpus)} wreath products of order <= {max_order}, "
           f"{sum(direct.values())} supersolvable by the chief-series oracle")
    for s in (1, -1):
        c.note(f"sign {s:+d}: {len(disagree[s])} disagreements" + (f" ({', '.join(disagree[s])})" if disagree[s] else ""))
    if c.require(len(consistent) == 1, f"{len(consistent)} signs are consistent with the oracle"):
        s = consistent[0]
        c.note(f"adjudicated sign: {s:+d}; criterion agrees with the oracle on {len(corpus)}/{len(corpus)} pairs")
        c.data["sign"] = s
    c.data["disagreements"] = disagree
    c.data["corpus_size"] = len(corpus)
    return c.result()


# ---------------------------------------------------------------------------
# diagonal correspondence


def _overgroups_of_diagonal(G):
    """Sorted index arrays of all subgroups of G x G containing the diagonal."""
    P = atlas.direct_product(G, G)
    D = atlas.diagonal_subgroup(G).sub
    t = P.table()
    d = G.degree
    dgens = [int(i) for i in t.index(np.stack([g.array for g in D.generators]))]
    # <D, x> depends only on the double coset DxD; (1, g) over class reps of G covers them
    from .structure import _class_reps

    Gt = G.table()
    xs = []
    for r in _class_reps(G):
        row = np.concatenate([np.arange(d), d + Gt.row(r)])
        xs.append(int(t.index(row[None, :])[0]))
    start = t.closure(dgens)
    seen = {start.tobytes(): start}
    queue = [(start, dgens)]
    while queue:
        H, gens = queue.pop()
        inside = t.mask(H)
        for x in xs:
            if inside[x]:
                continue
            K = t.closure(gens + [x])
            if K.tobytes() not in seen:
                seen[K.tobytes()] = K
                queue.append((K, gens + [x]))
    return P, D, list(seen.values())


def _normal_subgroups(G):
    from .structure import _class_reps

    t = G.table()
    rows = [g.array for g in G.generators]
    reps = [int(r) for r in _class_reps(G)]
    found = {}
    queue = [np.array([t.identity])]
    found[queue[0].tobytes()] = queue[0]
    while queue:
        N = queue.pop()
        inside = t.mask(N)
        gens = t.generators_of(N)
        for r in reps:
            if inside[r]:
                continue
            M = t.normal_closure(gens + [r], rows)
            if M.tobytes() not in found:
                found[M.tobytes()] = M
                queue.append(M)
    return list(found.values())


def diagonal_correspondence_check(groups=None):
    c = _Check("diagonal")
    groups = groups or [
        ("C6", atlas.cyclic(6)), ("Sym(3)", atlas.sym(3)), ("D8", atlas.dihedral(4)),
        ("Q8", atlas.quaternion()), ("Alt(4)", atlas.alt(4)), ("Sym(4)", atlas.sym(4)),
    ]
    for name, G in groups:
        if G.order() > 120:
            c.note(f"{name}: count skipped (|G| = {G.order()} > 120)")
            continue
        normals = _normal_subgroups(G)
        P, D, overs = _overgroups_of_diagonal(G)
        # K -> {(x, y) : x^-1 y in K} as an index set of P
        t, Gt = P.table(), G.table()
        images = set()
        for K in normals:
            kmask = Gt.mask(K)
            # (x, y) with y = x k: x over G, k over K
            rows = []
            for x in range(Gt.size):
                xk = Gt.mul(np.full(K.size, x), K)
                rows.append(np.concatenate([np.repeat(Gt.rows([x]), K.size, axis=0), G.degree + Gt.rows(xk)], axis=1))
            idx = np.sort(t.index(np.concatenate(rows)))
            images.add(idx.tobytes())
            del kmask
        over_keys = {H.tobytes() for H in overs}
        ok = len(normals) == len(overs) and images == over_keys
        c.require(ok, f"{name}: {len(normals)} normal subgroups vs {len(overs)} overgroups of the diagonal")
        c.note(f"{name}: {len(normals)} normal subgroups <-> {len(overs)} subgroups containing the diagonal")
        c.data[name] = (len(normals), len(overs))
    for name, G, simple in [("Alt(5)", atlas.alt(5), True), ("Sym(4)", atlas.sym(4), False)]:
        ref = atlas.diagonal_subgroup(G)
        maximal = is_maximal(ref.ambient, ref.sub)
        wit = Witness.subgroup(f"diagonal of {name}^2", ref.ambient, ref.sub, _is_supersolvable_chief(ref.sub))
        c.require(maximal == simple, f"{name}: diagonal maximal={maximal}, simple={simple}", wit)
        c.note(f"{name}^2: diagonal maximal={maximal} (G simple={simple})")
        c.data[f"{name}-maximal"] = maximal
    return c.result()


# ---------------------------------------------------------------------------
# property suites over the small corpus


def small_corpus():
    """``(label, constructor)`` for the corpus of groups of order <= 2000."""
    P = atlas.parse_group_expr
    return [
        ("Sym(3)", lambda: atlas.sym(3)),
        ("Sym(4)", lambda: atlas.sym(4)),
        ("Alt(4)", lambda: atlas.alt(4)),
        ("Alt(5)", lambda: atlas.alt(5)),
        ("Sym(5)", lambda: atlas.sym(5)),
        ("C6", lambda: atlas.cyclic(6)),
        ("D8", lambda: atlas.dihedral(4)),
        ("D10", lambda: atlas.dihedral(5)),
        ("D12", lambda: atlas.dihedral(6)),
        ("Q8", atlas.quaternion),
        ("F20", lambda: atlas.affine_group(5, 4)),
        ("C7:C6", lambda: atlas.affine_group(7, 6)),
        ("F56", lambda: atlas.affine_group(8, 7)),
        ("AGL1(9)", lambda: atlas.affine_group(9)),
        ("PSL2(7)", lambda: atlas.psl2(7)),
        ("PSL2(8)", lambda: atlas.psl2(8)),
        ("PSL2(11)", lambda: atlas.psl2(11)),
        ("PGL2(7)", lambda: atlas.pgl2(7)),
        ("Alt(6)", lambda: atlas.alt(6)),
        ("dp(sym(3),sym(3))", lambda: P("dp(sym(3),sym(3))")),
        ("dp(alt(4),cyclic(2))", lambda: P("dp(alt(4),cyclic(2))")),
        ("dp(sym(4),cyclic(2))", lambda: P("dp(sym(4),cyclic(2))")),
        ("dp(sym(3),alt(5))", lambda: P("dp(sym(3),alt(5))")),
        ("wr(cyclic(2),cyclic(2))", lambda: P("wr(cyclic(2),cyclic(2))")),
        ("wr(cyclic(3),cyclic(2))", lambda: P("wr(cyclic(3),cyclic(2))")),
        ("wr(cyclic(3),cyclic(4))", lambda: P("wr(cyclic(3),cyclic(4))")),
        ("wr(sym(3),cyclic(2))", lambda: P("wr(sym(3),cyclic(2))")),
        ("wr(cyclic(2),sym(3))", lambda: P("wr(cyclic(2),sym(3))")),
        ("wr(cyclic(2),alt(4))", lambda: P("wr(cyclic(2),alt(4))")),
    ]


def _class_signature(reports):
    return sorted((r.order, r.index, r.fingerprint.histogram if r.fingerprint else ()) for r in reports)


def solvability_property_checks(max_order=LATTICE_BOUND):
    """Hall, Doerk, Huppert and lattice/two-generated agreement on the small corpus."""
    c = _Check("solvability")
    hall_hits, doerk_hits = [], []
    for label, make in small_corpus():
        G = make()
        if G.order() > max_order:
            continue
        lat = maximal_subgroups(G, mode="lattice")
        two = maximal_subgroups(G, mode="two-generated")
        c.require(_class_signature(lat) == _class_signature(two),
                  f"{label}: lattice mode finds {len(lat)} maximal classes, two-generated mode {len(two)}")
        solvable = is_solvable(G)
        ss = _is_supersolvable_chief(G)
        huppert = all(r.index_class == "prime" for r in lat)
        c.require(ss == huppert, f"{label}: chief-series supersolvable={ss} but Huppert criterion={huppert}")
        if all(r.index_class in ("prime", "prime_squared") for r in lat):
            hall_hits.append(label)
            c.require(solvable, f"{label}: all maximal indices prime or prime squared but not solvable")
        if not ss and all(r.is_supersolvable for r in lat):
            doerk_hits.append(label)
            c.require(solvable, f"{label}: minimal non-supersolvable but not solvable")
        if ss:
            c.require(solvable, f"{label}: supersolvable but not solvable")
    c.require(bool(hall_hits), "no corpus group instantiates the prime/prime-squared index premise")
    c.require(bool(doerk_hits), "no corpus group instantiates the minimal non-supersolvable premise")
    c.note(f"prime/prime-squared index premise holds for: {', '.join(hall_hits)}; all solvable")
    c.note(f"minimal non-supersolvable: {', '.join(doerk_hits)}; all solvable")
    if not any("Huppert" in f for f in c.failures):
        c.note("chief-series supersolvability agrees with the maximal-index criterion on every corpus group")
    if not any("two-generated" in f for f in c.failures):
        c.note("lattice and two-generated maximal-subgroup modes agree on every corpus group")
    c.data.update(hall=hall_hits, doerk=doerk_hits)
    return c.result()


# ---------------------------------------------------------------------------
# almost simple extensions


EXTENSION_EXPECTATIONS = (
    # (expression, satisfied, required witness (order, index) or None)
    ("sym(5)", True, None),
    ("pgl2(7)", True, None),
    ("pgammal2(8)", True, None),
    ("pgl2(11)", False, (24, 55)),
    ("aut_psl3_3", False, (48, 234)),
    ("psl3_3", False, (24, 234)),
)


def extension_consistency_checks(seed=0):
    c = _Check("extensions")
    for expr, want_sat, want_wit in EXTENSION_EXPECTATIONS:
        G = atlas.parse_group_expr(expr)
        if G.order() > TWO_GEN_BOUND:
            c.note(f"{expr}: skipped (|G| = {G.order()} > {TWO_GEN_BOUND})")
            continue
        v = hypothesis_check(G, expr)
        c.require(v.satisfied == want_sat, f"{expr}: satisfied={v.satisfied}, expected {want_sat}")
        if want_wit is not None:
            match = [r for r in v.violating if (r.order, r.index) == want_wit]
            if c.require(bool(match), f"{expr}: no violating maximal subgroup of (order, index) = {want_wit}"):
                c.witnesses.append(Witness.from_report(f"{expr}: {_describe(match[0])}", match[0]))
        summary = "; ".join(_describe(r) for r in v.reports)
        c.note(f"{expr}: {'satisfied' if v.satisfied else 'violated'} — {summary}")
        rad = solvable_radical(G, seed).order()
        c.require(rad == 1, f"{expr}: solvable radical of order {rad}")
    S5 = atlas.sym(5)
    o2 = o_p_residual(S5, 2).sub
    c.require(o2.order() == 60 and o2.is_subgroup_of(atlas.alt(5)), "O^2(Sym(5)) is not Alt(5)")
    c.note("O^2(Sym(5)) = Alt(5); solvable radical trivial for every group above")
    return c.result()


# ---------------------------------------------------------------------------
# dispatcher

CHECKS = {
    "theorem-a": lambda cfg: theorem_a_corpus_check(cfg.get("groups"), cfg.get("seed", 0)),
    "theorem-b": lambda cfg: theorem_b_scan(cfg.get("max_order", 10_000)),
    "lemma-sylow": lambda cfg: sylow_normalizer_profile(cfg.get("q_list") or DEFAULT_Q, cfg.get("seed", 0)),
    "case22": lambda cfg: case22_sylow_facts(cfg.get("seed", 0)),
    "wreath-witnesses": lambda cfg: wreath_witness_checks(),
    "durbin": lambda cfg: durbin_crosscheck(min(cfg.get("max_order", 5000), 5000)),
    "diagonal": lambda cfg: diagonal_correspondence_check(),
    "solvability": lambda cfg: solvability_property_checks(),
    "extensions": lambda cfg: extension_consistency_checks(cfg.get("seed", 0)),
}


def run_check(name, cfg=None):
    cfg = cfg or {}
    c = _Check(name)
    try:
        return CHECKS[name](cfg)
    except ResourceBoundError as err:
        return c.result(skipped=f"resource bound: {err}")
    except ConsistencyError as err:
        c.require(False, f"internal consistency: {err}")
        return c.result()
