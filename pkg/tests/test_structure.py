from collections import Counter

import pytest

from maxsub import atlas
from maxsub.errors import ResourceBoundError
from maxsub.group import PermGroup, is_normal, normalizer
from maxsub.perm import Permutation
from maxsub.structure import (
    abelian_invariants,
    all_subgroups,
    center,
    chief_series,
    derived_length,
    derived_subgroup,
    fingerprint,
    fingerprint_name,
    index_class,
    is_nilpotent,
    is_perfect,
    is_solvable,
    is_supersolvable,
    maximal_subgroups,
    minimal_normal_subgroups,
    o_p_residual,
    p_core,
    solvable_radical,
    sylow_subgroup,
)

import oracles

SMALL = {
    "Sym(3)": lambda: atlas.sym(3),
    "Sym(4)": lambda: atlas.sym(4),
    "Alt(4)": lambda: atlas.alt(4),
    "Alt(5)": lambda: atlas.alt(5),
    "D8": lambda: atlas.dihedral(4),
    "Q8": atlas.quaternion,
    "F20": lambda: atlas.affine_group(5, 4),
    "C3 wr C2": lambda: atlas.wreath_product(atlas.cyclic(3), atlas.cyclic(2)),
    "Sym(3)xC2": lambda: atlas.direct_product(atlas.sym(3), atlas.cyclic(2)),
    "Alt(4)xC2": lambda: atlas.direct_product(atlas.alt(4), atlas.cyclic(2)),
}


def _oracle_set(G):
    return oracles.elements([g.images for g in G.generators], G.degree)


def test_index_class():
    assert [index_class(n) for n in (2, 9, 25, 64, 6, 1, 3025, 13689)] == [
        "prime", "prime_squared", "prime_squared", "other", "other", "other", "other", "other"]


def test_derived_series():
    assert derived_length(atlas.sym(4)) == 3
    assert is_solvable(atlas.sym(4))
    assert is_perfect(atlas.alt(5))
    G = atlas.pgl2(7)
    assert not is_solvable(G) and not is_perfect(G)
    assert derived_subgroup(G).sub.same_as(atlas.psl2(7)) or derived_subgroup(G).order() == 168
    assert derived_length(atlas.alt(5)) is None


@pytest.mark.parametrize("expr,p,order", [("psl2(8)", 2, 8), ("psl2(11)", 11, 11), ("wr(sym(5),cyclic(2))", 2, 128), ("psl3_3", 3, 27)])
def test_sylow_orders(expr, p, order):
    G = atlas.parse_group_expr(expr)
    P = sylow_subgroup(G, p)
    assert P.order() == order
    assert P.sub.is_subgroup_of(G)


def test_sylow_seed_independence_of_order():
    G = atlas.pgl2(9)
    assert {sylow_subgroup(G, 2, seed=s).order() for s in range(5)} == {16}


def test_radicals_and_residuals():
    assert solvable_radical(atlas.sym(4)).order() == 24
    assert solvable_radical(atlas.sym(5)).order() == 1
    assert solvable_radical(atlas.direct_product(atlas.sym(3), atlas.alt(5))).order() == 6
    assert o_p_residual(atlas.sym(5), 2).sub.same_as(atlas.alt(5))
    G = atlas.pgammal2(8)
    assert o_p_residual(G, 2).order() == 1512
    assert o_p_residual(G, 3).order() == 504
    assert p_core(atlas.sym(4), 2).order() == 4
    assert p_core(atlas.alt(5), 2).order() == 1


def test_chief_series():
    assert [(f.order, f.kind) for f in chief_series(atlas.alt(4)).factors] == [(4, "elementary-abelian"), (3, "prime-cyclic")]
    assert [(f.order, f.kind) for f in chief_series(atlas.sym(5)).factors] == [(60, "nonabelian"), (2, "prime-cyclic")]
    cs = chief_series(atlas.sym(4))
    G = atlas.sym(4)
    assert all(is_normal(G, t) for t in cs.terms)
    prod = 1
    for o in cs.factor_orders():
        prod *= o
    assert prod == 24


@pytest.mark.parametrize("name", sorted(SMALL))
def test_chief_factors_match_oracle(name):
    G = SMALL[name]()
    want = sorted(oracles.chief_factor_orders(_oracle_set(G), G.degree))
    assert sorted(chief_series(G).factor_orders()) == want


def test_minimal_normal_subgroups_of_a5_squared():
    mins = minimal_normal_subgroups(atlas.direct_product(atlas.alt(5), atlas.alt(5)))
    assert sorted(m.order() for m in mins) == [60, 60]


def test_supersolvable_examples():
    assert is_supersolvable(atlas.sym(3))
    assert not is_supersolvable(atlas.alt(4))
    assert is_supersolvable(atlas.affine_group(7, 6))
    assert is_supersolvable(atlas.sym(4), cross_check=True) is False


@pytest.mark.parametrize("name", sorted(SMALL))
def test_supersolvable_matches_oracle(name):
    G = SMALL[name]()
    assert is_supersolvable(G) == oracles.is_supersolvable(_oracle_set(G), G.degree)


def test_nilpotent():
    assert is_nilpotent(atlas.dihedral(4))
    assert is_nilpotent(atlas.quaternion())
    assert not is_nilpotent(atlas.sym(3))


def test_maximal_subgroups_of_small_groups():
    reps = maximal_subgroups(atlas.alt(5))
    assert sorted(r.order for r in reps) == [6, 10, 12]
    assert sorted(r.index for r in reps) == [5, 6, 10]
    assert sorted(r.index for r in maximal_subgroups(atlas.psl2(8))) == [9, 28, 36]
    assert any(r.index == 11 and r.order == 60 for r in maximal_subgroups(atlas.psl2(11)))


@pytest.mark.parametrize("name", sorted(SMALL))
@pytest.mark.parametrize("mode", ["lattice", "two-generated"])
def test_maximal_classes_match_oracle(name, mode):
    G = SMALL[name]()
    Gset = _oracle_set(G)
    maxes = oracles.maximal_subgroups(Gset, G.degree)
    classes = oracles.conjugacy_classes_of_subgroups(maxes, Gset)
    want = Counter(len(H) for H in classes)
    got = Counter(r.order for r in maximal_subgroups(G, mode=mode))
    assert got == want


@pytest.mark.parametrize("name", ["Sym(4)", "Alt(4)", "D8", "C3 wr C2"])
def test_all_subgroup_classes_match_oracle(name):
    G = SMALL[name]()
    Gset = _oracle_set(G)
    classes = oracles.conjugacy_classes_of_subgroups(oracles.all_subgroups(Gset, G.degree), Gset)
    assert Counter(H.order() for H in all_subgroups(G)) == Counter(len(H) for H in classes)


def test_mode_bounds():
    with pytest.raises(ResourceBoundError):
        maximal_subgroups(atlas.psl2(17), mode="lattice")
    with pytest.raises(ResourceBoundError):
        maximal_subgroups(atlas.sym(8), mode="two-generated")


def test_fingerprints():
    fp = fingerprint(atlas.sym(4))
    assert dict(fp.histogram) == {1: 1, 2: 9, 3: 8, 4: 6}
    assert fp.derived_length == 3 and fp.center_order == 1
    assert fp.abelian_invariants == (2,)
    assert not fingerprint(atlas.alt(4)).is_supersolvable
    assert fingerprint_name(fp) == "Sym(4)"
    assert fingerprint_name(fingerprint(atlas.sym(3))) == "D6"
    assert fingerprint_name(fingerprint(atlas.cyclic(6))) is None


def test_sylow_2_normaliser_in_psl2_5_is_alt4():
    G = atlas.psl2(5)
    N = normalizer(G, sylow_subgroup(G, 2)).sub
    assert N.order() == 12
    assert fingerprint_name(fingerprint(N)) == "Alt(4)"


def test_abelian_invariants_and_centre():
    C2 = atlas.cyclic(2)
    G = atlas.direct_product(atlas.cyclic(4), atlas.cyclic(6))
    assert abelian_invariants(G) == (2, 12)
    assert abelian_invariants(atlas.direct_product(C2, C2)) == (2, 2)
    assert abelian_invariants(atlas.dihedral(4)) == (2, 2)
    assert center(atlas.quaternion()).order() == 2


def test_d12_aliases():
    name = fingerprint_name(fingerprint(atlas.dihedral(6)))
    assert name == "D12 = Sym(3)xSym(2)"
